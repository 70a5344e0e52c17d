import sys

from gofknots.cli import main

sys.exit(main())
