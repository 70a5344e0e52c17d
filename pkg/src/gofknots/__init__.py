"""Genus one fibered knots on genus two Heegaard surfaces.

Subpackages and modules:

* :mod:`gofknots.words` -- cyclic words in the free group of rank two
* :mod:`gofknots.gl2z` -- integer matrices and GL(2, Z) conjugacy
* :mod:`gofknots.plumbing` -- fibered annuli and plumbing monodromy
* :mod:`gofknots.manifolds` -- lens spaces, families and the census
* :mod:`gofknots.diagrams` -- standard Heegaard diagrams and curves on them
"""

__version__ = "0.1.0"
