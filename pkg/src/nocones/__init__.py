"""String cones, tensor-product cones and their gluings, with exact lattice-point counts."""

__version__ = "0.1.0"
