"""centermatch: exact verification that three generator families coincide.

One ambient algebra E (tuples of parameter polynomials indexed by
r-multipartitions of n) receives generators from three constructions:
equivariant Chern images at torus fixed points, central characters of the
degenerate cyclotomic Hecke algebra, and Dunkl-Opdam spectra.  The package
builds each side independently with exact arithmetic and machine-checks the
identifications, together with the supporting filtration, Calogero-Moser,
wreath-product and invariant-ring computations.
"""

__version__ = "0.1.0"

from .poly import QQ, Poly, PolyRing, elem_sym_eval
from .cyclo import CycloNum, cyclo_field, cyclotomic_polynomial

__all__ = [
    "QQ",
    "Poly",
    "PolyRing",
    "CycloNum",
    "cyclo_field",
    "cyclotomic_polynomial",
    "elem_sym_eval",
    "__version__",
]
