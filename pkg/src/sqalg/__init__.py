"""GF(2) polynomial algebras with Steenrod squares, Milnor operations and Groebner quotients."""

from .builtins import builtin_homs, builtin_presentations, get_presentation
from .errors import (
    BoundExceeded,
    NotDivisible,
    NotHomogeneous,
    ParseError,
    PresentationError,
    RingMismatch,
    SqAlgError,
    UnknownGenerator,
)
from .groebner import GREVLEX, GroebnerBasis, MonomialOrder, buchberger, normal_form, quotient_basis
from .milnor import a_matrix, d_operator, f_polys, g_poly, q_derivation, q_recursive
from .poly import Generator, Poly, PolyRing
from .series import series_coefficients
from .steenrod import AlgebraPresentation, RingHom, presentation_from_json, sq, tensor, total_sq
from .verify import VerificationReport, VerifyConfig, run_all

__all__ = [
    "AlgebraPresentation", "BoundExceeded", "GREVLEX", "Generator", "GroebnerBasis", "MonomialOrder",
    "NotDivisible", "NotHomogeneous", "ParseError", "Poly", "PolyRing", "PresentationError", "RingHom",
    "RingMismatch", "SqAlgError", "UnknownGenerator", "VerificationReport", "VerifyConfig",
    "a_matrix", "buchberger", "builtin_homs", "builtin_presentations", "d_operator", "f_polys", "g_poly",
    "get_presentation", "normal_form", "presentation_from_json", "q_derivation", "q_recursive",
    "quotient_basis", "run_all", "series_coefficients", "sq", "tensor", "total_sq",
]
