# Exact fixed-precision arithmetic in Q_p and its extensions

from .scalar import PadicScalar, is_square_in_qp, valuation_of
from .finite_field import FiniteField, FiniteFieldElem, residue_modulus
from .unramified import UnramifiedElem, teichmueller, teichmueller_modulus
from .eisenstein import EisensteinElem
from .functions import padic_exp, padic_log
from .number_field import UnramifiedRational, reduce_rational

__all__ = [
    "PadicScalar",
    "valuation_of",
    "is_square_in_qp",
    "FiniteField",
    "FiniteFieldElem",
    "residue_modulus",
    "UnramifiedElem",
    "teichmueller",
    "teichmueller_modulus",
    "EisensteinElem",
    "padic_exp",
    "padic_log",
    "UnramifiedRational",
    "reduce_rational",
]
