# p-adic Gamma functions, the Dwork exponential and their identities

from .morita import gamma_p, gamma_orbit_product
from .dwork import DworkCoeffs, dwork_coeffs, dwork_exp_eval, gamma_p_analytic, terms_for, valuation_bound
from .gross_koblitz import (
    GrossKoblitzReport,
    RobertIdentityReport,
    gross_koblitz_check,
    robert_identity_check,
    zeta_p_check,
)
from .diamond import diamond_Gp, diamond_convergence_report, diamond_telescoping_check, log_gamma_combination
from .cm import (
    CmDiscriminantRow,
    CmGammaProduct,
    class_number,
    cm_gamma_product,
    find_row,
    fundamental_discriminants,
    kronecker,
    load_cm_table,
    regenerate_cm_table,
    validate_cm_table,
    write_cm_table,
)

__all__ = [
    "gamma_p",
    "gamma_orbit_product",
    "DworkCoeffs",
    "dwork_coeffs",
    "dwork_exp_eval",
    "gamma_p_analytic",
    "terms_for",
    "valuation_bound",
    "GrossKoblitzReport",
    "RobertIdentityReport",
    "gross_koblitz_check",
    "robert_identity_check",
    "zeta_p_check",
    "diamond_Gp",
    "diamond_convergence_report",
    "diamond_telescoping_check",
    "log_gamma_combination",
    "CmDiscriminantRow",
    "CmGammaProduct",
    "class_number",
    "cm_gamma_product",
    "find_row",
    "fundamental_discriminants",
    "kronecker",
    "load_cm_table",
    "regenerate_cm_table",
    "validate_cm_table",
    "write_cm_table",
]
