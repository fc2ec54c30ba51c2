# Filtered isocrystals over Q_p and weak admissibility

from .filtered import (
    AdmissibilityResult,
    FilteredIsocrystal,
    FiltrationStep,
    FrobeniusShape,
    StableSubspace,
    dual,
    frobenius_shape,
    hodge_number,
    newton_number,
    parse_isocrystal,
    stable_subspaces,
    stable_subspaces_oracle,
    weakly_admissible,
)

__all__ = [
    "AdmissibilityResult",
    "FilteredIsocrystal",
    "FiltrationStep",
    "FrobeniusShape",
    "StableSubspace",
    "dual",
    "frobenius_shape",
    "hodge_number",
    "newton_number",
    "parse_isocrystal",
    "stable_subspaces",
    "stable_subspaces_oracle",
    "weakly_admissible",
]
