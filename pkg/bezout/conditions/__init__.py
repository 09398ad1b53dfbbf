"""
Constructive certificates for element conditions.

Features:
- Stable range one of Z/nZ by exhaustive enumeration, stable and locally stable elements
- Adequate and PM splits by gcd saturation
- PM witnesses and PM-element sweeps over Z/nZ, Gelfand witnesses
- Feckly-clean decompositions over Z_(2) ∩ Z_(3), Lam and Jacobson checks
"""
from bezout.conditions.clean import (
    IDEMPOTENT_LIFTS,
    FecklyCleanTable,
    FecklyCleanWitness,
    feckly_clean_decompose,
    feckly_clean_table,
    jacobson_semisimple_quotient,
    lam_check,
)
from bezout.conditions.splits import (
    AdequateSplit,
    PMCertificate,
    PMSplit,
    PMWitness,
    adequate_split,
    gelfand_witness,
    is_pm_element,
    pm_split,
    pm_witness,
)
from bezout.conditions.stable_range import (
    StableRangeCertificate,
    locally_stable_witness,
    stable_element,
    stable_range_one,
)

__all__ = [
    "IDEMPOTENT_LIFTS",
    "FecklyCleanTable",
    "FecklyCleanWitness",
    "feckly_clean_decompose",
    "feckly_clean_table",
    "jacobson_semisimple_quotient",
    "lam_check",
    "AdequateSplit",
    "PMCertificate",
    "PMSplit",
    "PMWitness",
    "adequate_split",
    "gelfand_witness",
    "is_pm_element",
    "pm_split",
    "pm_witness",
    "StableRangeCertificate",
    "locally_stable_witness",
    "stable_element",
    "stable_range_one",
]
