from ._deszeta import (
    DeszetaError,
    coeff_table,
    euler_zagier,
    evaluate,
    evaluate_mixed,
    hurwitz_zeta,
    value,
    value_gf,
    verify,
)

__all__ = [
    "DeszetaError",
    "coeff_table",
    "euler_zagier",
    "evaluate",
    "evaluate_mixed",
    "hurwitz_zeta",
    "value",
    "value_gf",
    "verify",
]
