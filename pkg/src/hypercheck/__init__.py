"""Exact-arithmetic toolkit for symmetric hyperbolic polynomials,
hook-shaped polynomials and diagonal zero-sum hyperbolicity preservers."""

from .hyperbolicity import (
    SearchBudget,
    Verdict,
    cone_member,
    conjecture_case,
    cubic_normal_form,
    decide_cubic,
    decide_quartic_hook,
    ek_plus_linear_check,
    falsify_hyperbolicity,
    falsify_unrestricted,
)
from .operators import (
    DiagonalMap,
    ExtendCertificate,
    FullDiagonalMap,
    apply,
    associated_operator,
    decide_extendable,
    g0,
    map_sending_g0_to,
    necessary_sign_test,
    operator_to_hook,
    phi,
    polya_schur_test,
)
from .rationals import Q, format_rational, parse_rational
from .sympoly import (
    HookPoly,
    SymPoint,
    dir_derivative_one,
    elem_means,
    eval_hook,
    lift_variables,
    mixed_derivative_eval,
    restrict_line,
)
from .unipoly import (
    RealRoot,
    RootProfile,
    UniPoly,
    ZeroSumPoly,
    dee,
    delta_n,
    discriminant,
    interlaces,
    is_real_rooted,
    resultant,
    root_profile,
    same_sign_count,
)

__all__ = [
    "Q",
    "format_rational",
    "parse_rational",
    "RealRoot",
    "RootProfile",
    "UniPoly",
    "ZeroSumPoly",
    "dee",
    "delta_n",
    "discriminant",
    "interlaces",
    "is_real_rooted",
    "resultant",
    "root_profile",
    "same_sign_count",
    "HookPoly",
    "SymPoint",
    "dir_derivative_one",
    "elem_means",
    "eval_hook",
    "lift_variables",
    "mixed_derivative_eval",
    "restrict_line",
    "DiagonalMap",
    "ExtendCertificate",
    "FullDiagonalMap",
    "apply",
    "associated_operator",
    "decide_extendable",
    "g0",
    "map_sending_g0_to",
    "necessary_sign_test",
    "operator_to_hook",
    "phi",
    "polya_schur_test",
    "SearchBudget",
    "Verdict",
    "cone_member",
    "conjecture_case",
    "cubic_normal_form",
    "decide_cubic",
    "decide_quartic_hook",
    "ek_plus_linear_check",
    "falsify_hyperbolicity",
    "falsify_unrestricted",
]

__version__ = "0.1.0"
