"""Exact characteristic numbers of plane curves tangent to a line.

Counts degree-d plane curves with prescribed tangencies to a fixed line and
prescribed singularities (node, cusp, two nodes, tacnode), by exact
intersection arithmetic on products of projective spaces, cross-checked
against a Caporaso-Harris degeneration recursion and a WDVV recursion for
rational curves.
"""

from .caporaso_harris import CHKey, ch_from_profile, ch_invariant
from .cusp import class_A2F, class_A2L, eval_A2F_T1s, eval_A2L_T1s
from .evaluator import clear_cache, eval_chain
from .exprs import ClassExpr, ParseError, evaluate, parse, to_string
from .multisingular import (
    class_A1FA1F,
    class_A3F,
    coeff_table_A1FA1F,
    coeff_table_A3F,
    eval_A1LA1L,
    eval_PA3,
)
from .nodal import (
    class_A1F,
    class_A1L,
    class_A1L_via_euler,
    derive_A1F_coeffs,
    eval_A1F_T,
    eval_A1L_T,
    eval_PA1,
)
from .ring import (
    RingElem,
    SpaceSig,
    collision_divisor,
    delta,
    diagonal,
    integrate,
    pushforward_last_a,
)
from .tangency import CountResult, constraint, eval_T, symmetry_factor
from .verify import VerifyReport, verify
from .wdvv import gw_table, kontsevich_nd, nd_T1

__all__ = [
    "CHKey", "ch_from_profile", "ch_invariant",
    "class_A2F", "class_A2L", "eval_A2F_T1s", "eval_A2L_T1s",
    "clear_cache", "eval_chain",
    "ClassExpr", "ParseError", "evaluate", "parse", "to_string",
    "class_A1FA1F", "class_A3F", "coeff_table_A1FA1F", "coeff_table_A3F",
    "eval_A1LA1L", "eval_PA3",
    "class_A1F", "class_A1L", "class_A1L_via_euler", "derive_A1F_coeffs",
    "eval_A1F_T", "eval_A1L_T", "eval_PA1",
    "RingElem", "SpaceSig", "collision_divisor", "delta", "diagonal",
    "integrate", "pushforward_last_a",
    "CountResult", "constraint", "eval_T", "symmetry_factor",
    "VerifyReport", "verify",
    "gw_table", "kontsevich_nd", "nd_T1",
]

__version__ = "0.1.0"
