from ._core import (
    Error,
    canonical,
    class_size,
    classify,
    components,
    erase,
    inverse,
    is_cylindrical,
    is_irreducible,
    op_a,
    op_b,
    op_c,
    representative,
    spin_parity,
    stratum,
)

__all__ = [
    "Error",
    "canonical",
    "class_size",
    "classify",
    "components",
    "erase",
    "inverse",
    "is_cylindrical",
    "is_irreducible",
    "op_a",
    "op_b",
    "op_c",
    "representative",
    "spin_parity",
    "stratum",
]
