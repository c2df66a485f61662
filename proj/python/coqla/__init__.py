"""Split-quaternion (coquaternion) linear algebra.

Matrices are passed either as text, one row per line with entries separated
by ``;`` (``"0; 1-k\\n1+k; 0"``), or as float arrays of shape ``(rows, cols, 4)``.
Text runs on exact rationals unless ``mode="float"``.
"""

from ._core import (
    CoqlaError,
    DimensionError,
    IndexError,
    NotHermitian,
    ParseError,
    SizeCapExceeded,
    Singular,
    ZeroDivisorOrZero,
    canonical,
    cdet,
    conj,
    det,
    inv,
    inverse,
    mul,
    norm_form,
    qdet,
    rdet,
    solve_ax,
    solve_axb,
    solve_left,
    solve_right,
    solve_xb,
)

__all__ = [
    "CoqlaError", "DimensionError", "IndexError", "NotHermitian", "ParseError",
    "SizeCapExceeded", "Singular", "ZeroDivisorOrZero", "canonical", "cdet", "conj",
    "det", "inv", "inverse", "mul", "norm_form", "qdet", "rdet", "solve_ax",
    "solve_axb", "solve_left", "solve_right", "solve_xb",
]
__version__ = "0.1.0"
