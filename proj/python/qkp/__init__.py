"""Exact quantum K-theory of flag manifolds.

Thin wrapper over the C++ core: star products and multiplication tables of
qK_H(G/P), parabolic quotient maps, affine Weyl group combinatorics, and the
localized affine-Grassmannian dictionary.
"""

from ._qkp import (
    QkpError,
    QkpParseError,
    UnsupportedError,
    peterson,
    product,
    root_info,
    run_cli,
    table,
    translate,
    verify,
    weyl_length,
    weyl_project,
)

__all__ = [
    "QkpError",
    "QkpParseError",
    "UnsupportedError",
    "peterson",
    "product",
    "root_info",
    "run_cli",
    "table",
    "translate",
    "verify",
    "weyl_length",
    "weyl_project",
]
