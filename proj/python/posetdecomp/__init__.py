"""Decomposition complexes of finite posets.

Thin python face over the C++ core.  Every function speaks JSON text: poset,
decomposition set, building set, matroid, and realization inputs use the same
formats as the command line tool, and outputs re-parse with ``json.loads``.
"""

from ._core import (
    bergman_json,
    complex_json,
    coproduct_json,
    nested_json,
    product_json,
    realize_json,
    suite_names,
    verify,
)

__all__ = [
    "bergman_json",
    "complex_json",
    "coproduct_json",
    "nested_json",
    "product_json",
    "realize_json",
    "suite_names",
    "verify",
]

__version__ = "0.1.0"
