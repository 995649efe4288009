"""Torsion search in class groups of imaginary quadratic function fields.

Thin Python surface over the C++ core: polynomials are little-endian
coefficient lists (nested lists of residues over extension fields), results
are plain dicts and lists.
"""

from ._torsearch import (
    __version__,
    build_f,
    census,
    charsum_double,
    charsum_fixed,
    curve_summary,
    derive_params,
    divisor_count,
    euler_phi,
    factorize,
    jacobi,
    mobius,
    rho,
    search,
    tables,
    verify_order,
)

__all__ = [
    "__version__",
    "build_f",
    "census",
    "charsum_double",
    "charsum_fixed",
    "curve_summary",
    "derive_params",
    "divisor_count",
    "euler_phi",
    "factorize",
    "jacobi",
    "mobius",
    "rho",
    "search",
    "tables",
    "verify_order",
]
