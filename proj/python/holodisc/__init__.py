"""Exact structural invariants of Hermitian symmetric domains.

The heavy lifting lives in the compiled extension ``holodisc._core``:
rational arithmetic root-system computations (cascade, multiplicities,
genus, the non-vanishing criterion) plus a numerical convergence probe.
Rationals cross the boundary as strings like ``"-5/2"``.
"""

from ._core import (
    Domain,
    NonDominantError,
    NotHermitianError,
    SizeLimitError,
    UnsupportedTypeError,
    classify_exponent,
    standard_presets,
)

__all__ = [
    "Domain",
    "NonDominantError",
    "NotHermitianError",
    "SizeLimitError",
    "UnsupportedTypeError",
    "classify_exponent",
    "standard_presets",
]
