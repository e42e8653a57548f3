"""Exact binomial coefficients and Catalan numbers."""
from __future__ import annotations

import math


def binomial(a: int, b: int) -> int:
    """C(a, b) for a >= 0, zero when b < 0 or b > a."""
    if a < 0:
        raise ValueError(f"negative upper index is not supported: C({a}, {b})")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError(f"Catalan index must be >= 0, got {m}")
    return math.comb(2 * m, m) // (m + 1)


def sign(e: int) -> int:
    """(-1)**e as an int, for any integer e including negative ones."""
    return -1 if e % 2 else 1
