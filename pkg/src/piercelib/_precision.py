"""Certified integer parts and sign decisions via interval arithmetic.

Real-valued bound rows like exp(n + sqrt(n)) need exact floors and exact
comparisons.  Expressions are evaluated under `mpmath.iv` (directed-rounding
intervals) at escalating precision until the answer is unambiguous.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import mpmath

DEFAULT_PRECISION_BITS = 128
_MAX_PRECISION_BITS = 1 << 20


class PrecisionError(ArithmeticError):
    """Interval escalation hit the precision ceiling without a decision."""


def _at_precision(expr: Callable[[mpmath.ctx_iv.MPIntervalContext], object], bits: int):
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = bits
        return iv.mpf(expr(iv))
    finally:
        iv.prec = old


def certified_floor(
    expr: Callable[[mpmath.ctx_iv.MPIntervalContext], object],
    start_bits: int = DEFAULT_PRECISION_BITS,
) -> int:
    """Floor of a real given as an interval expression.

    `expr(iv)` must rebuild the value inside the supplied interval context.
    Precision doubles until both endpoints share an integer part; values that
    are exactly integers but only representable transcendentally cannot be
    certified and raise PrecisionError.
    """
    bits = max(start_bits, 53)
    while bits <= _MAX_PRECISION_BITS:
        val = _at_precision(expr, bits)
        lo = int(mpmath.floor(val.a))
        hi = int(mpmath.floor(val.b))
        if lo == hi:
            return lo
        bits *= 2
    raise PrecisionError(
        f"floor undecided at {_MAX_PRECISION_BITS} bits; endpoints straddle an integer"
    )


def certified_sign(
    expr: Callable[[mpmath.ctx_iv.MPIntervalContext], object],
    start_bits: int = DEFAULT_PRECISION_BITS,
) -> int:
    """Sign (+1 or -1) of a provably nonzero interval expression."""
    bits = max(start_bits, 53)
    while bits <= _MAX_PRECISION_BITS:
        val = _at_precision(expr, bits)
        if val.a > 0:
            return 1
        if val.b < 0:
            return -1
        bits *= 2
    raise PrecisionError(
        f"sign undecided at {_MAX_PRECISION_BITS} bits; interval straddles zero"
    )


def iv_from_fraction(iv: mpmath.ctx_iv.MPIntervalContext, q: Fraction):
    """Tight interval enclosure of an exact rational."""
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)
