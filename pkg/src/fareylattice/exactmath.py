"""Exact integer and rational building blocks.

Everything in this package reduces to plain integer arithmetic on Python
ints and fractions.Fraction; no floats are involved in any result. The two
nontrivial pieces here are the Euclid-like exchange recursion for floor sums
of rational arithmetic progressions and the Stern-Brocot descent that finds
the simplest fraction in an interval.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

Rational = Fraction

__all__ = [
    "Rational",
    "gcd",
    "parse_fraction",
    "format_fraction",
    "floor_sum",
    "floor_sum_affine",
    "best_approximation_in",
]

_FRACTION_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_fraction(text: str) -> Fraction:
    """Parse ``P/Q`` or ``P`` (meaning P/1) into a normalized Fraction.

    Strict on purpose: no decimals, no exponents, no whitespace, and the
    denominator must be a positive integer literal.
    """
    if not _FRACTION_RE.fullmatch(text):
        raise ValueError(f"not a fraction: {text!r}")
    num, _, den = text.partition("/")
    if not den:
        return Fraction(int(num))
    if int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den))


def format_fraction(x: Fraction) -> str:
    """Render as ``P/Q``, always with the denominator."""
    return f"{x.numerator}/{x.denominator}"


def _floor_sum_ap(n: int, m: int, a: int, b: int) -> int:
    # sum of floor((a*i + b)/m) for i in [0, n); all arguments nonnegative.
    # Exchange recursion: strip whole multiples of m out of a and b, then
    # swap the roles of the two axes, exactly like one Euclid step. The
    # state shrinks like gcd(a, m), so the loop runs O(lg min(a, m)) times.
    total = 0
    while True:
        if a >= m:
            total += (n - 1) * n // 2 * (a // m)
            a %= m
        if b >= m:
            total += n * (b // m)
            b %= m
        top = a * n + b
        if top < m:
            return total
        n, b, m, a = top // m, top % m, a, m


def floor_sum(n: int, x: Fraction | int) -> int:
    """Sum of floor(b*x) for b = 1..n, exactly, in O(lg) arithmetic steps.

    Denominators of x may be arbitrarily large; everything stays in exact
    integer arithmetic.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be >= 0")
    return _floor_sum_ap(n + 1, x.denominator, x.numerator, 0)


def floor_sum_affine(count: int, m: int, a: int, b: int) -> int:
    """Sum of floor((a*i + b)/m) for i in [0, count); a and b may be negative.

    Negative coefficients are lifted into the nonnegative core by adding
    whole multiples of m and subtracting the matching linear correction.
    """
    if m <= 0:
        raise ValueError("modulus must be positive")
    if count <= 0:
        return 0
    total = 0
    if a < 0:
        k = -(a // m)
        total -= k * (count - 1) * count // 2
        a += k * m
    if b < 0:
        k = -(b // m)
        total -= k * count
        b += k * m
    return total + _floor_sum_ap(count, m, a, b)


def best_approximation_in(lo: Fraction, hi: Fraction, qmax: int) -> Fraction:
    """The unique simplest fraction in (lo, hi] with denominator <= qmax.

    "Simplest" means smallest denominator (ties broken by smallest
    numerator); the Stern-Brocot descent below finds it in O(lg qmax)
    arithmetic steps. Raises ValueError when the interval holds no fraction
    with denominator <= qmax.
    """
    if qmax < 1:
        raise ValueError("qmax must be >= 1")
    f = _simplest_in(Fraction(lo), Fraction(hi), True, False)
    if f.denominator > qmax:
        raise ValueError(f"no fraction with denominator <= {qmax} in ({lo}, {hi}]")
    return f


def _simplest_in(lo: Fraction, hi: Fraction, lo_open: bool, hi_open: bool) -> Fraction:
    # Simplest fraction between lo and hi, each bound open or closed.
    # Walks the continued fraction of the bounds: take the shared integer
    # part, flip to reciprocals, recurse. Each level consumes one partial
    # quotient, so the depth is the continued-fraction length of the bounds.
    if lo > hi or (lo == hi and (lo_open or hi_open)):
        raise ValueError("empty interval")
    fl = lo.numerator // lo.denominator
    first = fl if (lo.denominator == 1 and not lo_open) else fl + 1
    if first < hi or (first == hi and not hi_open):
        return Fraction(first)
    a = lo - fl
    b = hi - fl
    if a == 0:
        # lo is an excluded integer: the answer is fl + 1/q for minimal q
        q = b.denominator // b.numerator + 1 if hi_open else -(-b.denominator // b.numerator)
        return fl + Fraction(1, q)
    sub = _simplest_in(1 / b, 1 / a, hi_open, lo_open)
    return fl + 1 / sub


def _icbrt(m: int) -> int:
    """floor(m ** (1/3)) for m >= 0, by integer Newton iteration."""
    return _iroot(m, 3)


def _iroot(m: int, e: int) -> int:
    """floor(m ** (1/e)) for m >= 0, e >= 1, exactly."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 0
    r = 1 << -(-m.bit_length() // e)
    while True:
        nr = ((e - 1) * r + m // r ** (e - 1)) // e
        if nr >= r:
            break
        r = nr
    while r ** e > m:
        r -= 1
    while (r + 1) ** e <= m:
        r += 1
    return r


def _iroot_round(m: int, e: int) -> int:
    """round(m ** (1/e)) for m >= 0, exactly (half rounds up)."""
    r = _iroot(m, e)
    return r + 1 if (1 << e) * m >= (2 * r + 1) ** e else r
