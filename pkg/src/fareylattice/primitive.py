"""Primitive lattice point counting in star-shaped rational polygons.

A lattice point is primitive when its coordinates are coprime, i.e. it is
visible from the origin. Writing S(P) for the primitive count of the closed
region and A(P) for the plain lattice count, grouping the nonzero lattice
points by the gcd of their coordinates gives

    S(P) = A(P) - 1 - sum_{d >= 2} S(P/d)

where P/d is P shrunk by d and the -1 removes the origin, which belongs to
no coprimality class. The recursion only ever meets shrink factors, so the
computation is a dynamic program over scales: factors below a crossover tau
get a dense table filled by the recursion itself, factors above it shrink
the polygon so far that the few surviving points are tabulated once, each
with the largest shrink it survives, and every remaining term becomes a
threshold count on that table.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exactmath import _iroot_round
from .geometry import (
    Polygon,
    _ceil_fr,
    convex_hull,
    count_lattice,
    diameter_bound,
    point_in_scaled,
    scale_down,
    validate,
)

__all__ = [
    "phi_value",
    "precompute_tail",
    "tail_query",
    "dp_term",
    "primitive_count",
    "primitive_brute",
    "random_star_polygon",
    "ImplicitTail",
    "PrimitiveRun",
]

BRUTE_LIMIT = 5000


def _floor_fr(f: Fraction) -> int:
    return f.numerator // f.denominator


def _lattice_box(poly: Polygon, scale: int = 1):
    # integer bounding box of poly shrunk by scale
    xs = [v[0] / scale for v in poly.vertices]
    ys = [v[1] / scale for v in poly.vertices]
    return _ceil_fr(min(xs)), _floor_fr(max(xs)), _ceil_fr(min(ys)), _floor_fr(max(ys))


def phi_value(poly: Polygon, pt, D: int) -> int:
    """Smallest shrink factor i >= 1 that pushes pt out of poly / i.

    pt must be a nonzero lattice point of poly. Membership of pt in poly/i
    is the same as membership of i*pt in poly, and by star-shapedness it is
    monotone in i, so a binary search over [1, D+2] finds the threshold;
    (D+1)*pt is already outside because the whole region lies within D of
    the origin.
    """
    if pt[0] == 0 and pt[1] == 0:
        raise ValueError("phi is not defined at the origin")
    if not point_in_scaled(poly, pt, 1):
        raise ValueError("point is outside the polygon")
    lo = 1  # pt in poly/lo
    hi = D + 2  # pt out of poly/hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if point_in_scaled(poly, pt, mid):
            lo = mid
        else:
            hi = mid
    return hi


@dataclass
class ImplicitTail:
    """Exit thresholds of the lattice points that survive the tau shrink.

    phis holds phi_value(P, p, D), sorted descending, for every primitive
    nonzero lattice point p of P/tau. A point is in P/i exactly when its
    phi exceeds i, so counting entries above a threshold answers S(P/i)
    for any i >= tau.
    """

    tau: int
    phis: list = field(default_factory=list)

    def count_above(self, i: int) -> int:
        # entries are sorted descending; count those > i
        lo, hi = 0, len(self.phis)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.phis[mid] > i:
                lo = mid + 1
            else:
                hi = mid
        return lo


def precompute_tail(poly: Polygon, tau: int) -> ImplicitTail:
    """Scan P/tau for primitive points and record their exit thresholds.

    Candidates come from the integer bounding box of the shrunk polygon,
    non-primitive points are discarded, membership is exact, and the
    resulting phi list is sorted from largest to smallest.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    D = diameter_bound(poly)
    x0, x1, y0, y1 = _lattice_box(poly, tau)
    phis = []
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            if (x == 0 and y == 0) or gcd(x, y) != 1:
                continue
            if point_in_scaled(poly, (x, y), tau):
                phis.append(phi_value(poly, (x, y), D))
    phis.sort(reverse=True)
    return ImplicitTail(tau=tau, phis=phis)


def tail_query(tail: ImplicitTail, i: int) -> int:
    """S(P/i) for i at or beyond the tail cutoff: entries above i."""
    if i < tail.tau:
        raise ValueError("shrink factor below the tail cutoff")
    return tail.count_above(i)


@dataclass
class PrimitiveRun:
    """Dense part of the dynamic program plus its tuning constants."""

    small: list  # small[i] = S(P/i) for 1 <= i < tau; index 0 unused
    D: int
    tau: int


def dp_term(i: int, tail: ImplicitTail, run: PrimitiveRun, poly: Polygon, grouped: bool = True) -> int:
    """S(P/i) assuming every S(P/j) for j > i is already answerable.

    Expands A(P/i) - 1 - sum_{d>=2} S(P/(i*d)) with d running while
    i*d <= D+1 (larger shrinks hold nothing but the origin). Terms with
    i*d below tau read the dense table; up to delta = (D^2 i)^(1/3) they
    are individual threshold counts on the tail; beyond delta equal counts
    are grouped, a binary search over d finding where each run of equal
    values ends. Both summation orders add the same terms, so grouped and
    ungrouped results are identical.
    """
    total = count_lattice(scale_down(poly, i) if i > 1 else poly) - 1
    d_max = (run.D + 1) // i
    d = 2
    while d <= d_max and i * d < run.tau:
        total -= run.small[i * d]
        d += 1
    if d > d_max:
        return total
    if grouped:
        delta = _iroot_round(run.D * run.D * i, 3)
    else:
        delta = None
    while d <= d_max and (delta is None or i * d < delta):
        v = tail_query(tail, i * d)
        if v == 0:
            return total
        total -= v
        d += 1
    while d <= d_max:
        v = tail_query(tail, i * d)
        if v == 0:
            break
        # the run of equal values ends at the largest d before the count
        # drops; binary search keeps lo inside the run, hi past it
        lo, hi = d, d_max + 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if tail_query(tail, i * mid) < v:
                hi = mid
            else:
                lo = mid
        total -= v * (lo - d + 1)
        d = hi
    return total


def primitive_count(poly: Polygon, grouped: bool = True, tau: int | None = None) -> int:
    """Primitive lattice points in the closed region of poly.

    Sets the crossover tau near D^(4/7) unless overridden, tabulates the
    tail once, then fills the dense table from tau-1 down to 1; the final
    entry is the answer. The origin never counts.
    """
    if not poly.validated:
        poly = validate(poly)
    D = diameter_bound(poly)
    if tau is None:
        tau = min(D, max(1, _iroot_round(D ** 4, 7)))
    elif not 1 <= tau <= D:
        raise ValueError("tau must be between 1 and the diameter bound")
    tail = precompute_tail(poly, tau)
    run = PrimitiveRun(small=[0] * max(tau, 1), D=D, tau=tau)
    for i in range(tau - 1, 0, -1):
        run.small[i] = dp_term(i, tail, run, poly, grouped)
    if tau > 1:
        return run.small[1]
    return dp_term(1, tail, run, poly, grouped)


def primitive_brute(poly: Polygon) -> int:
    """Direct bounding box scan; the reference the recursion is checked against."""
    if not poly.validated:
        poly = validate(poly)
    if diameter_bound(poly) > BRUTE_LIMIT:
        raise ValueError(f"polygon diameter exceeds the brute-force limit {BRUTE_LIMIT}")
    x0, x1, y0, y1 = _lattice_box(poly)
    total = 0
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            if gcd(x, y) == 1 and point_in_scaled(poly, (x, y), 1):
                total += 1
    return total


def random_star_polygon(diameter: int, k: int, rng: random.Random) -> Polygon:
    """A random valid test polygon with diameter bound roughly as requested.

    Draws one rational point per angular sector of an annulus around the
    origin and takes the convex hull. The sector spread keeps the origin
    inside the hull almost always, and convexity gives star-shapedness for
    free; the rare degenerate draw is rejected and redrawn.
    """
    if k < 3:
        raise ValueError("need at least 3 points")
    if diameter < 8:
        raise ValueError("diameter must be >= 8")
    for _ in range(1000):
        pts = []
        for s in range(k):
            ang = 2 * math.pi * (s + rng.random()) / k
            rad = diameter * rng.uniform(0.25, 0.5)
            den = rng.choice((1, 2, 3, 4))
            x = Fraction(round(rad * math.cos(ang) * den), den)
            y = Fraction(round(rad * math.sin(ang) * den), den)
            pts.append((x, y))
        hull = convex_hull(pts)
        if len(hull) < 3:
            continue
        try:
            return validate(Polygon(hull))
        except ValueError:
            continue
    raise RuntimeError("could not draw a valid polygon")
