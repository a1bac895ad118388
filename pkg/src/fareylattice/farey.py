"""Farey sequence rank and order-statistic queries in sublinear time.

rank(x, n) counts members of F_n (reduced fractions in [0, 1] with
denominator <= n) that are <= x, counting both endpoints, so
rank(1/1, n) = |F_n|. Writing S_n(x) for the members with numerator >= 1,
the unreduced count sum_{b<=n} floor(b*x) groups by gcd into

    S_n(x) = sum_{b<=n} floor(b*x) - sum_{d>=2} S_{floor(n/d)}(x)

and rank = S_n(x) + 1 puts 0/1 back. Three evaluators share that identity:
a quadratic reference loop, block recursion over the distinct quotients
floor(n/d), and a divisor-sieve run that batches the dense prefix before
handing the remaining quotients to the block recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .exactmath import _iroot_round, best_approximation_in, floor_sum

__all__ = [
    "rank_brute",
    "rank_pawlewicz",
    "rank_improved",
    "statistic",
    "totient_sum",
    "sieved_prefix",
    "divisor_table",
    "DivisorTable",
    "STable",
    "improved_cutoff",
]

BRUTE_LIMIT = 10_000


def _check_query(x: Fraction | int, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("x must lie in [0, 1]")
    return x


def rank_brute(x: Fraction | int, n: int) -> int:
    """Rank by the direct double loop; reference oracle, n <= 10**4 only."""
    x = _check_query(x, n)
    if n > BRUTE_LIMIT:
        raise ValueError(f"rank_brute is an oracle, refusing n > {BRUTE_LIMIT}")
    count = 1  # 0/1
    p, q = x.numerator, x.denominator
    for b in range(1, n + 1):
        for a in range(1, p * b // q + 1):
            if gcd(a, b) == 1:
                count += 1
    return count


@dataclass
class STable:
    """Memo for S_v(x) over the distinct quotients v = floor(n/d).

    Values v <= k_cut live in a dense array indexed by v; larger ones sit at
    index n // v. Nested floors collapse (floor(floor(n/d1)/d2) equals
    floor(n/(d1*d2))), so every value the block recursion reads is itself a
    quotient of n and lands on one of the two arrays.
    """

    n: int
    x: Fraction
    k_cut: int
    dense: list
    tail: list

    def get(self, v: int) -> int:
        if v <= self.k_cut:
            return self.dense[v]
        return self.tail[self.n // v]

    def set(self, v: int, value: int) -> None:
        if v <= self.k_cut:
            self.dense[v] = value
        else:
            self.tail[self.n // v] = value


def _distinct_quotients(n):
    # yields floor(n/d) in ascending order, one value per block
    d = n
    while d >= 1:
        v = n // d
        yield v
        d = n // (v + 1)


def _block_sum(v: int, table: STable) -> int:
    # sum_{d=2}^{v} S_{floor(v/d)}, grouping the d with a common quotient
    total = 0
    d = 2
    while d <= v:
        q = v // d
        d_hi = v // q
        total += (d_hi - d + 1) * table.get(q)
        d = d_hi + 1
    return total


def _s_table(x: Fraction, n: int, k_cut: int, dense: list | None = None) -> STable:
    """Fill S_v(x) for every distinct quotient v of n, bottom up.

    When dense is supplied it must already hold S_i(x) for all i <= k_cut
    and only the larger quotients are computed; otherwise the small ones go
    through the same block recursion.
    """
    prefilled = dense is not None
    if dense is None:
        dense = [0] * (k_cut + 1)
    tail = [0] * (n // (k_cut + 1) + 2 if k_cut < n else 2)
    table = STable(n, x, k_cut, dense, tail)
    for v in _distinct_quotients(n):
        if v <= k_cut:
            if not prefilled:
                table.set(v, floor_sum(v, x) - _block_sum(v, table))
        else:
            table.set(v, floor_sum(v, x) - _block_sum(v, table))
    return table


def rank_pawlewicz(x: Fraction | int, n: int) -> int:
    """Rank via block recursion over the distinct quotients, O(n^(3/4))."""
    x = _check_query(x, n)
    return _s_table(x, n, isqrt(n)).get(n) + 1


@dataclass
class DivisorTable:
    """Divisor lists for every integer in 1..limit, from one sieve pass."""

    limit: int
    lists: list


def divisor_table(limit: int) -> DivisorTable:
    """All divisors of 1..limit by sieving, O(limit lg limit) total entries."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    lists = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for multiple in range(d, limit + 1, d):
            lists[multiple].append(d)
    return DivisorTable(limit, lists)


def sieved_prefix(x: Fraction | int, k: int) -> list:
    """The vector S_1(x)..S_k(x) in one incremental pass.

    Maintains running = sum_{d>=2} S_{floor(i/d)}(x) while i climbs: the
    d-th term moves exactly when d divides i, so the divisor lists drive the
    update and the whole prefix costs one floor sum per i plus O(k lg k)
    divisor touches.
    """
    x = _check_query(x, k)
    divisors = divisor_table(k).lists
    s = [0] * (k + 1)
    running = 0
    for i in range(1, k + 1):
        for d in divisors[i]:
            if d > 1:
                running += s[i // d] - s[(i - 1) // d]
        s[i] = floor_sum(i, x) - running
    return s[1:]


def improved_cutoff(n: int) -> int:
    """Dense-prefix length round((n / max(1, ceil(lg n)))^(2/3)) in [1, n]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lg = max(1, (n - 1).bit_length())
    k = _iroot_round(n * n // (lg * lg), 3)
    return min(n, max(1, k))


def rank_improved(x: Fraction | int, n: int) -> int:
    """Rank with a sieved dense prefix plus block recursion on the rest.

    The prefix of length k = improved_cutoff(n) costs O(k lg k); the
    remaining distinct quotients cost O(n / sqrt(k)); the cutoff balances
    the two at O(n^(2/3) lg^(1/3) n) overall.
    """
    x = _check_query(x, n)
    k = improved_cutoff(n)
    dense = [0] + sieved_prefix(x, k)
    return _s_table(x, n, k, dense).get(n) + 1


def totient_sum(n: int) -> int:
    """Sum of Euler's totient over 1..n, via the rank of 1/1."""
    return rank_improved(Fraction(1), n) - 1


def statistic(k: int, n: int, rank=None) -> Fraction:
    """The k-th member of F_n in increasing order (k = 1 gives 0/1).

    Dyadic bisection keeps the bracket rank(lo) < k <= rank(hi) while
    halving; once the width drops below 1/n^2 the bracket holds exactly one
    member, because distinct members of F_n differ by at least 1/n^2, and
    the simplest fraction in (lo, hi] recovers it. The rank hook lets
    callers with many queries at one n share a memo; any callable agreeing
    with rank_improved is sound, and the default is rank_improved itself.
    """
    if rank is None:
        rank = rank_improved
    if n < 1:
        raise ValueError("n must be >= 1")
    size = rank(Fraction(1), n)
    if not 1 <= k <= size:
        raise ValueError(f"k must lie in [1, {size}] for n = {n}")
    if k == 1:
        return Fraction(0)
    lo, hi = Fraction(0), Fraction(1)
    gap = Fraction(1, n * n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if rank(mid, n) >= k:
            hi = mid
        else:
            lo = mid
    return best_approximation_in(lo, hi, n)
