"""Enumeration of the solution sets B(n) and B'(n) and the sums over them.

B(n) is the set of quadruples (a, b, x, y) of positive integers with
ax + by = n.  B'(n) is the subset with gcd(a, b) = gcd(x, y) = 1.  On top
of the enumerator sit the two-variable divisor sum sigma_prime, the brute
convolution oracle used to verify every closed form in this package, and
the six-way pre-identity consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable

from .arith import divisors

__all__ = [
    "SOLUTION_SETS",
    "enumerate_quadruples",
    "quadruples",
    "sigma_prime",
    "brute_convolution",
    "check_pre_identity",
    "PreIdentityReport",
]

SOLUTION_SETS = ("B", "Bprime")


def _check_set(which: str) -> bool:
    if which not in SOLUTION_SETS:
        raise ValueError(f"solution set must be one of {SOLUTION_SETS}, got {which!r}")
    return which == "Bprime"


def enumerate_quadruples(
    n: int,
    which: str = "Bprime",
    visit: Callable[[int, int, int, int], None] | None = None,
) -> int:
    """Stream every (a, b, x, y) in B(n) or B'(n) through ``visit``; return the count.

    Enumeration order is deterministic: ascending a, then x, then b.  For
    each (a, x) with ax <= n - 1 the remainder m = n - ax is split as
    b * y over the divisors b of m.  Memory use is constant; callers who
    want a materialized list should use quadruples() instead.
    """
    coprime = _check_set(which)
    if n < 2:
        raise ValueError(f"solution sets are defined for n >= 2, got {n}")
    count = 0
    for a in range(1, n):
        for x in range(1, (n - 1) // a + 1):
            m = n - a * x
            for b in divisors(m):
                if coprime and gcd(a, b) != 1:
                    continue
                y = m // b
                if coprime and gcd(x, y) != 1:
                    continue
                count += 1
                if visit is not None:
                    visit(a, b, x, y)
    return count


@lru_cache(maxsize=None)
def quadruples(n: int, which: str = "Bprime") -> tuple[tuple[int, int, int, int], ...]:
    """Materialized, cached tuple of the quadruples in enumeration order.

    Convenient for the identity checks, which revisit the same small-n sets
    for many polynomials.  Large-n sums should stream via
    enumerate_quadruples or brute_convolution.
    """
    out: list[tuple[int, int, int, int]] = []
    enumerate_quadruples(n, which, lambda a, b, x, y: out.append((a, b, x, y)))
    return tuple(out)


@lru_cache(maxsize=None)
def _coprime_divisor_pairs(m: int, n: int) -> tuple[tuple[int, int], ...]:
    # index set of sigma_prime: divisor pairs (d, e) of (m, n) with both
    # gcd(d, e) = 1 and gcd(m/d, n/e) = 1
    out = []
    for d in divisors(m):
        md = m // d
        for e in divisors(n):
            if gcd(d, e) == 1 and gcd(md, n // e) == 1:
                out.append((d, e))
    return tuple(out)


def sigma_prime(r: int, s: int, m: int, n: int) -> int:
    """Two-variable coprime divisor sum Σ d**r e**s.

    The sum runs over divisor pairs d | m, e | n restricted by
    gcd(d, e) = 1 and gcd(m/d, n/e) = 1.  By construction
    sigma_prime(r, s, m, n) == sigma_prime(s, r, n, m).

    Returns 0 whenever m <= 0 or n <= 0.  That extension is a deliberate
    convention (not part of the defining sum) so convolutions can run over
    an unguarded index range; it mirrors sigma_k's behaviour.
    """
    if r < 0 or s < 0:
        raise ValueError(f"sigma_prime requires r, s >= 0, got ({r}, {s})")
    if m <= 0 or n <= 0:
        return 0
    return sum(d**r * e**s for d, e in _coprime_divisor_pairs(m, n))


def brute_convolution(r: int, s: int, n: int, which: str = "Bprime") -> int:
    """Direct enumeration sum over a solution set; the oracle for everything.

    For B'(n) this returns Σ x**r y**s over the quadruples; for B(n) it
    returns Σ a**r b**s, which equals the classical convolution
    Σ_m sigma_r(m) sigma_s(n - m).  The loop is fused rather than going
    through the visitor so range verifications over a few hundred n stay
    quick.
    """
    coprime = _check_set(which)
    if n < 2:
        raise ValueError(f"solution sets are defined for n >= 2, got {n}")
    if r < 0 or s < 0:
        raise ValueError(f"brute_convolution requires r, s >= 0, got ({r}, {s})")
    total = 0
    if coprime:
        for a in range(1, n):
            for x in range(1, (n - 1) // a + 1):
                m = n - a * x
                xr = x**r
                for b in divisors(m):
                    if gcd(a, b) != 1:
                        continue
                    y = m // b
                    if gcd(x, y) == 1:
                        total += xr * y**s
    else:
        for a in range(1, n):
            ar = a**r
            for x in range(1, (n - 1) // a + 1):
                m = n - a * x
                for b in divisors(m):
                    total += ar * b**s
    return total


@dataclass(frozen=True)
class PreIdentityReport:
    """The six expressions that the pre-identity forces to agree on B'(n)."""

    r: int
    s: int
    n: int
    conv_rs: int  # Σ_m sigma_prime(r, s, m, n - m)
    conv_sr: int  # Σ_m sigma_prime(s, r, m, n - m)
    xy_rs: int  # Σ x**r y**s over B'(n)
    xy_sr: int  # Σ x**s y**r over B'(n)
    ab_rs: int  # Σ a**r b**s over B'(n)
    ab_sr: int  # Σ a**s b**r over B'(n)
    all_equal: bool

    def values(self) -> tuple[int, int, int, int, int, int]:
        return (self.conv_rs, self.conv_sr, self.xy_rs, self.xy_sr, self.ab_rs, self.ab_sr)


def check_pre_identity(r: int, s: int, n: int) -> PreIdentityReport:
    """Evaluate all six pre-identity expressions independently and compare.

    The two convolution routes go through sigma_prime; the four quadruple
    sums enumerate B'(n) directly.  A report is returned rather than a bare
    bool so tests and the CLI can show the actual values on a mismatch.
    """
    if n < 2:
        raise ValueError(f"solution sets are defined for n >= 2, got {n}")
    conv_rs = sum(sigma_prime(r, s, m, n - m) for m in range(1, n))
    conv_sr = sum(sigma_prime(s, r, m, n - m) for m in range(1, n))
    xy_rs = xy_sr = ab_rs = ab_sr = 0
    for a, b, x, y in quadruples(n, "Bprime"):
        xy_rs += x**r * y**s
        xy_sr += x**s * y**r
        ab_rs += a**r * b**s
        ab_sr += a**s * b**r
    vals = (conv_rs, conv_sr, xy_rs, xy_sr, ab_rs, ab_sr)
    return PreIdentityReport(r, s, n, *vals, all_equal=len(set(vals)) == 1)
