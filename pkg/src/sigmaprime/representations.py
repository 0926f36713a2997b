"""Representation counters over the solution sets.

Four counting problems share one shape: attach to every quadruple
(u, v, x, y) in B(n) or B'(n) the number of ways to split u**r and v**s.

* L / Lprime   splits a + c = u**r with a >= 0, c >= 1, and b + d = v**s
               likewise; each quadruple contributes u**r * v**s.
* M / Mprime   splits run over factorizations k*e = u**r and l*f = v**s
               with coprime splits a + c = e, b + d = f (gcd(a, c) =
               gcd(b, d) = 1, with gcd(0, c) = c), which collapses to the
               same totals because the coprime splits of e number phi(e).

count_fast computes the collapsed sum; count_raw enumerates the tuples
one by one, independent of the collapsing step, so the two routes check
each other.  Raw enumeration is guarded by a tuple budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import divisors, sigma_k
from .lattice import enumerate_quadruples, sigma_prime

__all__ = [
    "COUNTERS",
    "CountSpec",
    "BudgetExceededError",
    "count_fast",
    "count_raw",
    "verify_lm",
    "LMRow",
    "LMReport",
    "DEFAULT_BUDGET",
]

COUNTERS = ("L", "M", "Lprime", "Mprime")
DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Raised when a raw enumeration would visit more tuples than allowed."""


@dataclass(frozen=True)
class CountSpec:
    """Which counter to evaluate, at which exponents and target n."""

    which: str
    r: int
    s: int
    n: int

    def __post_init__(self):
        if self.which not in COUNTERS:
            raise ValueError(f"counter must be one of {COUNTERS}, got {self.which!r}")
        if self.r < 1 or self.s < 1:
            raise ValueError(f"counters need r, s >= 1, got ({self.r}, {self.s})")
        if self.n < 2:
            raise ValueError(f"counters need n >= 2, got {self.n}")

    @property
    def solution_set(self) -> str:
        return "Bprime" if self.which.endswith("prime") else "B"


def count_fast(spec: CountSpec) -> int:
    """Collapsed count: Σ u**r v**s over the quadruples of the counter's set.

    The L and M problems have the same collapsed total (the coprime splits
    of e number phi(e), and Σ_{e | w} phi(e) = w); the distinction only
    matters for the raw route.
    """
    total = 0
    r, s = spec.r, spec.s

    def visit(u: int, v: int, x: int, y: int) -> None:
        nonlocal total
        total += u**r * v**s

    enumerate_quadruples(spec.n, spec.solution_set, visit)
    return total


def _raw_budget_estimate(spec: CountSpec) -> int:
    # Conservative upper bound on tuple visits, cheap to compute and free of
    # the phi collapse: L visits exactly u**r * v**s tuples per quadruple,
    # M scans at most sigma(u**r) * (1 + sigma(v**s)) candidates.
    est = 0
    coprime_splits = spec.which in ("M", "Mprime")
    quads: list[tuple[int, int]] = []
    enumerate_quadruples(spec.n, spec.solution_set, lambda u, v, x, y: quads.append((u, v)))
    for u, v in quads:
        ur, vs = u**spec.r, v**spec.s
        if coprime_splits:
            est += sigma_k(1, ur) * (1 + sigma_k(1, vs))
        else:
            est += ur * vs
    return est


def count_raw(spec: CountSpec, budget: int = DEFAULT_BUDGET) -> int:
    """Literal tuple enumeration of the counter, independent of count_fast.

    For L the loop ranges over every split pair (a, c), (b, d); for M it
    additionally ranges over the divisor factorizations and filters splits
    by coprimality, one gcd at a time.  Before touching the loops the visit
    count is estimated; anything above ``budget`` raises
    BudgetExceededError rather than grinding for hours.
    """
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    est = _raw_budget_estimate(spec)
    if est > budget:
        raise BudgetExceededError(
            f"raw enumeration of {spec.which}({spec.r},{spec.s};{spec.n}) needs about "
            f"{est} tuple visits, budget is {budget}"
        )
    quads: list[tuple[int, int]] = []
    enumerate_quadruples(spec.n, spec.solution_set, lambda u, v, x, y: quads.append((u, v)))
    total = 0
    if spec.which in ("L", "Lprime"):
        for u, v in quads:
            ur, vs = u**spec.r, v**spec.s
            for _a in range(ur):  # c = ur - a >= 1
                for _b in range(vs):  # d = vs - b >= 1
                    total += 1
    else:
        for u, v in quads:
            ur, vs = u**spec.r, v**spec.s
            for e in divisors(ur):
                for a in range(e):
                    if gcd(a, e - a) != 1:
                        continue
                    for f in divisors(vs):
                        for b in range(f):
                            if gcd(b, f - b) == 1:
                                total += 1
    return total


@dataclass
class LMRow:
    n: int
    fast: dict[str, int]
    raw: dict[str, int]
    skipped: tuple[str, ...]  # counters whose raw route blew the budget
    conv_plain: int  # Σ sigma_r(m) sigma_s(n - m)
    conv_coprime: int  # Σ sigma_prime(r, s, m, n - m)
    ok: bool


@dataclass
class LMReport:
    r: int
    s: int
    rows: tuple[LMRow, ...]
    all_pass: bool  # over the checks that actually ran
    skipped_any: bool


def verify_lm(r: int, s: int, lo: int, hi: int, budget: int = DEFAULT_BUDGET) -> LMReport:
    """Cross-check all four counters on [lo, hi].

    Asserts raw == fast for each counter (budget permitting; blown budgets
    are recorded as skips, never failures), that L equals the classical
    convolution Σ sigma_r(m) sigma_s(n - m), and that Lprime equals
    Σ sigma_prime(r, s, m, n - m).
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got {lo}..{hi}")
    rows: list[LMRow] = []
    for n in range(lo, hi + 1):
        fast: dict[str, int] = {}
        raw: dict[str, int] = {}
        skipped: list[str] = []
        ok = True
        for which in COUNTERS:
            spec = CountSpec(which, r, s, n)
            fast[which] = count_fast(spec)
            try:
                raw[which] = count_raw(spec, budget)
            except BudgetExceededError:
                skipped.append(which)
                continue
            if raw[which] != fast[which]:
                ok = False
        conv_plain = sum(sigma_k(r, m) * sigma_k(s, n - m) for m in range(1, n))
        conv_coprime = sum(sigma_prime(r, s, m, n - m) for m in range(1, n))
        if fast["L"] != conv_plain or fast["Lprime"] != conv_coprime:
            ok = False
        rows.append(LMRow(n, fast, raw, tuple(skipped), conv_plain, conv_coprime, ok))
    return LMReport(
        r,
        s,
        tuple(rows),
        all_pass=all(row.ok for row in rows),
        skipped_any=any(row.skipped for row in rows),
    )
