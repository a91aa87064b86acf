"""Integer-exact approval bounds for pairwise-intersecting societies.

Everything here is re-derived from the quadratic inequality

    (4n - a)(a - 1) >= n(n - 1)

relating society size n to approval number a, using integer bisection
only.  The radical closed forms are provided as floating cross-checks
(``*_closed_form``); when they disagree with the integer search the
integer result wins.  Minimum-diameter lower bounds for double-n strings
and the asymptotic ratio constants live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt, sqrt

#: Known asymptotic range for the minimum diameter ratio delta(n)/n.
DOUBLE_STRING_RATIO_LOWER = Fraction(8, 23)
DOUBLE_STRING_RATIO_UPPER = Fraction(5, 13)

#: Conjectured floor for the approval ratio of any pairwise-intersecting
#: double-interval society.  No counterexample is known; see the search
#: module's monitor.
CONJECTURED_MIN_RATIO = Fraction(1, 3)

MAX_TABLE_A = 10**6


def satisfies_quadratic(n: int, a: int) -> bool:
    """(4n - a)(a - 1) >= n(n - 1), exactly."""
    return (4 * n - a) * (a - 1) >= n * (n - 1)


def approval_lower_bound(n: int) -> int:
    """Smallest a every pairwise-intersecting n-voter society must reach.

    Integer bisection on the monotone stretch a in [1, n] of the
    quadratic; n = 1 returns 1 (a lone voter approves its own platform).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    lo, hi = 1, n  # predicate false at 1, true at n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if satisfies_quadratic(n, mid):
            hi = mid
        else:
            lo = mid
    return hi


def approval_lower_bound_closed_form(n: int) -> int:
    """Floating radical form of the same bound; cross-check only."""
    if n < 1:
        raise ValueError("n must be positive")
    return ceil(2 * n + 0.5 - sqrt(3 * n * n - n + 0.25))


def max_society_size(a: int) -> int:
    """Largest n a pairwise-intersecting society can have at approval a.

    Integer bisection for the last n satisfying the quadratic; true at
    n = a, false at n = 4a, and the truth set is an interval between.
    """
    if a < 2:
        raise ValueError("a must be at least 2 (the quadratic degenerates at 1)")
    lo, hi = a, 4 * a
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if satisfies_quadratic(mid, a):
            lo = mid
        else:
            hi = mid
    return lo


def max_society_size_closed_form(a: int) -> int:
    """Floating radical form of the same bound; cross-check only."""
    if a < 2:
        raise ValueError("a must be at least 2")
    return floor(2 * a - 1.5 + sqrt(3 * a * a - 5 * a + 2.25))


def _sqrt3_above(digits: int) -> Fraction:
    """A rational strictly above sqrt(3), within 10**-digits of it."""
    scale = 10**digits
    return Fraction(isqrt(3 * scale * scale) + 1, scale)


def ratio_lower_bound_estimate(n: int, digits: int = 30) -> Fraction:
    """Closed-form floor estimate of the minimum approval ratio a/n.

    Evaluates 2 - sqrt(3) + (3 + sqrt(3))/(6n) - sqrt(3)/(24n^2) as an
    exact rational, substituting a rational upper cover for sqrt(3).
    The expression decreases in the sqrt(3) term, so the result never
    exceeds the true value and stays a valid floor for
    approval_lower_bound(n)/n.  The integer bound is the authority; this
    is the smooth approximation (limit 2 - sqrt(3) ~ 0.268).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if digits < 1:
        raise ValueError("digits must be positive")
    r = _sqrt3_above(digits)
    return 2 - r + (3 + r) / (6 * n) - r / (24 * n * n)


def delta_theoretical_lower(n: int) -> int:
    """Best proven lower bound for the minimum diameter of double-n strings.

    max(ceil((n-1)/3), 8*floor(n/23)): the first term from the adjacency
    counting argument (each symbol's two occurrences can be within d of
    at most 3d others), the second from the 8/23 density bound carried to
    all n by monotonicity of the minimum diameter.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return max(-(-(n - 1) // 3), 8 * (n // 23))


@dataclass(frozen=True)
class BoundsRow:
    a: int
    max_n: int
    min_ratio: Fraction

    def __post_init__(self) -> None:
        if self.min_ratio != Fraction(self.a, self.max_n):
            raise ValueError("min_ratio must equal a/max_n")


def bounds_rows(a_lo: int, a_hi: int) -> list[BoundsRow]:
    if not 2 <= a_lo <= a_hi <= MAX_TABLE_A:
        raise ValueError(f"approval range must satisfy 2 <= lo <= hi <= {MAX_TABLE_A}")
    rows = []
    for a in range(a_lo, a_hi + 1):
        n = max_society_size(a)
        rows.append(BoundsRow(a, n, Fraction(a, n)))
    return rows


def emit_bounds_table(a_lo: int, a_hi: int, fmt: str = "text") -> str:
    """Render the (a, max_n, min_ratio) table as aligned text or CSV.

    Ratios are exact rationals; decimals appear only in the text
    rendering, rounded to three places.
    """
    rows = bounds_rows(a_lo, a_hi)
    if fmt == "csv":
        lines = ["a,max_n,min_ratio_num,min_ratio_den"]
        for r in rows:
            lines.append(
                f"{r.a},{r.max_n},{r.min_ratio.numerator},{r.min_ratio.denominator}"
            )
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown table format {fmt!r}")
    body = [
        (str(r.a), str(r.max_n),
         f"{r.min_ratio.numerator}/{r.min_ratio.denominator} (~{float(r.min_ratio):.3f})")
        for r in rows
    ]
    headers = ("a", "max_n", "min_ratio")
    widths = [
        max(len(h), *(len(row[i]) for row in body)) for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"
