"""Double-interval societies on a rational spectrum.

A society is a set of named voters, each approving two disjoint closed
intervals of the rational line.  The central quantities are the approval
number (the best head count any single platform can get) and pairwise
intersection (every two voters share at least one approved platform).

All coordinates are exact rationals so that boundary contact is decided
exactly: two closed intervals that share a single point do intersect, and
a platform sitting on an endpoint counts for that voter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

CoordLike = Union[int, str, Fraction]

_NAME_RE = re.compile(r"[A-Za-z0-9_]+")


class SocietyError(ValueError):
    """Raised for structurally invalid intervals, voters, or societies."""


class CoincidentEndpointsError(SocietyError):
    """Raised by operations that require all interval endpoints distinct."""


def _coord(value: CoordLike) -> Fraction:
    if isinstance(value, float):
        raise SocietyError(
            f"float coordinate {value!r} rejected; use int, Fraction, or 'p/q' text"
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SocietyError(f"bad coordinate {value!r}: {exc}") from None


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; degenerate points (lo == hi) are allowed."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _coord(self.lo))
        object.__setattr__(self, "hi", _coord(self.hi))
        if self.lo > self.hi:
            raise SocietyError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    def contains(self, p: CoordLike) -> bool:
        p = _coord(p)
        return self.lo <= p <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Voter:
    """A named voter with two disjoint approval intervals, left before right."""

    name: str
    first: Interval
    second: Interval

    def __post_init__(self) -> None:
        if not _NAME_RE.fullmatch(self.name):
            raise SocietyError(f"bad voter name {self.name!r}: use letters, digits, _")
        if not self.first.hi < self.second.lo:
            raise SocietyError(
                f"voter {self.name}: intervals {self.first} and {self.second} "
                "must be disjoint with the first strictly to the left"
            )

    @property
    def intervals(self) -> tuple[Interval, Interval]:
        return (self.first, self.second)

    def approves(self, p: CoordLike) -> bool:
        return self.first.contains(p) or self.second.contains(p)

    def intersects(self, other: "Voter") -> bool:
        return any(a.intersects(b) for a in self.intervals for b in other.intervals)


@dataclass(frozen=True)
class Society:
    """An ordered collection of voters with pairwise-distinct names."""

    voters: tuple[Voter, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "voters", tuple(self.voters))
        if not self.voters:
            raise SocietyError("a society needs at least one voter")
        seen: set[str] = set()
        for v in self.voters:
            if v.name in seen:
                raise SocietyError(f"duplicate voter name {v.name!r}")
            seen.add(v.name)

    @property
    def n(self) -> int:
        return len(self.voters)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.voters)

    def voter(self, name: str) -> Voter:
        for v in self.voters:
            if v.name == name:
                return v
        raise KeyError(name)

    def endpoints(self) -> list[Fraction]:
        """All 4n interval endpoints, in voter order (not sorted)."""
        out: list[Fraction] = []
        for v in self.voters:
            out.extend((v.first.lo, v.first.hi, v.second.lo, v.second.hi))
        return out

    def has_distinct_endpoints(self) -> bool:
        pts = self.endpoints()
        return len(set(pts)) == len(pts)


@dataclass(frozen=True)
class ApprovalResult:
    """Approval number with a witness platform and the exact ratio a/n."""

    approval_number: int
    witness_platform: Fraction
    approval_ratio: Fraction


@dataclass(frozen=True)
class PairwiseReport:
    pairwise_intersecting: bool
    violations: tuple[tuple[str, str], ...]

    def __bool__(self) -> bool:
        return self.pairwise_intersecting


def approval_number(society: Society) -> ApprovalResult:
    """Maximum number of voters approving a single platform, with a witness.

    Sweeps the sorted endpoint events; at equal coordinates all interval
    openings are processed before closings, so boundary contact counts.
    The witness is the leftmost coordinate achieving the maximum.  Because
    each voter's two intervals are disjoint, counting covering intervals
    equals counting approving voters.
    """
    events: list[tuple[Fraction, int]] = []
    for v in society.voters:
        for iv in v.intervals:
            events.append((iv.lo, 0))
            events.append((iv.hi, 1))
    events.sort()

    depth = 0
    best = 0
    witness = events[0][0]
    for coord, kind in events:
        if kind == 0:
            depth += 1
            if depth > best:
                best = depth
                witness = coord
        else:
            depth -= 1
    return ApprovalResult(best, witness, Fraction(best, society.n))


def is_pairwise_intersecting(society: Society) -> PairwiseReport:
    """Check that every pair of voters shares some approved platform.

    Closed-interval semantics: [a,b] meets [c,d] iff a <= d and c <= b.
    All violating pairs are reported, in voter order.
    """
    violations: list[tuple[str, str]] = []
    voters = society.voters
    for i in range(len(voters)):
        for j in range(i + 1, len(voters)):
            if not voters[i].intersects(voters[j]):
                violations.append((voters[i].name, voters[j].name))
    return PairwiseReport(not violations, tuple(violations))


def parse_society(text: str) -> Society:
    """Parse the one-voter-per-line text format.

    Each line is ``NAME lo1 hi1 lo2 hi2`` with integer or ``p/q`` rational
    coordinates.  Blank lines and lines starting with ``#`` are skipped.
    """
    voters: list[Voter] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 5:
            raise SocietyError(
                f"line {lineno}: expected 'NAME lo1 hi1 lo2 hi2', got {len(fields)} fields"
            )
        name, lo1, hi1, lo2, hi2 = fields
        try:
            voter = Voter(name, Interval(lo1, hi1), Interval(lo2, hi2))
        except SocietyError as exc:
            raise SocietyError(f"line {lineno}: {exc}") from None
        voters.append(voter)
    if not voters:
        raise SocietyError("no voters found in society text")
    return Society(tuple(voters))


def format_society(society: Society) -> str:
    lines = [
        f"{v.name} {v.first.lo} {v.first.hi} {v.second.lo} {v.second.hi}"
        for v in society.voters
    ]
    return "\n".join(lines) + "\n"


def society_from_pairs(
    spec: Iterable[tuple[str, CoordLike, CoordLike, CoordLike, CoordLike]]
) -> Society:
    """Convenience constructor from (name, lo1, hi1, lo2, hi2) tuples."""
    return Society(
        tuple(Voter(n, Interval(a, b), Interval(c, d)) for n, a, b, c, d in spec)
    )
