"""Per-interval meeting statistics for societies with distinct endpoints.

For an interval I, classify every other interval J that matters by how it
meets I: containing only I's left endpoint, only its right endpoint, both
endpoints, or intersecting I while containing neither endpoint (J then
sits in I's open interior).  The four counts partition the intervals
intersecting I, so their sum is I's intersection degree.

A global identity ties the last two classes together: J contains both
endpoints of I exactly when I sits in the center of J, so the grand totals
of the "both" and "center" counts over all 2n intervals are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .society import CoincidentEndpointsError, Interval, Society

IntervalKey = tuple[str, int]  # (voter name, 0 for first interval / 1 for second)


@dataclass(frozen=True)
class EndpointStats:
    left: int
    right: int
    both: int
    center: int

    @property
    def total(self) -> int:
        """Number of other intervals intersecting this one."""
        return self.left + self.right + self.both + self.center


@dataclass(frozen=True)
class SocietyStats:
    per_interval: Mapping[IntervalKey, EndpointStats]
    total_both: int
    total_center: int

    def voter_total(self, name: str) -> int:
        """Sum of all eight counts over a voter's two intervals."""
        return self.per_interval[(name, 0)].total + self.per_interval[(name, 1)].total


def endpoint_stats(society: Society) -> SocietyStats:
    """Compute the left/right/both/center counts for all 2n intervals.

    Requires all 4n endpoints distinct (raises CoincidentEndpointsError
    otherwise); the classification is ambiguous on ties.
    """
    if not society.has_distinct_endpoints():
        raise CoincidentEndpointsError(
            "endpoint statistics need all endpoints distinct; perturb the "
            "coordinates first"
        )
    intervals: list[tuple[IntervalKey, Interval]] = []
    for v in society.voters:
        intervals.append(((v.name, 0), v.first))
        intervals.append(((v.name, 1), v.second))

    per: dict[IntervalKey, EndpointStats] = {}
    total_both = 0
    total_center = 0
    for key, iv in intervals:
        left = right = both = center = 0
        for other_key, jv in intervals:
            if other_key == key:
                continue
            has_lo = jv.lo <= iv.lo <= jv.hi
            has_hi = jv.lo <= iv.hi <= jv.hi
            if has_lo and has_hi:
                both += 1
            elif has_lo:
                left += 1
            elif has_hi:
                right += 1
            elif iv.intersects(jv):
                center += 1
        per[key] = EndpointStats(left, right, both, center)
        total_both += both
        total_center += center
    return SocietyStats(per, total_both, total_center)
