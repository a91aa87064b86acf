"""Exact minimum diameter of double-n strings by exhaustive search.

A double-n string is canonical when its symbols read 1..n in order of
first occurrence; every string has exactly one canonical relabeling and
there are (2n-1)!! canonical strings.  The minimum diameter delta(n) is
found by a descending decision search: starting from the best explicit
construction as incumbent, repeatedly ask "is there a string of diameter
at most d - 1?" with a depth-first search over canonical strings, until
the answer is no.  The decision searches use no theoretical lower bound,
so the result can be checked against the bounds module independently.

Two prunings keep the DFS small; both are optional only in the sense
that the unpruned generator :func:`iter_canonical` exists for counting.

* Pair check: whenever a symbol's second occurrence is placed, its
  distance to every completed symbol must already be within d.
* Expiry: once a completed symbol's second occurrence falls more than d
  positions behind the frontier, nothing placed later can come within d
  of that symbol.  At that moment every symbol must have been introduced
  and every still-open symbol must already sit within d of it.
* Distinct prefix (on by default): a string of diameter at most d must
  introduce new symbols at each of its first n - d positions.
"""

from __future__ import annotations

from multiprocessing import Pool
from typing import Iterator, NamedTuple, Sequence

from .strings import DoubleString, construct_quarter, construct_thirteen


class EnumerationLimitError(ValueError):
    """The request would enumerate an astronomically large space."""


class DeltaResult(NamedTuple):
    delta: int
    witness: DoubleString


def count_canonical(n: int) -> int:
    """Number of canonical double-n strings: (2n-1)!! = 1*3*5*...*(2n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def iter_canonical(n: int) -> Iterator[DoubleString]:
    """Yield every canonical double-n string, without any pruning."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return
    length = 2 * n
    cur: list[int] = []
    open_syms: set[int] = set()

    def rec() -> Iterator[DoubleString]:
        if len(cur) == length:
            yield DoubleString.from_ints(cur)
            return
        for s in sorted(open_syms):
            open_syms.remove(s)
            cur.append(s)
            yield from rec()
            cur.pop()
            open_syms.add(s)
        used = max(cur, default=0)
        if used < n:
            open_syms.add(used + 1)
            cur.append(used + 1)
            yield from rec()
            cur.pop()
            open_syms.remove(used + 1)

    yield from rec()


def _dfs(n: int, d: int, prefix: Sequence[int], distinct_prefix: bool) -> list[int] | None:
    """First canonical double-n string of diameter <= d under ``prefix``.

    Explores completions of the forced prefix in canonical DFS order
    (close open symbols ascending, then introduce the next label) and
    returns the first full string surviving the prunings, or None.
    """
    length = 2 * n
    cur: list[int] = []
    pos1: dict[int, int] = {}
    pos2: dict[int, int] = {}

    def placed_ok(closed: int | None) -> bool:
        p = len(cur)
        if closed is not None:
            if distinct_prefix and p <= n - d:
                return False
            a1, a2 = pos1[closed], p
            for t, b2 in pos2.items():
                if t == closed:
                    continue
                b1 = pos1[t]
                if min(abs(a1 - b1), abs(a1 - b2), abs(a2 - b1), abs(a2 - b2)) > d:
                    return False
        q = p - d
        if q >= 1:
            u = cur[q - 1]
            if pos2.get(u) == q:
                # u can no longer reach any future position.
                if len(pos1) < n:
                    return False
                u1 = pos1[u]
                for t, b1 in pos1.items():
                    if t in pos2:
                        continue
                    if min(abs(b1 - u1), abs(b1 - q)) > d:
                        return False
        return True

    def rec() -> bool:
        p = len(cur)
        if p == length:
            return True
        forced = prefix[p] if p < len(prefix) else None
        for s in sorted(t for t in pos1 if t not in pos2):
            if forced is not None and s != forced:
                continue
            cur.append(s)
            pos2[s] = p + 1
            if placed_ok(s) and rec():
                return True
            del pos2[s]
            cur.pop()
        s = len(pos1) + 1
        if s <= n and (forced is None or forced == s):
            cur.append(s)
            pos1[s] = p + 1
            if placed_ok(None) and rec():
                return True
            del pos1[s]
            cur.pop()
        return False

    return list(cur) if rec() else None


def _worker(args: tuple[int, int, tuple[int, ...], bool]) -> list[int] | None:
    return _dfs(*args)


def _prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All canonical prefixes of the given depth, in DFS order."""
    out: list[tuple[int, ...]] = []
    cur: list[int] = []
    open_syms: set[int] = set()

    def rec(used: int) -> None:
        if len(cur) == depth or len(cur) == 2 * n:
            out.append(tuple(cur))
            return
        for s in sorted(open_syms):
            open_syms.remove(s)
            cur.append(s)
            rec(used)
            cur.pop()
            open_syms.add(s)
        if used < n:
            open_syms.add(used + 1)
            cur.append(used + 1)
            rec(used + 1)
            cur.pop()
            open_syms.remove(used + 1)

    rec(0)
    return out


def exists_with_diameter_at_most(
    n: int,
    d: int,
    *,
    distinct_prefix: bool = True,
    jobs: int = 1,
) -> DoubleString | None:
    """Witness double-n string of diameter <= d, or None if none exists.

    With jobs > 1 the canonical tree is partitioned by fixed prefixes and
    the subtrees searched in parallel; results are consumed in DFS order,
    so the witness (and the None answer) is identical for any job count.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if d < 0:
        return None
    if jobs <= 1 or n < 3:
        found = _dfs(n, d, (), distinct_prefix)
        return DoubleString.from_ints(found) if found else None

    depth = 2
    prefixes = _prefixes(n, depth)
    while len(prefixes) < 4 * jobs and depth < 2 * n:
        depth += 1
        prefixes = _prefixes(n, depth)
    tasks = [(n, d, pre, distinct_prefix) for pre in prefixes]
    with Pool(jobs) as pool:
        for found in pool.imap(_worker, tasks):
            if found is not None:
                return DoubleString.from_ints(found)
    return None


def delta_exhaustive(
    n: int,
    limit: int = 8,
    *,
    distinct_prefix: bool = True,
    jobs: int = 1,
) -> DeltaResult:
    """Exact minimum diameter over all double-n strings, with a witness.

    Starts from the better of the two explicit constructions and runs
    decision searches at decreasing d; each witness's actual diameter
    fast-forwards the descent.  Refuses n beyond ``limit`` (the canonical
    space has (2n-1)!! strings) rather than run forever.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise EnumerationLimitError(
            f"delta_exhaustive(n={n}) would search {count_canonical(n)} "
            f"canonical strings; limit is n <= {limit}"
        )
    if n == 1:
        return DeltaResult(0, DoubleString.from_ints([1, 1]))
    if n == 2:
        witness = DoubleString.from_ints([1, 2, 1, 2])
    else:
        candidates = [construct_quarter(n), construct_thirteen(n)]
        witness = min(candidates, key=lambda s: s.diameter().diameter)
    best = witness.diameter().diameter
    while best > 0:
        found = exists_with_diameter_at_most(
            n, best - 1, distinct_prefix=distinct_prefix, jobs=jobs
        )
        if found is None:
            break
        witness = found
        best = found.diameter().diameter
    return DeltaResult(best, witness)
