"""Double-n strings: 2n-long strings with every symbol appearing twice.

The distance between two symbols is the smallest position gap over the
four occurrence pairs (adjacent positions are at distance 1), and the
diameter is the largest distance over all symbol pairs.  Realizing every
occurrence as a closed interval of a fixed width turns a string into a
double-interval society; at width equal to the diameter the society is
pairwise-intersecting with approval number diameter + 1.

Two explicit constructions with provably small diameter are provided:
a four-block interleaving giving diameter just under n/2, and a blown-up
13-symbol template giving diameter at most 5*ceil(n/13) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .endpoints import CLOSE, OPEN, EndpointRepresentation
from .society import Interval, Society, Voter


class DoubleStringError(ValueError):
    """Invalid double string, unknown symbol, or unrealizable width."""


@dataclass(frozen=True)
class DiameterReport:
    diameter: int
    witness_pair: tuple[str, str] | None


@dataclass(frozen=True)
class DoubleString:
    """An ordered sequence of 2n symbol tokens, each token appearing twice."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(str(s) for s in self.symbols))
        counts: dict[str, int] = {}
        for s in self.symbols:
            counts[s] = counts.get(s, 0) + 1
        for s, c in counts.items():
            if c != 2:
                raise DoubleStringError(f"symbol {s!r} occurs {c} times (expected 2)")

    @classmethod
    def parse(cls, text: str) -> "DoubleString":
        """Parse comma-separated tokens, or one symbol per character.

        ``A B C A B C`` style whitespace separation also works; in the
        compact form every non-space character is its own symbol.
        """
        text = text.strip()
        if not text:
            raise DoubleStringError("empty double string")
        if "," in text:
            toks = [t.strip() for t in text.split(",")]
            if any(not t for t in toks):
                raise DoubleStringError("empty token between commas")
        elif any(ch.isspace() for ch in text):
            toks = text.split()
        else:
            toks = list(text)
        for t in toks:
            if not all(ch.isalnum() or ch == "_" for ch in t):
                raise DoubleStringError(f"bad symbol token {t!r}")
        return cls(tuple(toks))

    @classmethod
    def from_ints(cls, labels: Iterable[int]) -> "DoubleString":
        return cls(tuple(str(x) for x in labels))

    @property
    def n(self) -> int:
        return len(self.symbols) // 2

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        if all(len(s) == 1 for s in self.symbols):
            return "".join(self.symbols)
        return ",".join(self.symbols)

    def positions(self) -> dict[str, tuple[int, int]]:
        """1-based occurrence positions of every symbol."""
        pos: dict[str, list[int]] = {}
        for i, s in enumerate(self.symbols, start=1):
            pos.setdefault(s, []).append(i)
        return {s: (p[0], p[1]) for s, p in pos.items()}

    def canonicalize(self) -> "DoubleString":
        """Relabel symbols to 1..n in order of first occurrence. Idempotent."""
        mapping: dict[str, str] = {}
        out: list[str] = []
        for s in self.symbols:
            if s not in mapping:
                mapping[s] = str(len(mapping) + 1)
            out.append(mapping[s])
        return DoubleString(tuple(out))

    def distance(self, a: str, b: str) -> int:
        """Minimum position gap between occurrences of two distinct symbols."""
        if a == b:
            raise DoubleStringError(f"distance needs two distinct symbols, got {a!r} twice")
        pos = self.positions()
        for s in (a, b):
            if s not in pos:
                raise DoubleStringError(f"symbol {s!r} not in string")
        pa, pb = pos[a], pos[b]
        return min(abs(x - y) for x in pa for y in pb)

    def diameter(self) -> DiameterReport:
        """Largest pairwise distance, with a witness pair (None when n == 1)."""
        n = self.n
        if n <= 1:
            return DiameterReport(0, None)
        order: list[str] = []
        seen: set[str] = set()
        for s in self.symbols:
            if s not in seen:
                seen.add(s)
                order.append(s)
        pos = self.positions()
        p = np.array([pos[s] for s in order], dtype=np.int32)  # (n, 2)

        best = -1
        best_pair = (0, 1)
        chunk = 512
        for start in range(0, n, chunk):
            stop = min(start + chunk, n)
            block = p[start:stop]  # (m, 2)
            d = None
            for i in range(2):
                for j in range(2):
                    diff = np.abs(block[:, i, None] - p[None, :, j])
                    d = diff if d is None else np.minimum(d, diff, out=d)
            # Same-symbol distances are not part of the diameter.
            rows = np.arange(start, stop)
            d[rows - start, rows] = -1
            k = int(np.argmax(d))
            i, j = divmod(k, n)
            if d[i, j] > best:
                best = int(d[i, j])
                best_pair = (start + i, j)
        a, b = best_pair
        if a > b:
            a, b = b, a
        return DiameterReport(best, (order[a], order[b]))


def society_from_string(s: DoubleString, width: int) -> Society:
    """Realize each occurrence at position p as the closed interval [p, p+width].

    Requires width >= diameter (so the realized society is guaranteed
    pairwise-intersecting) and, for every symbol, an occurrence gap
    strictly greater than the width (so its own two intervals stay
    disjoint).  At width exactly the diameter the approval number is
    diameter + 1.
    """
    if width < 0:
        raise DoubleStringError("width must be nonnegative")
    d = s.diameter().diameter
    if width < d:
        raise DoubleStringError(
            f"width {width} is below the string diameter {d}; pairwise "
            "intersection would not be guaranteed"
        )
    return _realize(s, width)


def _realize(s: DoubleString, width: int) -> Society:
    voters = []
    for sym, (p1, p2) in s.positions().items():
        if p2 - p1 <= width:
            raise DoubleStringError(
                f"symbol {sym!r}: occurrence gap {p2 - p1} must exceed width "
                f"{width}, or its own intervals would meet"
            )
        voters.append(Voter(sym, Interval(p1, p1 + width), Interval(p2, p2 + width)))
    order = {sym: i for i, sym in enumerate(dict.fromkeys(s.symbols))}
    voters.sort(key=lambda v: order[v.name])
    return Society(tuple(voters))


def endpoint_rep_from_string(s: DoubleString, width: int) -> EndpointRepresentation:
    """Endpoint order of the width-realized string, as a representation.

    Unlike :func:`society_from_string` this does not require the width to
    reach the diameter, so it can build deliberately non-intersecting
    starting points for the search.  Coinciding open/close coordinates are
    ordered open-first, preserving single-point contact between intervals
    exactly ``width`` apart.
    """
    if width < 0:
        raise DoubleStringError("width must be nonnegative")
    for sym, (p1, p2) in s.positions().items():
        if p2 - p1 <= width:
            raise DoubleStringError(
                f"symbol {sym!r}: occurrence gap {p2 - p1} must exceed width {width}"
            )
    tokens: list[tuple[str, str]] = []
    length = len(s.symbols)
    for c in range(1, length + width + 1):
        if c <= length:
            tokens.append((OPEN, s.symbols[c - 1]))
        if c - width >= 1:
            tokens.append((CLOSE, s.symbols[c - width - 1]))
    return EndpointRepresentation(tuple(tokens))


def construct_quarter(n: int) -> DoubleString:
    """Four-block interleaving S1 S2 S3 S4 S1 S3 S2 S4 over 1..n.

    With r = n // 4 the diameter is 2r-1, 2r, 2r, 2r+1 for n = 4r, 4r+1,
    4r+2, 4r+3, always below n/2.  The n = 3 and n = 4 base cases are the
    explicit strings 1,2,3,1,2,3 and 1,2,3,4,1,3,2,4.
    """
    if n < 3:
        raise DoubleStringError("construct_quarter needs n >= 3")
    if n == 3:
        return DoubleString.from_ints([1, 2, 3, 1, 2, 3])
    r, rem = divmod(n, 4)
    if rem == 0:
        sizes = (r, r, r, r)
    elif rem == 1:
        sizes = (r, r, r, r + 1)
    elif rem == 2:
        sizes = (r, r + 1, r + 1, r)
    else:
        sizes = (r, r + 1, r + 1, r + 1)
    blocks: list[list[int]] = []
    next_label = 1
    for size in sizes:
        blocks.append(list(range(next_label, next_label + size)))
        next_label += size
    s1, s2, s3, s4 = blocks
    return DoubleString.from_ints(s1 + s2 + s3 + s4 + s1 + s3 + s2 + s4)


# 13-symbol template with diameter 4, the base of the blow-up construction.
TEMPLATE_13 = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 1, 11, 6, 12, 13,
               5, 4, 7, 11, 10, 9, 2, 3, 13, 12, 8)


def construct_thirteen(n: int) -> DoubleString:
    """Blow up the 13-symbol template to n symbols.

    Every template symbol i becomes the block k(i-1)+1 .. ki with
    k = ceil(n/13); labels above n are dropped.  The result has diameter
    at most 5k - 1.
    """
    if n < 1:
        raise DoubleStringError("construct_thirteen needs n >= 1")
    k = -(-n // 13)
    out: list[int] = []
    for i in TEMPLATE_13:
        for label in range(k * (i - 1) + 1, k * i + 1):
            if label <= n:
                out.append(label)
    return DoubleString.from_ints(out)
