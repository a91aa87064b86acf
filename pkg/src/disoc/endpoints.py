"""Endpoint representations: the total order of a society's 4n endpoints.

A representation is a sequence of signed tokens, ``+NAME`` for an interval
opening and ``-NAME`` for a closing.  Each voter contributes exactly four
tokens in the pattern open, close, open, close.  Realizing a representation
geometrically assigns coordinate = 1-based token index, which yields a
society with all-distinct endpoints whose endpoint order is the
representation itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .society import CoincidentEndpointsError, Interval, Society, SocietyError, Voter

OPEN = "+"
CLOSE = "-"

_TOKEN_RE = re.compile(r"([+-])([A-Za-z0-9_]+)")

# Expected sign for a name's k-th token (0-based).
_PATTERN = (OPEN, CLOSE, OPEN, CLOSE)


class EndpointParseError(ValueError):
    """Malformed token text or an invalid open/close pattern.

    ``symbol`` names the offending voter where applicable and
    ``token_index`` is the 0-based index of the offending token.
    """

    def __init__(self, message: str, symbol: str | None = None,
                 token_index: int | None = None):
        super().__init__(message)
        self.symbol = symbol
        self.token_index = token_index


Token = tuple[str, str]  # (sign, name)


def _validate_tokens(tokens: tuple[Token, ...]) -> None:
    counts: dict[str, int] = {}
    for index, (sign, name) in enumerate(tokens):
        k = counts.get(name, 0)
        if k >= 4:
            raise EndpointParseError(
                f"symbol {name!r} occurs more than 4 times (extra at token {index})",
                symbol=name, token_index=index,
            )
        if sign != _PATTERN[k]:
            raise EndpointParseError(
                f"symbol {name!r}: occurrence {k + 1} at token {index} is "
                f"'{sign}' but the open,close,open,close pattern needs "
                f"'{_PATTERN[k]}'",
                symbol=name, token_index=index,
            )
        counts[name] = k + 1
    for name, k in counts.items():
        if k != 4:
            raise EndpointParseError(
                f"symbol {name!r} occurs {k} times (expected 4)", symbol=name
            )


@dataclass(frozen=True)
class EndpointRepresentation:
    """A validated sequence of 4n signed endpoint tokens."""

    tokens: tuple[Token, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        _validate_tokens(self.tokens)

    @property
    def n(self) -> int:
        return len(self.tokens) // 4

    @property
    def names(self) -> tuple[str, ...]:
        """Voter names in order of first appearance."""
        seen: list[str] = []
        have: set[str] = set()
        for _, name in self.tokens:
            if name not in have:
                have.add(name)
                seen.append(name)
        return tuple(seen)

    def __str__(self) -> str:
        return "".join(sign + name for sign, name in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def parse_endpoint_rep(text: str) -> EndpointRepresentation:
    """Parse ``+A-A+A-A`` style text, whitespace-insensitive and case-sensitive."""
    tokens: list[Token] = []
    pos = 0
    length = len(text)
    while pos < length:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise EndpointParseError(
                f"malformed token at character {pos} (near {text[pos:pos + 8]!r}); "
                "expected '+' or '-' followed by a name",
                token_index=len(tokens),
            )
        tokens.append((m.group(1), m.group(2)))
        pos = m.end()
    if not tokens:
        raise EndpointParseError("empty endpoint representation")
    return EndpointRepresentation(tuple(tokens))


def society_from_endpoint_rep(rep: EndpointRepresentation) -> Society:
    """Realize a representation with coordinate = 1-based token index."""
    positions: dict[str, list[int]] = {}
    for index, (_, name) in enumerate(rep.tokens, start=1):
        positions.setdefault(name, []).append(index)
    voters = []
    for name in rep.names:
        a, b, c, d = positions[name]
        voters.append(Voter(name, Interval(a, b), Interval(c, d)))
    return Society(tuple(voters))


def endpoint_rep_from_society(society: Society) -> EndpointRepresentation:
    """Read off the endpoint order of a society with all-distinct endpoints."""
    events: list[tuple[Fraction, str, str]] = []
    for v in society.voters:
        events.append((v.first.lo, OPEN, v.name))
        events.append((v.first.hi, CLOSE, v.name))
        events.append((v.second.lo, OPEN, v.name))
        events.append((v.second.hi, CLOSE, v.name))
    coords = [c for c, _, _ in events]
    if len(set(coords)) != len(coords):
        seen: dict[Fraction, str] = {}
        for c, _, name in events:
            if c in seen:
                raise CoincidentEndpointsError(
                    f"endpoint {c} is shared by voters {seen[c]} and {name}; "
                    "perturb the coordinates, or work with the sweep directly"
                )
            seen[c] = name
    events.sort(key=lambda e: e[0])
    return EndpointRepresentation(tuple((sign, name) for _, sign, name in events))
