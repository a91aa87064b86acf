"""Bundled corpus of verified societies and strings.

Every entry ships with its claimed approval number (or diameter) and is
re-verified from scratch by :func:`verify_corpus`; nothing here is
trusted.  The first two societies are small hand-constructed examples;
the ``heuristic-*`` entries were produced by endpoint-swap search and
have the smallest known approval ratios at their sizes, several hitting
ratio 1/3 exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .endpoints import EndpointRepresentation, parse_endpoint_rep
from .search import CertificateReport, verify_certificate
from .strings import DoubleString


@dataclass(frozen=True)
class CorpusSociety:
    id: str
    n: int
    approval: int
    rep_text: str

    def rep(self) -> EndpointRepresentation:
        return parse_endpoint_rep(self.rep_text)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.approval, self.n)


@dataclass(frozen=True)
class CorpusString:
    id: str
    text: str
    diameter: int

    def string(self) -> DoubleString:
        return DoubleString.parse(self.text)


CORPUS_SOCIETIES: tuple[CorpusSociety, ...] = (
    CorpusSociety(
        "ref-n4-a3", 4, 3,
        "+A+C+B-A+D-C+A-B-D+C+B-C+D-B-D-A",
    ),
    CorpusSociety(
        "crafted-n8-a3", 8, 3,
        "+A+B+C-A+E-B+D-C+G-D+F-E+H-F+A-G+E-E+D-H+F-A+B-D+C-F+G-G+H-C-B-H",
    ),
    CorpusSociety(
        "heuristic-n8-a3", 8, 3,
        "+A+B+F-F+G-A+F-B+C-C+D-G+E-D+H-F+G-G+A-E+D-H+C-A+B-D+E-E+H-H-B-C",
    ),
    CorpusSociety(
        "heuristic-n12-a4", 12, 4,
        "+A+B+C+F-C+H-B+L-L+G-G+I-F+D-A+C-H+L-D+E-E+J-I+G-J+K-C+B-L+I-I+D-K"
        "+E-G+J-B+F-D+K-F+A-A+H-K-E-H-J",
    ),
    CorpusSociety(
        "heuristic-n15-a5", 15, 5,
        "+A+B+C+D+E-C+G-A+O-G+F-D+K-F+J-J+N-E+C-B+A-O+D-K+H-H+M-N+J-M+L-L+I"
        "-D+F-A+G-C+N-I+L-N+H-J+M-F+K-G+I-K+B-B+E-E+O-H-M-I-L-O",
    ),
    CorpusSociety(
        "heuristic-n18-a6", 18, 6,
        "+A+B+C+D+E+G-A+M-C+K-G+Q-Q+P-P+O-O+J-D+F-E+A-B+C-F+P-K+I-I+R-M+O-R"
        "+H-H+L-J+Q-L+N-A+G-C+J-J+F-P+I-O+R-N+H-Q+L-G+D-F+N-D+K-K+B-B+E-R"
        "+M-N-M-E-H-L-I",
    ),
    CorpusSociety(
        "heuristic-n21-a7", 21, 7,
        "+A+B+C+D+E+F+I-A+K-K+N-N+R-R+G-E+T-B+J-T+U-G+Q-D+B-I+P-Q+M-C+H-F+L"
        "-J+S-U+O-B+D-D+C-C+I-I+F-F+G-P+Q-M+R-L+J-S+N-O+K-H+A-G+E-J+T-Q+P"
        "-P+M-M+U-R+S-S+O-U+L-N+H-T-H-K-L-E-O-A",
    ),
    CorpusSociety(
        "heuristic-n24-a8", 24, 8,
        "+A+B+C+D+E+F+G+L-G+N-C+O-F+Q-O+M-N+T-B+H-H+K-Q+I-I+U-U+X-D+J-L+F-A"
        "+O-E+C-J+G-M+P-T+U-P+H-K+W-X+I-W+R-R+V-V+S-O+Q-C+J-F+N-G+B-U+X-S"
        "+P-H+R-I+V-X+W-Q+K-B+D-J+T-N+S-D+L-T+M-K+A-L+E-P-A-W-S-E-M-V-R",
    ),
)

CORPUS_STRINGS: tuple[CorpusString, ...] = (
    CorpusString("double5-d2", "ABCDEBECAD", 2),
    CorpusString("double8-d3", "ABCDEFGHEADFCGBH", 3),
    CorpusString(
        "template13-d4",
        "1,2,3,4,5,6,7,8,9,10,1,11,6,12,13,5,4,7,11,10,9,2,3,13,12,8",
        4,
    ),
)


@dataclass(frozen=True)
class CorpusResult:
    entry: CorpusSociety
    report: CertificateReport

    @property
    def passed(self) -> bool:
        return self.report.passed and self.report.n == self.entry.n


def verify_corpus() -> list[CorpusResult]:
    """Re-verify every bundled society against its claims."""
    return [
        CorpusResult(e, verify_certificate(e.rep(), e.approval))
        for e in CORPUS_SOCIETIES
    ]


def verify_corpus_strings() -> list[tuple[CorpusString, int, bool]]:
    """Recompute each bundled string's diameter; (entry, got, ok) rows."""
    out = []
    for e in CORPUS_STRINGS:
        got = e.string().diameter().diameter
        out.append((e, got, got == e.diameter))
    return out
