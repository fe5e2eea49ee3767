"""Rank-frequency sequences, coverage curves and the Zipf coverage formula.

Coverage after ``k`` ranks is the share of running words covered by the
``k`` most frequent words (or word groups). Cumulative counts are kept as
exact integers; each coverage value is one division of two integers.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .corpus import FrequencyTable, TokenStream
from .errors import DomainError
from .inflection_graph import WordGroup
from .lexicon import UnknownPolicy

__all__ = [
    "EULER_GAMMA",
    "RankFrequency",
    "CoverageCurve",
    "group_occurrences",
    "group_labels",
    "rank_frequency",
    "coverage",
    "normalized_coverage",
    "coverage_threshold",
    "digamma",
    "zipf_coverage",
    "rank_frequency_csv",
    "coverage_csv",
    "normalized_coverage_csv",
]

EULER_GAMMA = 0.57721566490153286061

# B_2k / 2k for k = 1..7, used in the asymptotic series of digamma
_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)
_SHIFT_TO = 10.0


@dataclass(frozen=True)
class RankFrequency:
    """Counts ``n(1) >= n(2) >= ...`` with parallel labels."""

    counts: tuple[int, ...]
    labels: tuple[str, ...]
    kind: str = "words"

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class CoverageCurve:
    """``cumulative[k]`` is the summed count of the top ``k`` entries, ``k = 0..L``."""

    cumulative: tuple[int, ...]
    total: int

    @property
    def L(self) -> int:
        return len(self.cumulative) - 1

    @property
    def values(self) -> np.ndarray:
        return np.array(self.cumulative, dtype=float) / self.total

    def fraction(self, k: int) -> Fraction:
        return Fraction(self.cumulative[k], self.total)

    def __getitem__(self, k: int) -> float:
        return self.cumulative[k] / self.total

    def __len__(self) -> int:
        return len(self.cumulative)


def group_labels(groups: Iterable[WordGroup]) -> dict[int, str]:
    return {g.group_id: g.label for g in groups}


def group_occurrences(ts: TokenStream, groups: Iterable[WordGroup],
                      policy: UnknownPolicy = UnknownPolicy.SELF_HEADWORD) -> FrequencyTable:
    """Count running words per word group, keyed by ``group_id``.

    Each token is counted once, in the group holding its form vertex. Tokens
    without a group (only possible under DROP) go into ``skipped``.
    """
    policy = UnknownPolicy.parse(policy)
    owner = {f: g.group_id for g in groups for f in g.form_members}
    counts: dict[int, int] = {}
    skipped = 0
    for tok in ts:
        gid = owner.get(tok)
        if gid is None:
            if policy is UnknownPolicy.DROP:
                skipped += 1
                continue
            raise ValueError(f"token {tok!r} belongs to no group; were the groups built from this text?")
        counts[gid] = counts.get(gid, 0) + 1
    return FrequencyTable(counts, len(ts) - skipped, skipped)


def rank_frequency(freq: FrequencyTable, kind: str = "words",
                   labels: Mapping | None = None) -> RankFrequency:
    """Sort entries by decreasing count; ties go to the smaller label.

    ``labels`` maps keys to display labels (e.g. :func:`group_labels`); by
    default the key itself is the label.
    """
    def label(key):
        return str(labels[key]) if labels is not None else str(key)

    ranked = sorted(((n, label(k)) for k, n in freq.items() if n > 0),
                    key=lambda nl: (-nl[0], nl[1]))
    return RankFrequency(tuple(n for n, _ in ranked), tuple(lab for _, lab in ranked), kind)


def coverage(rf: RankFrequency) -> CoverageCurve:
    if not rf.counts:
        raise DomainError("coverage of an empty ranking is undefined")
    cum = [0]
    for n in rf.counts:
        cum.append(cum[-1] + n)
    return CoverageCurve(tuple(cum), cum[-1])


def normalized_coverage(cov: CoverageCurve, x):
    """Coverage as a function of the fraction ``x`` of the ranked list.

    Linear interpolation between the grid points ``(k/L, C(k))``; accepts a
    scalar or an array.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(xa)) or np.any(xa < 0) or np.any(xa > 1):
        raise DomainError("normalized coverage is defined for 0 <= x <= 1")
    grid = np.arange(cov.L + 1) / cov.L
    out = np.interp(xa, grid, cov.values)
    return float(out) if out.ndim == 0 else out


def coverage_threshold(cov: CoverageCurve, p: float) -> int:
    """Smallest ``k`` with ``C(k) >= p``, compared exactly.

    ``p`` is read as the decimal it prints as, so 0.95 means 95/100.
    """
    if not 0 < p <= 1:
        raise DomainError(f"coverage level must be in (0, 1], got {p}")
    target = Fraction(repr(float(p)))
    for k, c in enumerate(cov.cumulative):
        if c * target.denominator >= target.numerator * cov.total:
            return k
    return cov.L


def _digamma_scalar(z: float) -> float:
    acc = 0.0
    while z < _SHIFT_TO:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    series = 0.0
    for c in reversed(_ASYMPTOTIC):
        series = series * inv2 + c
    return acc + math.log(z) - 0.5 / z - series * inv2


def _digamma_array(z: np.ndarray) -> np.ndarray:
    z = z.copy()
    acc = np.zeros_like(z)
    low = z < _SHIFT_TO
    while low.any():
        acc[low] -= 1.0 / z[low]
        z[low] += 1.0
        low = z < _SHIFT_TO
    inv2 = 1.0 / (z * z)
    series = np.zeros_like(z)
    for c in reversed(_ASYMPTOTIC):
        series = series * inv2 + c
    return acc + np.log(z) - 0.5 / z - series * inv2


def digamma(z):
    """Logarithmic derivative of the gamma function for ``z > 0``.

    Shifts the argument up to at least 10 with ``psi(z) = psi(z+1) - 1/z``
    and then sums the asymptotic series through the ``z**-14`` term, which
    gives close to full double precision.
    """
    if np.ndim(z) == 0:
        z = float(z)
        if not z > 0 or math.isinf(z):
            raise DomainError(f"digamma is implemented for finite z > 0, got {z}")
        return _digamma_scalar(z)
    za = np.asarray(z, dtype=float)
    if np.any(~(za > 0)) or np.any(np.isinf(za)):
        raise DomainError("digamma is implemented for finite z > 0")
    return _digamma_array(za)


def zipf_coverage(N: int, x):
    """Normalized coverage of a text whose ``N`` word counts follow ``A/r``.

    Equals ``(psi(N*x + 1) + gamma) / (psi(N + 1) + gamma)``, i.e. the ratio
    of harmonic numbers ``H(N*x) / H(N)`` when ``N*x`` is an integer.
    ``N*x`` is used as a real argument without rounding.
    """
    if N < 1 or int(N) != N:
        raise DomainError(f"N must be a positive integer, got {N}")
    xa = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(xa)) or np.any(xa < 0) or np.any(xa > 1):
        raise DomainError("zipf_coverage is defined for 0 <= x <= 1")
    y = N * xa
    denom = digamma(N + 1.0) + EULER_GAMMA
    num = np.where(y > 0, digamma(y + 1.0) + EULER_GAMMA, 0.0)
    out = num / denom
    return float(out) if out.ndim == 0 else out


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def rank_frequency_csv(rf: RankFrequency) -> str:
    return _csv(("rank", "count", "label"),
                ((r, n, lab) for r, (n, lab) in enumerate(zip(rf.counts, rf.labels), start=1)))


def coverage_csv(cov: CoverageCurve) -> str:
    return _csv(("k", "coverage"), ((k, repr(cov[k])) for k in range(cov.L + 1)))


def normalized_coverage_csv(cov: CoverageCurve, n_points: int = 1000) -> str:
    xs = np.linspace(0.0, 1.0, n_points)
    cs = normalized_coverage(cov, xs)
    return _csv(("x", "c"), ((repr(float(a)), repr(float(b))) for a, b in zip(xs, cs)))
