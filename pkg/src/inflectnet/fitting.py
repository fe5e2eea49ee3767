"""Parametric fits: the four-parameter coverage model and power-law tails.

The coverage model is

    f(x) = x**gamma + x**alpha * (1 - x**delta)**beta

fitted by least squares to a normalized coverage curve. ``eta``, the smaller
of ``alpha`` and ``gamma``, sets how steeply the curve rises at the origin.
The two-parameter variant ``x + x**alpha * (1 - x)**beta`` is the special
case ``gamma = delta = 1``.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
from scipy.optimize import minimize

from .coverage_stats import CoverageCurve, normalized_coverage
from .errors import DomainError
from .inflection_graph import SizeHistogram

__all__ = [
    "FitParams",
    "FitConfig",
    "FitResult",
    "PowerLawFit",
    "TABLE_CENTROID",
    "eval_coverage_model",
    "coverage_points",
    "initial_guesses",
    "sum_squared_error",
    "fit_coverage_model",
    "compute_eta",
    "fit_power_law",
    "fit_csv",
    "power_law_csv",
]


@dataclass(frozen=True)
class FitParams:
    alpha: float
    beta: float
    gamma_fit: float
    delta: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma_fit", "delta"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise DomainError(f"{name} must be positive and finite, got {v}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma_fit, self.delta)

    @property
    def eta(self) -> float:
        return compute_eta(self)


#: Rounded mean of the parameters reported for five Latin texts; first fit start.
TABLE_CENTROID = FitParams(0.35, 1.33, 0.32, 0.52)


@dataclass(frozen=True)
class FitConfig:
    """Options for :func:`fit_coverage_model`.

    ``model`` is ``"four"`` (all parameters free) or ``"two"`` (``gamma``
    and ``delta`` pinned to 1). Start 0 is ``initial``; the remaining
    ``n_starts - 1`` are log-normal perturbations of it with spread
    ``spread``, drawn from ``seed``.
    """

    n_starts: int = 16
    seed: int = 42
    model: str = "four"
    initial: FitParams = TABLE_CENTROID
    spread: float = 0.5
    simplex_step: float = 0.1
    xatol: float = 1e-10
    converge_diameter: float = 1e-9
    max_restarts: int = 8
    maxfev: int = 20_000

    def __post_init__(self):
        if self.model not in ("four", "two"):
            raise ValueError(f"model must be 'four' or 'two', got {self.model!r}")
        if self.n_starts < 1:
            raise ValueError("n_starts must be at least 1")


@dataclass(frozen=True)
class FitResult:
    params: FitParams
    sse: float
    eta: float
    n_points: int
    converged: bool
    model: str = "four"
    nfev: int = 0
    start_index: int = 0


@dataclass(frozen=True)
class PowerLawFit:
    tau: float
    intercept: float
    points_used: int
    excluded_sizes: int
    sizes: tuple[int, ...] = field(default=(), repr=False)


def eval_coverage_model(p: FitParams, x):
    """``x**gamma + x**alpha * (1 - x**delta)**beta`` for ``x`` in [0, 1]."""
    a, b, g, d = p.as_tuple()
    return _model(a, b, g, d, np.asarray(x, dtype=float))


def _model(a, b, g, d, x):
    # 0**positive == 0 in numpy, which gives f(0) = 0 and f(1) = 1
    out = x**g + x**a * (1.0 - x**d) ** b
    return float(out) if np.ndim(out) == 0 else out


def compute_eta(p: FitParams) -> float:
    return min(p.alpha, p.gamma_fit)


def coverage_points(cov: CoverageCurve, n_points: int = 500) -> np.ndarray:
    """Normalized coverage sampled at ``n_points`` evenly spaced x in [0, 1]; shape (n, 2)."""
    xs = np.linspace(0.0, 1.0, n_points)
    return np.column_stack([xs, normalized_coverage(cov, xs)])


def _check_points(points) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DomainError("points must be a sequence of (x, c) pairs")
    if len(pts) < 8:
        raise DomainError(f"need at least 8 points to fit, got {len(pts)}")
    if not np.all(np.isfinite(pts)):
        raise DomainError("points must be finite")
    x, c = pts[:, 0], pts[:, 1]
    if np.any(x < 0) or np.any(x > 1) or np.any(c < 0) or np.any(c > 1):
        raise DomainError("x and c must lie in [0, 1]")
    if len(np.unique(x)) != len(x):
        raise DomainError("x values must be distinct")
    return x, c


def _expand(q: np.ndarray, model: str) -> tuple[float, float, float, float]:
    e = [float(v) for v in np.exp(q)]
    if model == "two":
        return (e[0], e[1], 1.0, 1.0)
    return tuple(e)


def _free(p: FitParams, model: str) -> np.ndarray:
    vals = p.as_tuple()[:2] if model == "two" else p.as_tuple()
    return np.log(np.array(vals, dtype=float))


def sum_squared_error(p: FitParams, points) -> float:
    x, c = _check_points(points)
    r = c - eval_coverage_model(p, x)
    return float(r @ r)


def initial_guesses(config: FitConfig | None = None) -> list[FitParams]:
    """The deterministic list of multi-start points used by the fit."""
    config = config or FitConfig()
    rng = np.random.default_rng(config.seed)
    base = np.log(np.array(config.initial.as_tuple()))
    starts = [config.initial]
    for _ in range(config.n_starts - 1):
        q = base + rng.normal(0.0, config.spread, size=4)
        starts.append(FitParams(*(float(v) for v in np.exp(q))))
    if config.model == "two":
        starts = [FitParams(s.alpha, s.beta, 1.0, 1.0) for s in starts]
    return starts


def _simplex(q0: np.ndarray, step: float) -> np.ndarray:
    return np.vstack([q0, q0 + step * np.eye(len(q0))])


def _diameter(simplex: np.ndarray) -> float:
    diff = simplex[:, None, :] - simplex[None, :, :]
    return float(np.sqrt((diff**2).sum(-1)).max())


def _run_start(sse, q0, config):
    """Nelder-Mead from ``q0``, restarted from its own optimum until it stops improving."""
    q = q0
    best_f = sse(q0)
    fatol = 1e-14 * max(best_f, 1e-30)
    nfev = 1
    res = None
    for _ in range(config.max_restarts):
        res = minimize(sse, q, method="Nelder-Mead",
                       options=dict(initial_simplex=_simplex(q, config.simplex_step),
                                    xatol=config.xatol, fatol=fatol,
                                    maxfev=config.maxfev, maxiter=config.maxfev,
                                    adaptive=True))
        nfev += res.nfev
        improved = res.fun < best_f - fatol
        if res.fun <= best_f:
            q, best_f = res.x, float(res.fun)
        if not improved:
            break
    return q, best_f, _diameter(res.final_simplex[0]), nfev


def fit_coverage_model(points, config: FitConfig | None = None) -> FitResult:
    """Least-squares fit of the coverage model to ``(x, c)`` points.

    Derivative-free simplex search on log-parameters (so every parameter
    stays positive) from each start in :func:`initial_guesses`. The best
    sum of squared residuals wins, ties going to the earlier start.
    ``converged`` means the winning simplex shrank below
    ``config.converge_diameter`` in log-parameter space.
    """
    config = config or FitConfig()
    x, c = _check_points(points)
    model = config.model

    def sse(q):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            r = c - _model(*_expand(q, model), x)
            val = float(r @ r)
        return val if math.isfinite(val) else math.inf

    best = None
    total_fev = 0
    for i, start in enumerate(initial_guesses(config)):
        q, f, diam, nfev = _run_start(sse, _free(start, model), config)
        total_fev += nfev
        if best is None or f < best[1]:
            best = (q, f, diam, i)

    q, f, diam, idx = best
    params = FitParams(*_expand(q, model))
    return FitResult(params=params, sse=f, eta=compute_eta(params), n_points=len(x),
                     converged=diam < config.converge_diameter, model=model,
                     nfev=total_fev, start_index=idx)


def fit_power_law(h: SizeHistogram | Mapping[int, int], exclude_largest: int = 5) -> PowerLawFit:
    """Straight-line fit of ``log H(m)`` against ``log m``; returns ``tau = -slope``.

    Sizes with ``H(m) = 0`` are skipped, then the ``exclude_largest``
    largest remaining sizes are dropped before the ordinary least squares.
    """
    counts = h.counts if isinstance(h, SizeHistogram) else h
    if exclude_largest < 0:
        raise ValueError("exclude_largest must be nonnegative")
    sizes = sorted(m for m, n in counts.items() if n > 0 and m > 0)
    kept = sizes[: max(len(sizes) - exclude_largest, 0)]
    if len(kept) < 2:
        raise DomainError(
            f"power-law fit needs at least 2 sizes after excluding {exclude_largest}, "
            f"have {len(kept)}")
    logm = np.log(np.array(kept, dtype=float))
    logh = np.log(np.array([counts[m] for m in kept], dtype=float))
    slope, intercept = np.polyfit(logm, logh, 1)
    return PowerLawFit(tau=float(-slope), intercept=float(intercept), points_used=len(kept),
                       excluded_sizes=len(sizes) - len(kept), sizes=tuple(kept))


def _csv(header: Sequence[str], row: Sequence) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerow(row)
    return buf.getvalue()


def fit_csv(result: FitResult) -> str:
    p = result.params
    return _csv(("alpha", "beta", "gamma", "delta", "eta", "sse", "converged"),
                (repr(p.alpha), repr(p.beta), repr(p.gamma_fit), repr(p.delta),
                 repr(result.eta), repr(result.sse), str(result.converged).lower()))


def power_law_csv(fit: PowerLawFit | None) -> str:
    header = ("tau", "intercept", "points_used")
    if fit is None:
        return ",".join(header) + "\n"
    return _csv(header, (repr(fit.tau), repr(fit.intercept), fit.points_used))
