"""Sensing-communication rate regions, Pareto frontier extraction, and the
region-containment check, together with the scalar monotonicity kernels the
containment argument rests on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import ergodic_rates, sensing_rate
from .config import ISAC, SystemConfig, fdsac

#: Absolute slack allowed when comparing smooth rate expressions.
CONTAINMENT_EPS = 1e-9


@dataclass(frozen=True)
class RatePoint:
    """Achievable (sensing rate, sum communication rate) pair in bits/s/Hz."""

    rate_s: float
    rate_c: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rate_s) and math.isfinite(self.rate_c)):
            raise ValueError("rates must be finite")
        if self.rate_s < 0.0 or self.rate_c < 0.0:
            raise ValueError("rates must be nonnegative")


@dataclass(frozen=True)
class FrontierPoint:
    """Rate pair achieved by one (kappa, mu) resource split."""

    kappa: float
    mu: float
    rate_s: float
    rate_c: float


@dataclass(frozen=True)
class RegionFrontier:
    """Grid of achievable split points and its Pareto-maximal subset."""

    points: tuple[FrontierPoint, ...]
    pareto: tuple[FrontierPoint, ...]


@dataclass(frozen=True)
class ContainmentReport:
    """Outcome of testing the split region against the integrated corner."""

    holds: bool
    max_violation: float


def isac_corner(cfg: SystemConfig, p: float) -> RatePoint:
    """Corner of the integrated-mode rectangle: full sensing and sum rate."""
    if not p > 0.0:
        raise ValueError("p must be positive")
    ecr_n, ecr_f = ergodic_rates(cfg, ISAC, p)
    return RatePoint(rate_s=sensing_rate(cfg, ISAC, p), rate_c=ecr_n + ecr_f)


def fdsac_frontier(cfg: SystemConfig, p: float, grid_n: int) -> RegionFrontier:
    """Evaluate the split region on a grid_n x grid_n (kappa, mu) grid.

    The grid includes the exact endpoints 0 and 1 on both axes so the
    boundary equality cases are hit exactly.
    """
    if not p > 0.0:
        raise ValueError("p must be positive")
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    fractions = np.linspace(0.0, 1.0, grid_n)
    points = []
    for kappa in fractions:
        for mu in fractions:
            mode = fdsac(float(kappa), float(mu))
            ecr_n, ecr_f = ergodic_rates(cfg, mode, p)
            points.append(
                FrontierPoint(
                    kappa=float(kappa),
                    mu=float(mu),
                    rate_s=sensing_rate(cfg, mode, p),
                    rate_c=ecr_n + ecr_f,
                )
            )
    return RegionFrontier(points=tuple(points), pareto=tuple(_pareto_subset(points)))


def _pareto_subset(points: list[FrontierPoint]) -> list[FrontierPoint]:
    # Sweep in decreasing rate_s; a point survives iff it strictly improves
    # the best rate_c seen so far.  Exact duplicates collapse to one point.
    seen: set[tuple[float, float]] = set()
    unique = []
    for pt in points:
        key = (pt.rate_s, pt.rate_c)
        if key not in seen:
            seen.add(key)
            unique.append(pt)
    unique.sort(key=lambda pt: (-pt.rate_s, -pt.rate_c))
    best_c = -math.inf
    kept = []
    for pt in unique:
        if pt.rate_c > best_c:
            kept.append(pt)
            best_c = pt.rate_c
    return kept


def containment_check(cfg: SystemConfig, p: float, grid_n: int) -> ContainmentReport:
    """Check that every split grid point is dominated by the integrated corner.

    max_violation is the largest coordinate excess over the corner across
    the grid (negative when all points are strictly inside).
    """
    corner = isac_corner(cfg, p)
    frontier = fdsac_frontier(cfg, p, grid_n)
    worst = -math.inf
    for pt in frontier.points:
        worst = max(worst, pt.rate_s - corner.rate_s, pt.rate_c - corner.rate_c)
    return ContainmentReport(holds=worst <= CONTAINMENT_EPS, max_violation=worst)


def bandwidth_scaled_rate(x: float, a: float, b: float) -> float:
    """Rate through a fractional band: x * ln(1 + a/(x + b)), nats.

    Strictly increasing on x in [0, 1] for a > 0, b >= 0, which is what makes
    shrinking a sub-band never pay off.
    """
    if not a > 0.0:
        raise ValueError("a must be positive")
    if b < 0.0:
        raise ValueError("b must be nonnegative")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0:
        return 0.0
    return x * math.log1p(a / (x + b))


def log_plus_ratio(x: float, c: float) -> float:
    """Monotone helper ln(x + c) + c/(x + c), nondecreasing on x >= 0 for c >= 0.

    The derivative of bandwidth_scaled_rate in its fraction argument equals
    log_plus_ratio(a + b, x) - log_plus_ratio(b, x).
    """
    if c < 0.0:
        raise ValueError("c must be nonnegative")
    if x < 0.0:
        raise ValueError("x must be nonnegative")
    if x + c == 0.0:
        raise ValueError("x + c must be positive")
    return math.log(x + c) + c / (x + c)
