"""Simulation-side oracles: per-trial SINRs, empirical outage/rate estimators,
the dense sensing mutual-information identity check, and slope fitting.

Estimates are pure functions of (cfg, mode, p, trials, seed).  Trials are
processed in fixed-size blocks whose partial sums are combined in block
order, so results do not depend on scheduling or worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channel import ChannelDraw, CorrelationMatrix, gain_samples
from .config import Mode, SystemConfig, comm_factors

_CHUNK = 1 << 20
_LN2 = math.log(2.0)

#: Largest dense identity-check problem, in total matrix dimension L*M.
BRUTE_FORCE_LIMIT = 256


@dataclass(frozen=True)
class TrialSinrs:
    """Per-trial link qualities: SIC stage, near-user own message, far user."""

    sinr_sic: float
    snr_n: float
    sinr_f: float


@dataclass(frozen=True)
class EstimateWithError:
    """Monte Carlo estimate with its standard error and trial count."""

    value: float
    std_error: float
    trials: int


def _gamma_bars(cfg: SystemConfig, kappa_t: float) -> tuple[float, float]:
    # Event-level thresholds; a vanished sub-band with a positive target rate
    # makes the decoding event impossible (threshold +inf).
    if kappa_t == 0.0:
        gbar_n = math.inf if cfg.target_rate_n > 0.0 else 0.0
        gbar_f = math.inf if cfg.target_rate_f > 0.0 else 0.0
        return gbar_n, gbar_f
    return 2.0 ** (cfg.target_rate_n / kappa_t) - 1.0, 2.0 ** (cfg.target_rate_f / kappa_t) - 1.0


def _sinr_arrays(
    cfg: SystemConfig,
    kappa_t: float,
    mu_t: float,
    p: float,
    gain_n: np.ndarray,
    gain_f: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    noise = kappa_t * cfg.sigma2_c
    sig_n = mu_t * p * gain_n
    sig_f = mu_t * p * gain_f
    sinr_sic = sig_n * cfg.alpha_f / (noise + sig_n * cfg.alpha_n)
    snr_n = sig_n * cfg.alpha_n / noise
    sinr_f = sig_f * cfg.alpha_f / (noise + sig_f * cfg.alpha_n)
    return sinr_sic, snr_n, sinr_f


def trial_sinrs(cfg: SystemConfig, mode: Mode, p: float, draw: ChannelDraw) -> TrialSinrs:
    """Evaluate the three SINR expressions for one channel draw."""
    if not p > 0.0:
        raise ValueError("p must be positive")
    kappa_t, mu_t = comm_factors(mode)
    if kappa_t == 0.0:
        return TrialSinrs(sinr_sic=0.0, snr_n=0.0, sinr_f=0.0)
    gn = np.asarray([draw.gain_n])
    gf = np.asarray([draw.gain_f])
    sic, snr_n, sinr_f = _sinr_arrays(cfg, kappa_t, mu_t, p, gn, gf)
    return TrialSinrs(sinr_sic=float(sic[0]), snr_n=float(snr_n[0]), sinr_f=float(sinr_f[0]))


def estimate_outage(
    cfg: SystemConfig, mode: Mode, p: float, trials: int, seed: int
) -> tuple[EstimateWithError, EstimateWithError]:
    """Empirical outage probabilities from the per-trial decoding events.

    A near-user trial is in outage unless both the SIC stage and its own
    message clear their thresholds; a far-user trial is in outage when its
    SINR falls below the far-user threshold.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not p > 0.0:
        raise ValueError("p must be positive")
    kappa_t, mu_t = comm_factors(mode)
    if kappa_t == 0.0:
        # No sub-band to decode in: every trial is an outage.
        return _binomial_estimate(trials, trials), _binomial_estimate(trials, trials)
    gbar_n, gbar_f = _gamma_bars(cfg, kappa_t)
    out_n = 0
    out_f = 0
    for start in range(0, trials, _CHUNK):
        n = min(_CHUNK, trials - start)
        gain_n, gain_f = gain_samples(cfg, seed, start, n)
        sic, snr_n, sinr_f = _sinr_arrays(cfg, kappa_t, mu_t, p, gain_n, gain_f)
        ok_n = (sic > gbar_f) & (snr_n > gbar_n)
        out_n += n - int(np.count_nonzero(ok_n))
        out_f += int(np.count_nonzero(sinr_f < gbar_f))
    return (
        _binomial_estimate(out_n, trials),
        _binomial_estimate(out_f, trials),
    )


def _binomial_estimate(successes: int, trials: int) -> EstimateWithError:
    phat = successes / trials
    return EstimateWithError(
        value=phat,
        std_error=math.sqrt(phat * (1.0 - phat) / trials),
        trials=trials,
    )


def estimate_ecr(
    cfg: SystemConfig, mode: Mode, p: float, trials: int, seed: int
) -> tuple[EstimateWithError, EstimateWithError]:
    """Empirical ergodic rates, sample means of kappa_t*log2(1 + SINR)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not p > 0.0:
        raise ValueError("p must be positive")
    kappa_t, mu_t = comm_factors(mode)
    if kappa_t == 0.0:
        zero = EstimateWithError(value=0.0, std_error=0.0, trials=trials)
        return zero, zero
    sums_n: list[float] = []
    sums_f: list[float] = []
    sqsums_n: list[float] = []
    sqsums_f: list[float] = []
    for start in range(0, trials, _CHUNK):
        n = min(_CHUNK, trials - start)
        gain_n, gain_f = gain_samples(cfg, seed, start, n)
        _, snr_n, sinr_f = _sinr_arrays(cfg, kappa_t, mu_t, p, gain_n, gain_f)
        val_n = kappa_t * np.log1p(snr_n) / _LN2
        val_f = kappa_t * np.log1p(sinr_f) / _LN2
        sums_n.append(float(np.sum(val_n)))
        sums_f.append(float(np.sum(val_f)))
        sqsums_n.append(float(np.sum(val_n * val_n)))
        sqsums_f.append(float(np.sum(val_f * val_f)))
    return (
        _mean_estimate(math.fsum(sums_n), math.fsum(sqsums_n), trials),
        _mean_estimate(math.fsum(sums_f), math.fsum(sqsums_f), trials),
    )


def _mean_estimate(total: float, sq_total: float, trials: int) -> EstimateWithError:
    mean = total / trials
    if trials > 1:
        var = max(sq_total - trials * mean * mean, 0.0) / (trials - 1)
    else:
        var = 0.0
    return EstimateWithError(
        value=mean,
        std_error=math.sqrt(var / trials),
        trials=trials,
    )


def sensing_mi_bruteforce(
    x_vector: Sequence[complex], corr: CorrelationMatrix, sigma2_s: float
) -> float:
    """Sensing mutual information in bits via the full LM x LM determinant.

    Stacks the echo model with X = I_M kron x and evaluates
    log2 det(I_LM + X R X^H / sigma2_s) directly; dimensioned for desk-scale
    identity checks only (L*M <= 256).
    """
    x = np.asarray(x_vector, dtype=complex).reshape(-1)
    big_l = x.size
    m = corr.size
    if big_l * m > BRUTE_FORCE_LIMIT:
        raise ValueError(f"dense check limited to L*M <= {BRUTE_FORCE_LIMIT}")
    if not sigma2_s > 0.0:
        raise ValueError("sigma2_s must be positive")
    stacked = np.kron(np.eye(m), x[:, None])
    a = np.eye(big_l * m) + stacked @ corr.entries @ stacked.conj().T / sigma2_s
    sign, logdet = np.linalg.slogdet(a)
    if sign.real <= 0.0:
        raise ArithmeticError("determinant must be positive")
    return float(logdet) / _LN2


def sensing_mi_reduced(
    x_vector: Sequence[complex], corr: CorrelationMatrix, sigma2_s: float
) -> float:
    """Sensing mutual information via the M x M reduction log2 det(I + x^H x R / sigma2_s)."""
    x = np.asarray(x_vector, dtype=complex).reshape(-1)
    if not sigma2_s > 0.0:
        raise ValueError("sigma2_s must be positive")
    energy = float(np.vdot(x, x).real)
    a = np.eye(corr.size) + energy * corr.entries / sigma2_s
    sign, logdet = np.linalg.slogdet(a)
    if sign.real <= 0.0:
        raise ArithmeticError("determinant must be positive")
    return float(logdet) / _LN2


def orthogonal_streams(seed: int, length: int) -> np.ndarray:
    """Two data streams of `length` symbols with S S^H = length * I exactly.

    Rows are scaled orthonormal vectors, so downstream identity checks see
    no stream cross-correlation noise.
    """
    if length < 2:
        raise ValueError("length must be at least 2")
    rng = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    g = rng.normal(size=(length, 2)) + 1j * rng.normal(size=(length, 2))
    q, _ = np.linalg.qr(g)
    return math.sqrt(length) * q.conj().T


def dual_function_signal(p: float, alpha_n: float, alpha_f: float, streams: np.ndarray) -> np.ndarray:
    """Superimposed transmit vector sqrt(p)*(sqrt(alpha_n), sqrt(alpha_f)) @ S."""
    if not p > 0.0:
        raise ValueError("p must be positive")
    weights = np.asarray([math.sqrt(alpha_n), math.sqrt(alpha_f)])
    return math.sqrt(p) * weights @ streams


def estimate_slope(points: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of y against x for a list of (x, y) points."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 2 or pts.shape[1] != 2:
        raise ValueError("need at least two (x, y) points")
    x = pts[:, 0]
    y = pts[:, 1]
    if float(np.ptp(x)) == 0.0:
        raise ValueError("degenerate abscissae")
    return float(np.polyfit(x, y, 1)[0])
