"""Special-function kernels behind the closed-form rate expressions.

Only the negative real axis of the exponential integral is ever needed:
every closed form evaluates Ei(-chi/scale) with chi, scale > 0.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

#: Euler-Mascheroni constant gamma = 0.5772156649015329...
EULER_GAMMA = float(np.euler_gamma)

# Branch switch for Ei(-z): ascending series below, continued fraction above.
# The two branches agree to better than 1e-12 relative at the crossover.
_SERIES_CUTOFF = 5.0
_MAX_ITER = 500


def exp_int_ei(x: float) -> float:
    """Exponential integral Ei(x) on the negative real axis.

    Ei(x) = -int_{-x}^{inf} e^{-t}/t dt for x < 0; strictly negative,
    vanishing as x -> -inf and diverging to -inf as x -> 0-.
    """
    if not x < 0.0:
        raise ValueError(f"exp_int_ei requires x < 0, got {x!r}")
    z = -x
    if z <= _SERIES_CUTOFF:
        return _ei_neg_series(z)
    return -math.exp(-z) * _e1_scaled_cf(z)


def psi_term(chi: float, scale: float) -> float:
    """Fading-average kernel Ei(-chi/scale) * exp(chi/scale).

    Strictly negative for all positive inputs. Large ratios are evaluated in
    pre-scaled form so the product never overflows.
    """
    if not chi > 0.0:
        raise ValueError("psi_term requires chi > 0")
    if not scale > 0.0:
        raise ValueError("psi_term requires scale > 0")
    z = chi / scale
    if z <= _SERIES_CUTOFF:
        return _ei_neg_series(z) * math.exp(z)
    return -_e1_scaled_cf(z)


def log2_det_i_plus_scaled(c: float, eigenvalues: Sequence[float]) -> float:
    """log2 det(I + c*R) for a Hermitian PSD R given through its spectrum.

    Equals sum_a log2(1 + c*lambda_a). Terms are accumulated in ascending
    eigenvalue order with exact (fsum) summation, so the result does not
    depend on the ordering of the input list.
    """
    if c < 0.0:
        raise ValueError("c must be nonnegative")
    lam = np.sort(np.asarray(eigenvalues, dtype=float))
    if lam.size == 0:
        return 0.0
    if lam[0] < 0.0:
        raise ValueError("eigenvalues must be nonnegative")
    return math.fsum(np.log1p(c * lam)) / math.log(2.0)


def _ei_neg_series(z: float) -> float:
    # Ei(-z) = gamma + ln z + sum_{k>=1} (-z)^k / (k * k!)
    total = EULER_GAMMA + math.log(z)
    c = 1.0
    for k in range(1, _MAX_ITER):
        c *= -z / k
        term = c / k
        total += term
        if abs(term) <= 1e-17 * abs(total):
            return total
    raise ArithmeticError(f"Ei series did not converge at z={z!r}")


def _e1_scaled_cf(z: float) -> float:
    # e^z * E1(z) by modified Lentz continued fraction; E1(z) = -Ei(-z).
    b = z + 1.0
    c = 1.0 / 1e-300
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        a = -float(i) * float(i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    raise ArithmeticError(f"E1 continued fraction did not converge at z={z!r}")
