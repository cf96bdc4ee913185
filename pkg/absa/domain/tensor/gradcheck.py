"""Finite-difference gradient oracle."""

from collections.abc import Callable, Sequence

import numpy as np

from absa.domain.error import InvalidConfigurationError, NumericError
from absa.domain.tensor.tensor import Tensor


def finite_diff_gradient(
    f: Callable[[Sequence[Tensor]], float],
    params: Sequence[Tensor],
    eps: float = 1e-5,
) -> list[np.ndarray]:
    """Central-difference estimate of df/dp for every coordinate of every parameter.

    Each coordinate is perturbed in place and restored exactly before the
    next evaluation. ``f`` must be deterministic, so any dropout inside it
    has to draw from a generator re-seeded on every call.

    Raises:
        NumericError: If ``f`` returns a non-finite value
    """
    if eps <= 0:
        raise InvalidConfigurationError(f"eps must be positive, got {eps}")
    estimates = []
    for param in params:
        # Perturbations must land in the array f reads
        param.data = np.ascontiguousarray(param.data)
        flat = param.data.reshape(-1)
        estimate = np.zeros(flat.shape)
        for i in range(flat.size):
            original = flat[i]
            flat[i] = original + eps
            upper = _evaluate(f, params)
            flat[i] = original - eps
            lower = _evaluate(f, params)
            flat[i] = original
            estimate[i] = (upper - lower) / (2.0 * eps)
        estimates.append(estimate.reshape(param.shape))
    return estimates


def relative_error(analytic: np.ndarray, numeric: np.ndarray, floor: float = 1e-6) -> np.ndarray:
    """Elementwise |a - n| / max(|a|, |n|, floor).

    The floor keeps coordinates whose true gradient is zero from dividing
    rounding noise by zero.
    """
    a = np.asarray(analytic, dtype=np.float64)
    n = np.asarray(numeric, dtype=np.float64)
    return np.abs(a - n) / np.maximum(np.maximum(np.abs(a), np.abs(n)), floor)


def _evaluate(f: Callable[[Sequence[Tensor]], float], params: Sequence[Tensor]) -> float:
    value = float(f(params))
    if not np.isfinite(value):
        raise NumericError(f"Objective is not finite during gradient check: {value}")
    return value
