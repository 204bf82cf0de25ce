"""Input validation helpers shared by the functional core and the estimators."""

from __future__ import annotations

import numpy as np


def as_finite_array(x, name: str = "array") -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def as_segment(x, order_n: int | None = None) -> np.ndarray:
    """Validate a sensing segment: an (ns, n) matrix of finite samples, n >= 2."""
    seg = as_finite_array(x, "segment")
    if seg.ndim != 2:
        raise ValueError(f"segment must be 2-D (ns, n), got shape {seg.shape}")
    ns, n = seg.shape
    if n < 2:
        raise ValueError(f"segment vector length must be >= 2, got {n}")
    if ns < 1:
        raise ValueError("segment must contain at least one vector")
    if order_n is not None and n != order_n:
        raise ValueError(f"segment vector length {n} does not match expected {order_n}")
    return seg


def as_unit_vector(x, name: str = "feature", tol: float = 1e-9) -> np.ndarray:
    vec = as_finite_array(x, name)
    if vec.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {vec.shape}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"{name} must be unit norm, got |v| = {norm!r}")
    return vec


def as_symmetric_matrix(x, name: str = "covariance", rtol: float = 1e-12) -> np.ndarray:
    mat = as_finite_array(x, name)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"{name} must be square, got shape {mat.shape}")
    scale = np.maximum(1.0, np.abs(mat))
    if not np.all(np.abs(mat - mat.T) <= rtol * scale):
        raise ValueError(f"{name} is not symmetric within tolerance {rtol}")
    return mat


def check_same_order(a: np.ndarray, b: np.ndarray, what: str = "vectors") -> int:
    if a.shape != b.shape:
        raise ValueError(f"{what} have mismatched shapes {a.shape} and {b.shape}")
    return a.shape[-1]
