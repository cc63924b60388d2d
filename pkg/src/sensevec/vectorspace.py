"""Dense-vector primitives shared by every embedding stage.

Vectors are 1-D float32 numpy arrays. Accumulation (means, norms, dot
products) happens at float64 and results are truncated back to float32
for storage. All functions are pure.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyInput, ZeroVector

STORAGE_DTYPE = np.float32
ZERO_NORM_FLOOR = 1e-12


def as_embedding(values: Sequence[float] | np.ndarray) -> np.ndarray:
    """Coerce to a finite 1-D float32 vector of dimension >= 1."""
    arr = np.asarray(values, dtype=STORAGE_DTYPE)
    if arr.ndim != 1 or arr.size == 0:
        raise EmptyInput("embedding must be a nonempty 1-D vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError("embedding contains NaN or Inf")
    return arr


def l2_normalize(e: np.ndarray) -> np.ndarray:
    """Scale `e` to unit L2 norm, preserving direction."""
    e = np.asarray(e, dtype=STORAGE_DTYPE)
    norm = float(np.linalg.norm(e.astype(np.float64)))
    if norm < ZERO_NORM_FLOOR:
        raise ZeroVector("cannot normalize a zero vector")
    return (e.astype(np.float64) / norm).astype(STORAGE_DTYPE)


def mean(es: Iterable[np.ndarray]) -> np.ndarray:
    """Componentwise arithmetic mean, summed in input order at float64."""
    total = None
    count = 0
    for e in es:
        e = np.asarray(e, dtype=STORAGE_DTYPE)
        if total is None:
            total = e.astype(np.float64)
        else:
            if e.shape != total.shape:
                raise DimensionMismatch(
                    f"mean over mixed dimensions: {total.size} vs {e.size}")
            total += e
        count += 1
    if total is None:
        raise EmptyInput("mean of zero embeddings")
    return (total / count).astype(STORAGE_DTYPE)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity, clamped to [-1, 1] to absorb rounding."""
    a = np.asarray(a, dtype=STORAGE_DTYPE)
    b = np.asarray(b, dtype=STORAGE_DTYPE)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cosine over {a.size}-dim and {b.size}-dim vectors")
    a64 = a.astype(np.float64)
    b64 = b.astype(np.float64)
    na = float(np.linalg.norm(a64))
    nb = float(np.linalg.norm(b64))
    if na < ZERO_NORM_FLOOR or nb < ZERO_NORM_FLOOR:
        raise ZeroVector("cosine with a zero vector")
    return float(np.clip(np.dot(a64, b64) / (na * nb), -1.0, 1.0))


def concat_sense(v_s: np.ndarray, v_d: np.ndarray) -> np.ndarray:
    """Concatenate the L2-normalized sense and dictionary vectors (length 2D)."""
    v_s = np.asarray(v_s, dtype=STORAGE_DTYPE)
    v_d = np.asarray(v_d, dtype=STORAGE_DTYPE)
    if v_s.shape != v_d.shape:
        raise DimensionMismatch(
            f"concat halves differ: {v_s.size}-dim vs {v_d.size}-dim")
    return np.concatenate([l2_normalize(v_s), l2_normalize(v_d)])


def duplicate_contextual(c: np.ndarray) -> np.ndarray:
    """Duplicate a normalized contextual vector into concat space (length 2D)."""
    u = l2_normalize(c)
    return np.concatenate([u, u])


def split_halves(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split a 2D concat vector back into its two D-dim halves."""
    v = np.asarray(v, dtype=STORAGE_DTYPE)
    if v.size % 2 != 0:
        raise DimensionMismatch(f"cannot halve a {v.size}-dim vector")
    half = v.size // 2
    return v[:half], v[half:]


def halves_are_unit(v: np.ndarray, tol: float = 1e-5) -> bool:
    """Check the concat-vector invariant: both halves unit-norm within `tol`."""
    first, second = split_halves(v)
    return (abs(float(np.linalg.norm(first.astype(np.float64))) - 1.0) <= tol
            and abs(float(np.linalg.norm(second.astype(np.float64))) - 1.0) <= tol)
