"""Dense complex linear algebra for 2-, 4- and 8-dimensional states and operators."""

from __future__ import annotations

import math

import numpy as np


def as_matrix(entries) -> np.ndarray:
    """Coerce to a 2-D complex128 array and reject non-finite entries."""
    m = np.asarray(entries, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def basis_ket(dim: int, index: int) -> np.ndarray:
    """Computational basis vector |index> of the given dimension."""
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dim {dim}")
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with explicit shape checking."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch for matmul: {a.shape} x {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the left factor is the most significant subsystem."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def sup_norm(a: np.ndarray) -> float:
    """Largest entry magnitude; the tolerance metric used throughout."""
    return float(np.max(np.abs(a))) if np.asarray(a).size else 0.0


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        return False
    return sup_norm(adjoint(u) @ u - identity(u.shape[0])) <= tol


def partial_trace(rho: np.ndarray, dims: list[int], which: int) -> np.ndarray:
    """Trace out subsystem `which`, preserving the order of the rest.

    `dims` lists the subsystem dimensions, most significant first; their
    product must equal the side of the square matrix `rho`.
    """
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise ValueError("subsystem dimensions must be positive")
    total = math.prod(dims)
    if rho.shape != (total, total):
        raise ValueError(f"dims {dims} inconsistent with matrix shape {rho.shape}")
    n = len(dims)
    if not 0 <= which < n:
        raise ValueError(f"subsystem index {which} out of range for {n} subsystems")
    t = rho.reshape(dims + dims)
    reduced = np.trace(t, axis1=which, axis2=n + which)
    keep = total // dims[which]
    return reduced.reshape(keep, keep)


def matrix_exp(a: np.ndarray, terms: int = 30) -> np.ndarray:
    """Truncated power series for exp(a); adequate for argument norms <= pi/4.

    Kept as a cross-check oracle only; the entangling operator is built from
    its closed form in production code.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix_exp needs a square matrix, got {a.shape}")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    out = identity(a.shape[0])
    term = identity(a.shape[0])
    for k in range(1, terms + 1):
        term = term @ a / k
        out = out + term
    return out
