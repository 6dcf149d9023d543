"""Dense complex-matrix kernel.

Hermitian eigendecomposition, spectral matrix functions, tensor structure
and the probability-simplex projection. Nothing here knows about quantum
states; inputs are plain :class:`numpy.ndarray` objects.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian, RankDeficient


@dataclass(frozen=True)
class NumericPolicy:
    """Tolerances shared by every module.

    ``hermitian_tol`` is relative: a matrix passes when
    ``||m - m^H||_F <= hermitian_tol * max(1, ||m||_F)``.
    """

    hermitian_tol: float = 1e-10
    psd_tol: float = 1e-10
    trace_tol: float = 1e-10
    rank_epsilon: float = 1e-12
    membership_tol: float = 1e-10
    jacobi_tol: float = 1e-12
    jacobi_max_sweeps: int = 100
    prune_tol: float = 1e-12


DEFAULT_POLICY = NumericPolicy()


class LogBase(enum.Enum):
    BITS = "bits"
    NATS = "nats"

    def log(self, x):
        return np.log2(x) if self is LogBase.BITS else np.log(x)

    @property
    def per_nat(self) -> float:
        """Multiply a value in nats by this to express it in this base."""
        return 1.0 / math.log(2.0) if self is LogBase.BITS else 1.0

    @classmethod
    def parse(cls, value) -> "LogBase":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown log base {value!r}; use 'bits' or 'nats'") from None


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray  # descending
    eigenvectors: np.ndarray  # columns

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _as_square(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {m.shape}")
    return m


def tensor_product(a, b) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def partial_trace(m, dims, traced: str = "A") -> np.ndarray:
    """Trace out subsystem ``traced`` ("A" or "B") of an operator on A (x) B."""
    m = np.asarray(m)
    d_a, d_b = (int(d) for d in dims)
    if m.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatch(f"matrix shape {m.shape} does not match dims ({d_a}, {d_b})")
    t = m.reshape(d_a, d_b, d_a, d_b)
    if traced == "A":
        return np.einsum("ijik->jk", t)
    if traced == "B":
        return np.einsum("ijkj->ik", t)
    raise ValueError(f"traced subsystem must be 'A' or 'B', got {traced!r}")


def hermitize(m) -> np.ndarray:
    m = _as_square(m)
    return 0.5 * (m + m.conj().T)


def check_hermitian(m, policy: NumericPolicy = DEFAULT_POLICY) -> np.ndarray:
    m = _as_square(m)
    norm = np.linalg.norm(m)
    gap = np.linalg.norm(m - m.conj().T)
    if gap > policy.hermitian_tol * max(1.0, norm):
        raise NotHermitian(f"||m - m^H||_F = {gap:.3e} exceeds tolerance")
    return m


def jacobi_eigh(m, tol: float = 1e-12, max_sweeps: int = 100) -> EigenDecomposition:
    """Cyclic Jacobi eigensolver for complex Hermitian matrices.

    Each (p, q) rotation first removes the phase of ``a[p, q]`` and then
    applies a real Givens rotation that annihilates the now-real entry.
    Converges when the off-diagonal Frobenius norm drops below
    ``tol * ||m||_F``.
    """
    a = np.array(_as_square(m), dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    threshold = tol * scale

    def off_norm():
        return np.linalg.norm(a - np.diag(np.diag(a)))

    if scale == 0.0 or n == 1:
        return _sorted(np.real(np.diag(a)).copy(), v)

    for _ in range(max_sweeps):
        if off_norm() <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g == 0.0:
                    continue
                phase = apq / g
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * g)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # u = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                u = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u
                a[idx, :] = u.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ u
    else:
        if off_norm() > threshold:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    return _sorted(np.real(np.diag(a)).copy(), v)


def _sorted(w, v) -> EigenDecomposition:
    order = np.argsort(w)[::-1]
    return EigenDecomposition(w[order], v[:, order])


def hermitian_eig(m, method: str = "lapack", policy: NumericPolicy = DEFAULT_POLICY) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    ``method="lapack"`` delegates to :func:`numpy.linalg.eigh`;
    ``method="jacobi"`` runs :func:`jacobi_eigh` with the policy tolerances.
    """
    m = check_hermitian(m, policy)
    if method == "jacobi":
        return jacobi_eigh(m, policy.jacobi_tol, policy.jacobi_max_sweeps)
    if method != "lapack":
        raise ValueError(f"unknown eigensolver {method!r}")
    w, v = np.linalg.eigh(hermitize(m))
    return EigenDecomposition(w[::-1].copy(), v[:, ::-1].copy())


def spectral_function(m, fn: Callable[[np.ndarray], np.ndarray], policy: NumericPolicy = DEFAULT_POLICY) -> np.ndarray:
    eig = hermitian_eig(m, policy=policy)
    v = eig.eigenvectors
    out = (v * fn(eig.eigenvalues)) @ v.conj().T
    return hermitize(out)


def matrix_log(m, base: LogBase | str = LogBase.NATS, policy: NumericPolicy = DEFAULT_POLICY) -> np.ndarray:
    base = LogBase.parse(base)
    eig = hermitian_eig(m, policy=policy)
    if eig.eigenvalues[-1] <= policy.rank_epsilon:
        raise RankDeficient(
            f"smallest eigenvalue {eig.eigenvalues[-1]:.3e} is not above {policy.rank_epsilon:g}"
        )
    v = eig.eigenvectors
    return hermitize((v * base.log(eig.eigenvalues)) @ v.conj().T)


def matrix_exp(m, policy: NumericPolicy = DEFAULT_POLICY) -> np.ndarray:
    return spectral_function(m, np.exp, policy)


def frobenius_inner(a, b) -> complex:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    return complex(np.vdot(a, b))


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(m))


def simplex_project(values) -> np.ndarray:
    """Euclidean projection of a real vector onto the probability simplex."""
    x = np.asarray(values, dtype=float)
    u = np.sort(x)[::-1]
    css = np.cumsum(u) - 1.0
    k = np.arange(1, x.size + 1)
    rho = np.nonzero(u - css / k > 0)[0][-1]
    tau = css[rho] / (rho + 1.0)
    return np.maximum(x - tau, 0.0)


def project_to_density(m) -> np.ndarray:
    """Frobenius-nearest density matrix to a square matrix.

    Hermitize, then project the spectrum onto the simplex.
    """
    w, v = np.linalg.eigh(hermitize(m))
    p = simplex_project(w)
    return hermitize((v * p) @ v.conj().T)
