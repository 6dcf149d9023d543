"""Validated bipartite density matrices and the named state families.

Basis convention: computational product basis ``|i>_A (x) |j>_B`` with
row-major index ``i * dB + j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    NotHermitian,
    NotPositive,
    ParameterOutOfRange,
    SamplingBudgetExhausted,
    TraceNotOne,
)
from .linalg import DEFAULT_POLICY, LogBase, NumericPolicy, partial_trace

__all__ = [
    "DensityMatrix",
    "validate",
    "werner",
    "isotropic",
    "max_entangled",
    "random_density",
    "random_cvenn",
    "mix",
]


def _dims(dims, n):
    if dims is None:
        return (n, 1)
    try:
        d_a, d_b = (int(d) for d in dims)
    except (TypeError, ValueError):
        raise DimensionMismatch(f"dims must be a pair of positive integers, got {dims!r}") from None
    if d_a < 1 or d_b < 1:
        raise DimensionMismatch(f"dims must be positive, got {dims!r}")
    return d_a, d_b


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A bipartite quantum state.

    Construction validates Hermiticity, positivity and unit trace; the
    stored matrix is read-only. A single-system state has ``dims == (d, 1)``.
    """

    matrix: np.ndarray
    dims: tuple[int, int]
    policy: NumericPolicy = field(default=DEFAULT_POLICY, repr=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"density matrix must be square, got shape {m.shape}")
        dims = _dims(self.dims, m.shape[0])
        if dims[0] * dims[1] != m.shape[0]:
            raise DimensionMismatch(f"dims {dims} do not match matrix size {m.shape[0]}")
        tol = self.policy
        if np.linalg.norm(m - m.conj().T) > tol.hermitian_tol * max(1.0, np.linalg.norm(m)):
            raise NotHermitian("density matrix is not Hermitian")
        m = 0.5 * (m + m.conj().T)
        tr = np.trace(m).real
        if abs(tr - 1.0) > tol.trace_tol:
            raise TraceNotOne(f"trace is {tr!r}, expected 1")
        lam_min = float(np.linalg.eigvalsh(m)[0])
        if lam_min < -tol.psd_tol:
            raise NotPositive(f"most negative eigenvalue is {lam_min:.6g}", lam_min)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    def marginal(self, keep: str) -> "DensityMatrix":
        """Reduced state on subsystem ``keep`` ("A" or "B")."""
        traced = {"A": "B", "B": "A"}[keep]
        d = self.dims[0] if keep == "A" else self.dims[1]
        return DensityMatrix(partial_trace(self.matrix, self.dims, traced), (d, 1), self.policy)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)[::-1]


def validate(m, dims, policy: NumericPolicy = DEFAULT_POLICY) -> DensityMatrix:
    return DensityMatrix(m, dims, policy)


def _phi_plus(d: int) -> np.ndarray:
    psi = np.zeros(d * d)
    psi[np.arange(d) * (d + 1)] = 1.0 / np.sqrt(d)
    return psi


def max_entangled(d: int) -> DensityMatrix:
    if d < 2:
        raise ParameterOutOfRange(f"local dimension must be >= 2, got {d}")
    psi = _phi_plus(d)
    return DensityMatrix(np.outer(psi, psi), (d, d))


def isotropic(alpha: float, d: int) -> DensityMatrix:
    """``alpha |Phi+><Phi+| + (1 - alpha) I / d^2`` on two qudits."""
    if d < 2:
        raise ParameterOutOfRange(f"local dimension must be >= 2, got {d}")
    lo = -1.0 / (d * d - 1)
    if not lo - 1e-15 <= alpha <= 1.0 + 1e-15:
        raise ParameterOutOfRange(f"alpha={alpha} outside [{lo:.6g}, 1] for d={d}")
    psi = _phi_plus(d)
    m = alpha * np.outer(psi, psi) + (1.0 - alpha) * np.eye(d * d) / (d * d)
    return DensityMatrix(m, (d, d))


def werner(p: float) -> DensityMatrix:
    """Two-qubit Werner state ``p |phi+><phi+| + (1 - p) I / 4``."""
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRange(f"Werner parameter p={p} outside [0, 1]")
    return isotropic(p, 2)


def _ginibre_state(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_density(dims, seed=None) -> DensityMatrix:
    """Hilbert-Schmidt random state, ``G G^H / Tr(G G^H)``.

    ``seed`` may be an int or an existing :class:`numpy.random.Generator`.
    """
    dims = _dims(dims, None)
    rng = np.random.default_rng(seed)
    return DensityMatrix(_ginibre_state(rng, dims[0] * dims[1]), dims)


def random_cvenn(dims, seed=None, max_rejections: int = 100_000) -> DensityMatrix:
    """Rejection-sample :func:`random_density` until the state is in CVENN."""
    from .entropy import is_cvenn

    dims = _dims(dims, None)
    rng = np.random.default_rng(seed)
    n = dims[0] * dims[1]
    for _ in range(max_rejections + 1):
        rho = DensityMatrix(_ginibre_state(rng, n), dims)
        if is_cvenn(rho, LogBase.NATS):
            return rho
    raise SamplingBudgetExhausted(f"no CVENN state after {max_rejections} rejections")


def mix(weight: float, first: DensityMatrix, second: DensityMatrix) -> DensityMatrix:
    """Convex combination ``weight * first + (1 - weight) * second``."""
    if first.dims != second.dims:
        raise DimensionMismatch(f"dims {first.dims} and {second.dims} differ")
    return DensityMatrix(weight * first.matrix + (1.0 - weight) * second.matrix, first.dims)
