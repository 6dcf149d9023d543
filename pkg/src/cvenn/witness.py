"""Witness operators for CVENN.

Two constructions are provided:

* :func:`log_witness` builds ``-log(rho_AB) + I (x) log(rho_B)`` from a
  full-rank state. Its expectation on the generating state equals the
  conditional entropy, and monotonicity of relative entropy makes it
  non-negative on every CVENN state.
* :func:`geometric_witness` builds the normalised supporting hyperplane
  through the closest CVENN state ``sigma_c`` to a target ``rho_s``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .entropy import conditional_entropy
from .errors import DegenerateSeparation, DimensionMismatch, NotAWitnessWarning, NotRescalable
from .linalg import DEFAULT_POLICY, LogBase, NumericPolicy, check_hermitian, hermitize, matrix_log, partial_trace
from .states import DensityMatrix

__all__ = [
    "HermitianOperator",
    "log_witness",
    "geometric_witness",
    "eval_witness",
    "rescale_base",
]


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Hermitian operator on ``A (x) B`` with provenance metadata.

    ``kind`` is ``"log"``, ``"geometric"`` or ``"operator"``. ``base`` is the
    logarithm base a logarithmic witness was built in and ``None`` for
    base-free operators. ``is_witness`` records whether the operator has a
    negative eigenvalue below ``-psd_tol``.
    """

    matrix: np.ndarray
    dims: tuple[int, int]
    base: LogBase | None = None
    kind: str = "operator"
    is_witness: bool = field(init=False)
    policy: NumericPolicy = field(default=DEFAULT_POLICY, repr=False)

    def __post_init__(self):
        m = check_hermitian(self.matrix, self.policy)
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != 2 or dims[0] * dims[1] != m.shape[0]:
            raise DimensionMismatch(f"dims {self.dims} do not match operator size {m.shape[0]}")
        m = hermitize(m)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)
        if self.base is not None:
            object.__setattr__(self, "base", LogBase.parse(self.base))
        lam_min = float(np.linalg.eigvalsh(m)[0])
        object.__setattr__(self, "is_witness", lam_min < -self.policy.psd_tol)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    def entries(self, *pairs) -> list[float]:
        """Real parts of selected entries, e.g. ``w.entries((0, 0), (0, 3))``."""
        return [float(self.matrix[i, j].real) for i, j in pairs]


def log_witness(
    rho: DensityMatrix, base: LogBase | str = LogBase.BITS, policy: NumericPolicy = DEFAULT_POLICY
) -> HermitianOperator:
    """``W = -log(rho_AB) + I (x) log(rho_B)``.

    Raises :class:`~cvenn.errors.RankDeficient` unless every eigenvalue of
    ``rho`` exceeds ``policy.rank_epsilon``. A CVENN input still yields a
    Hermitian operator, with a :class:`NotAWitnessWarning`.
    """
    base = LogBase.parse(base)
    d_a, _ = rho.dims
    log_joint = matrix_log(rho.matrix, base, policy)
    log_b = matrix_log(partial_trace(rho.matrix, rho.dims, "A"), base, policy)
    w = HermitianOperator(-log_joint + np.kron(np.eye(d_a), log_b), rho.dims, base, "log", policy)
    if conditional_entropy(rho, "B", base) >= -policy.membership_tol:
        warnings.warn("input state is in CVENN; the operator detects nothing on it", NotAWitnessWarning, stacklevel=2)
    elif not w.is_witness:
        warnings.warn("operator has no negative eigenvalue", NotAWitnessWarning, stacklevel=2)
    return w


def geometric_witness(rho_s: DensityMatrix, sigma_c: DensityMatrix) -> HermitianOperator:
    """Normalised hyperplane ``[Tr(sc rs - sc^2) I + sc - rs] / ||sc - rs||_F``.

    ``Tr(W chi) = <chi - sigma_c, sigma_c - rho_s> / ||sigma_c - rho_s||``
    for every unit-trace ``chi``.
    """
    if rho_s.dims != sigma_c.dims:
        raise DimensionMismatch(f"dims {rho_s.dims} and {sigma_c.dims} differ")
    diff = sigma_c.matrix - rho_s.matrix
    dist = float(np.linalg.norm(diff))
    if dist <= 1e-12:
        raise DegenerateSeparation(f"rho_s and sigma_c coincide (distance {dist:.3e})")
    offset = np.trace(sigma_c.matrix @ rho_s.matrix - sigma_c.matrix @ sigma_c.matrix).real
    w = (offset * np.eye(rho_s.dim) + diff) / dist
    return HermitianOperator(w, rho_s.dims, None, "geometric")


def eval_witness(w: HermitianOperator, rho: DensityMatrix) -> float:
    """``Re Tr(W rho)``."""
    if w.dims != rho.dims:
        raise DimensionMismatch(f"witness dims {w.dims} do not match state dims {rho.dims}")
    value = np.sum(w.matrix.T * rho.matrix)
    if abs(value.imag) > 1e-10:
        raise ValueError(f"Tr(W rho) has imaginary part {value.imag:.3e}")
    return float(value.real)


def rescale_base(w: HermitianOperator, to: LogBase | str) -> HermitianOperator:
    """Express a logarithmic witness in another logarithm base."""
    to = LogBase.parse(to)
    if w.kind != "log" or w.base is None:
        raise NotRescalable(f"only logarithmic witnesses carry a base (kind={w.kind!r})")
    if to is w.base:
        return w
    factor = to.per_nat / w.base.per_nat
    return HermitianOperator(w.matrix * factor, w.dims, to, "log", w.policy)

