"""Entropy functionals and CVENN membership.

CVENN is the set of bipartite states whose conditional entropy
``S(A|B) = S(AB) - S(B)`` is non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_POLICY, LogBase, NumericPolicy, matrix_log, partial_trace
from .states import DensityMatrix

__all__ = [
    "EntropyReport",
    "von_neumann",
    "conditional_entropy",
    "relative_entropy",
    "is_cvenn",
    "entropy_report",
]


def shannon(probabilities, base: LogBase | str = LogBase.BITS) -> float:
    """``-sum p log p`` with ``0 log 0 = 0``; tiny negatives are clamped."""
    base = LogBase.parse(base)
    p = np.clip(np.asarray(probabilities, dtype=float), 0.0, None)
    p = p[p > 0.0]
    return float(-np.sum(p * base.log(p)))


def _entropy_of(m: np.ndarray, base: LogBase) -> float:
    return shannon(np.linalg.eigvalsh(m), base)


def _conditional_of(m: np.ndarray, dims, base: LogBase, conditioned_on: str = "B") -> float:
    traced = "A" if conditioned_on == "B" else "B"
    return _entropy_of(m, base) - _entropy_of(partial_trace(m, dims, traced), base)


def von_neumann(rho: DensityMatrix, base: LogBase | str = LogBase.BITS) -> float:
    return _entropy_of(rho.matrix, LogBase.parse(base))


def conditional_entropy(rho: DensityMatrix, conditioned_on: str = "B", base: LogBase | str = LogBase.BITS) -> float:
    """``S(AB) - S(B)`` when conditioned on B (the default), else ``S(AB) - S(A)``."""
    if conditioned_on not in ("A", "B"):
        raise ValueError(f"conditioned_on must be 'A' or 'B', got {conditioned_on!r}")
    return _conditional_of(rho.matrix, rho.dims, LogBase.parse(base), conditioned_on)


def relative_entropy(
    sigma: DensityMatrix,
    rho: DensityMatrix,
    base: LogBase | str = LogBase.BITS,
    policy: NumericPolicy = DEFAULT_POLICY,
) -> float:
    """``Tr(sigma log sigma) - Tr(sigma log rho)``; ``rho`` must be full rank."""
    base = LogBase.parse(base)
    log_rho = matrix_log(rho.matrix, base, policy)
    cross = np.real(np.trace(sigma.matrix @ log_rho))
    return float(-_entropy_of(sigma.matrix, base) - cross)


def is_cvenn(rho: DensityMatrix, base: LogBase | str = LogBase.BITS, policy: NumericPolicy = DEFAULT_POLICY) -> bool:
    # The sign is base-independent; the tolerance is applied in the given base.
    return conditional_entropy(rho, "B", base) >= -policy.membership_tol


@dataclass(frozen=True)
class EntropyReport:
    base: LogBase
    s_joint: float
    s_A: float
    s_B: float
    s_A_given_B: float
    s_B_given_A: float
    in_cvenn: bool

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in ("s_joint", "s_A", "s_B", "s_A_given_B", "s_B_given_A", "in_cvenn")}
        d["base"] = self.base.value
        return d

    def to_text(self) -> str:
        unit = self.base.value
        return "\n".join(
            [
                f"S(AB)   = {self.s_joint:.4f} {unit}",
                f"S(A)    = {self.s_A:.4f} {unit}",
                f"S(B)    = {self.s_B:.4f} {unit}",
                f"S(A|B)  = {self.s_A_given_B:.4f} {unit}",
                f"S(B|A)  = {self.s_B_given_A:.4f} {unit}",
                f"in_cvenn = {str(self.in_cvenn).lower()}",
            ]
        )


def entropy_report(
    rho: DensityMatrix, base: LogBase | str = LogBase.BITS, policy: NumericPolicy = DEFAULT_POLICY
) -> EntropyReport:
    base = LogBase.parse(base)
    s = _entropy_of(rho.matrix, base)
    s_a = _entropy_of(partial_trace(rho.matrix, rho.dims, "B"), base)
    s_b = _entropy_of(partial_trace(rho.matrix, rho.dims, "A"), base)
    return EntropyReport(
        base=base,
        s_joint=s,
        s_A=s_a,
        s_B=s_b,
        s_A_given_B=s - s_b,
        s_B_given_A=s - s_a,
        in_cvenn=(s - s_b) >= -policy.membership_tol,
    )
