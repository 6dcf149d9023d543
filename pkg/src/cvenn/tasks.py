"""Operational quantities governed by the sign of ``S(A|B)``.

All bounds are in bits unless a ``base`` argument says otherwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .entropy import conditional_entropy, entropy_report
from .errors import DegenerateObservable, DimensionMismatch, UnequalDims
from .linalg import DEFAULT_POLICY, LogBase, check_hermitian
from .states import DensityMatrix

__all__ = [
    "TaskReport",
    "UncertaintySetting",
    "MemoryRegion",
    "merging_cost",
    "sdc_capacity",
    "uncertainty_bound",
    "memory_region",
    "randomness_rates",
    "hashing_bound",
]


def _negative(s: float) -> bool:
    # Shared definition of "S(A|B) < 0" so every advantage flag agrees with
    # CVENN membership at the membership tolerance.
    return s < -DEFAULT_POLICY.membership_tol


@dataclass(frozen=True)
class TaskReport:
    task: str
    values: dict[str, float]
    unit: str = "bits"
    advantage: bool | None = None
    flags: dict[str, bool] = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"task": self.task, "unit": self.unit}
        if self.advantage is not None:
            out["advantage"] = self.advantage
        out.update(self.values)
        out.update(self.flags)
        out.update({f"input.{k}": v for k, v in self.inputs.items()})
        out.update({f"meta.{k}": v for k, v in self.metadata.items()})
        return out

    def to_text(self) -> str:
        lines = []
        for k, v in self.to_dict().items():
            if isinstance(v, bool):
                v = str(v).lower()
            elif isinstance(v, float):
                v = f"{v:.4f}"
            lines.append(f"{k} = {v}")
        return "\n".join(lines)


def merging_cost(rho: DensityMatrix, direction: str = "AtoB", base: LogBase | str = LogBase.BITS) -> float:
    """Quantum communication needed to merge the sender's share into the receiver.

    Positive values are qubits to send; negative values are entanglement
    left over for later use.
    """
    if direction == "AtoB":
        return conditional_entropy(rho, "B", base)
    if direction == "BtoA":
        return conditional_entropy(rho, "A", base)
    raise ValueError(f"direction must be 'AtoB' or 'BtoA', got {direction!r}")


def merging_report(rho: DensityMatrix, direction: str = "AtoB", base: LogBase | str = LogBase.BITS) -> TaskReport:
    base = LogBase.parse(base)
    cost = merging_cost(rho, direction, base)
    meaning = "gain" if _negative(cost) else ("send" if cost > 0 else "free")
    unit = "qubits" if base is LogBase.BITS else "nats"
    return TaskReport(
        "merge", {"cost": cost}, unit, _negative(cost), inputs={"direction": direction}, metadata={"meaning": meaning}
    )


def sdc_capacity(rho: DensityMatrix) -> TaskReport:
    """Dense-coding capacity ``max(log2 d, log2 d + S(B) - S(AB))``."""
    d_a, d_b = rho.dims
    if d_a != d_b:
        raise UnequalDims(f"dense coding capacity needs equal local dimensions, got {rho.dims}")
    s_cond = conditional_entropy(rho, "B", LogBase.BITS)
    classical = math.log2(d_a)
    capacity = max(classical, classical - s_cond)
    return TaskReport("sdc", {"capacity": capacity, "classical_limit": classical}, "bits", _negative(s_cond))


@dataclass(frozen=True, eq=False)
class UncertaintySetting:
    """Two non-degenerate observables on subsystem A.

    ``c`` is the largest squared overlap between their eigenvectors.
    """

    obs_x: np.ndarray
    obs_y: np.ndarray
    c: float = field(init=False)

    def __post_init__(self):
        x = check_hermitian(np.asarray(self.obs_x))
        y = check_hermitian(np.asarray(self.obs_y))
        if x.shape != y.shape:
            raise DimensionMismatch(f"observables have shapes {x.shape} and {y.shape}")
        vx = _nondegenerate_basis(x, "X")
        vy = _nondegenerate_basis(y, "Y")
        overlaps = np.abs(vx.conj().T @ vy) ** 2
        object.__setattr__(self, "obs_x", x)
        object.__setattr__(self, "obs_y", y)
        object.__setattr__(self, "c", float(overlaps.max()))

    @property
    def d(self) -> int:
        return self.obs_x.shape[0]


def _nondegenerate_basis(m: np.ndarray, name: str, tol: float = 1e-9) -> np.ndarray:
    w, v = np.linalg.eigh(m)
    if m.shape[0] > 1 and np.min(np.diff(w)) <= tol * max(1.0, np.abs(w).max()):
        raise DegenerateObservable(f"observable {name} has a degenerate spectrum")
    return v


class MemoryRegion(enum.Enum):
    NO_ADVANTAGE = "NoAdvantage"
    ADVANTAGE_WITH_UNCERTAINTY = "AdvantageWithUncertainty"
    FULL_CERTAINTY = "FullCertainty"


def _check_setting(setting: UncertaintySetting, rho: DensityMatrix):
    if setting.d != rho.dims[0]:
        raise DimensionMismatch(f"observables act on dimension {setting.d}, subsystem A has {rho.dims[0]}")


def uncertainty_bound(setting: UncertaintySetting, rho: DensityMatrix) -> TaskReport:
    """Memoryless bound ``log2(1/c)`` and the quantum-memory bound ``log2(1/c) + S(A|B)``."""
    _check_setting(setting, rho)
    s_cond = conditional_entropy(rho, "B", LogBase.BITS)
    memoryless = -math.log2(setting.c)
    return TaskReport(
        "uncertainty",
        {"c": setting.c, "memoryless_bound": memoryless, "bound": memoryless + s_cond, "cond_entropy": s_cond},
        "bits",
        _negative(s_cond),
    )


def memory_region(setting: UncertaintySetting, rho: DensityMatrix, tol: float = 1e-10) -> MemoryRegion:
    _check_setting(setting, rho)
    s_cond = conditional_entropy(rho, "B", LogBase.BITS)
    if not _negative(s_cond):
        return MemoryRegion.NO_ADVANTAGE
    if s_cond <= math.log2(setting.c) + tol:
        return MemoryRegion.FULL_CERTAINTY
    return MemoryRegion.ADVANTAGE_WITH_UNCERTAINTY


def randomness_rates(rho: DensityMatrix) -> TaskReport:
    """Upper bounds on locally extractable private randomness rates."""
    rep = entropy_report(rho, LogBase.BITS)
    log_a, log_b = math.log2(rho.dims[0]), math.log2(rho.dims[1])
    values = {
        "R_A": log_a - rep.s_A_given_B,
        "R_B": log_b - rep.s_B_given_A,
        "R_G": log_a + log_b - rep.s_joint,
    }
    flags = {"beyond_local_A": _negative(rep.s_A_given_B), "beyond_local_B": _negative(rep.s_B_given_A)}
    return TaskReport(
        "randomness",
        values,
        "bits",
        flags["beyond_local_A"],
        flags,
        metadata={"log_base": "2"},
    )


def hashing_bound(rho: DensityMatrix) -> TaskReport:
    """Certified one-way distillable entanglement ``max(0, -S(A|B))`` in ebits."""
    s_cond = conditional_entropy(rho, "B", LogBase.BITS)
    bound = -s_cond if _negative(s_cond) else 0.0
    return TaskReport("distill", {"lower_bound": bound}, "bits", bound > 0.0)

