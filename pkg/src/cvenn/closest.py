"""Frobenius projection of a state onto CVENN.

Solves ``sigma_c = argmin ||rho_s - sigma||_F`` over density matrices with
``S(A|B)(sigma) >= 0``. The objective is strictly convex and the feasible
set convex and compact, so the minimiser is unique.

Method: quadratic-penalty outer loop with a multiplier shift (augmented
Lagrangian), inner loop of projected gradient with Barzilai-Borwein step
lengths and Armijo backtracking. Projection onto density matrices is
hermitize -> eigendecompose -> simplex-project the spectrum. The start
point is the boundary crossing on the segment from ``rho_s`` to ``I/d``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .entropy import _conditional_of, is_cvenn
from .errors import AnchorNotFeasible, DimensionMismatch, NotConverged
from .linalg import LogBase, hermitize, partial_trace, project_to_density
from .states import DensityMatrix
from .witness import HermitianOperator

__all__ = [
    "SolverConfig",
    "ProjectionResult",
    "cond_entropy_gradient",
    "bisect_to_boundary",
    "project_to_cvenn",
]

RANK_FLOOR = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    penalty_initial: float = 1.0
    penalty_growth: float = 10.0
    max_outer: int = 8
    max_inner: int = 2000
    step_tolerance: float = 1e-9
    violation_tolerance: float = 1e-8
    base: LogBase = LogBase.NATS

    def __post_init__(self):
        positive = (self.penalty_initial, self.max_outer, self.max_inner, self.step_tolerance, self.violation_tolerance)
        if min(positive) <= 0:
            raise ValueError("solver settings must be positive")
        if self.penalty_growth <= 1:
            raise ValueError("penalty_growth must exceed 1")


@dataclass(frozen=True)
class ProjectionResult:
    sigma_c: DensityMatrix
    distance: float
    violation: float
    iterations: int
    converged: bool
    outer_iterations: int = 0
    multiplier: float = 0.0


def _floored(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    w, v = np.linalg.eigh(hermitize(m))
    w = np.maximum(w, RANK_FLOOR)
    w = w / w.sum()
    return w, v


def _log_floored(m: np.ndarray) -> np.ndarray:
    w, v = _floored(m)
    return (v * np.log(w)) @ v.conj().T


def _gradient(m: np.ndarray, dims) -> np.ndarray:
    """Nats gradient of S(A|B): ``-ln sigma + I (x) ln sigma_B``."""
    log_b = _log_floored(partial_trace(m, dims, "A"))
    return hermitize(-_log_floored(m) + np.kron(np.eye(dims[0]), log_b))


def _cond_nats(m: np.ndarray, dims) -> float:
    return _conditional_of(m, dims, LogBase.NATS)


def cond_entropy_gradient(sigma: DensityMatrix) -> HermitianOperator:
    """Gradient of ``S(A|B)`` in nats with respect to the trace inner product.

    For every Hermitian direction ``D`` the directional derivative of the
    conditional entropy at ``sigma`` is ``Tr(G D)``; no tracelessness of
    ``D`` is needed because the ``-Tr D`` terms of the joint and marginal
    entropies cancel. Requires ``sigma`` to be full rank.
    """
    from .linalg import matrix_log

    log_b = matrix_log(partial_trace(sigma.matrix, sigma.dims, "A"), LogBase.NATS)
    g = -matrix_log(sigma.matrix, LogBase.NATS) + np.kron(np.eye(sigma.dims[0]), log_b)
    return HermitianOperator(g, sigma.dims, LogBase.NATS, "operator")


def bisect_to_boundary(rho_s: DensityMatrix, anchor: DensityMatrix | None = None, tol: float = 1e-10) -> DensityMatrix:
    """First CVENN state on the segment ``(1 - t) rho_s + t anchor``.

    Conditional entropy is concave along the segment, so there is a single
    crossing between a state outside CVENN and a feasible anchor.
    """
    if anchor is None:
        anchor = DensityMatrix(np.eye(rho_s.dim) / rho_s.dim, rho_s.dims)
    if anchor.dims != rho_s.dims:
        raise DimensionMismatch(f"anchor dims {anchor.dims} differ from {rho_s.dims}")
    a, b = rho_s.matrix, anchor.matrix

    def f(t):
        return _cond_nats((1.0 - t) * a + t * b, rho_s.dims)

    if f(0.0) >= 0.0:
        return rho_s
    if f(1.0) < 0.0:
        raise AnchorNotFeasible("anchor has negative conditional entropy")
    t = brentq(f, 0.0, 1.0, xtol=1e-16, rtol=4 * np.finfo(float).eps, maxiter=200)
    # Step to the feasible side of the root.
    while f(t) < 0.0 and t < 1.0:
        t = min(1.0, t + max(abs(t) * 1e-15, 1e-16))
    if abs(f(t)) > tol:
        raise AnchorNotFeasible(f"boundary search ended with |S(A|B)| = {abs(f(t)):.3e}")
    return DensityMatrix((1.0 - t) * a + t * b, rho_s.dims)


class _Problem:
    """Augmented-Lagrangian subproblem for a fixed penalty and multiplier."""

    def __init__(self, target: np.ndarray, dims, penalty: float, multiplier: float):
        self.target = target
        self.dims = dims
        self.penalty = penalty
        self.multiplier = multiplier

    def shifted(self, m):
        # max(0, lambda + 2 mu g), g = -S(A|B)
        return max(0.0, self.multiplier - 2.0 * self.penalty * _cond_nats(m, self.dims))

    def value(self, m) -> float:
        r = m - self.target
        s = self.shifted(m)
        return 0.5 * np.vdot(r, r).real + (s * s - self.multiplier**2) / (4.0 * self.penalty)

    def grad(self, m) -> np.ndarray:
        g = m - self.target
        s = self.shifted(m)
        if s > 0.0:
            g = g - s * _gradient(m, self.dims)
        return g


def _inner(problem: _Problem, x: np.ndarray, config: SolverConfig) -> tuple[np.ndarray, int, bool]:
    fx = problem.value(x)
    gx = problem.grad(x)
    step = 1.0
    for it in range(1, config.max_inner + 1):
        trial = project_to_density(x - step * gx)
        d = trial - x
        if np.linalg.norm(project_to_density(x - gx) - x) < config.step_tolerance:
            return x, it, True
        slope = np.vdot(gx, d).real
        alpha = 1.0
        while True:
            x_new = x + alpha * d
            f_new = problem.value(x_new)
            if f_new <= fx + 1e-4 * alpha * slope or alpha < 1e-12:
                break
            alpha *= 0.5
        g_new = problem.grad(x_new)
        s = x_new - x
        y = g_new - gx
        sy = np.vdot(s, y).real
        step = float(np.clip(np.vdot(s, s).real / sy, 1e-10, 1e10)) if sy > 0 else 1.0
        x, fx, gx = x_new, f_new, g_new
        if np.linalg.norm(s) < config.step_tolerance * 1e-3:
            return x, it, True
    return x, config.max_inner, False


def project_to_cvenn(rho_s: DensityMatrix, config: SolverConfig | None = None, strict: bool = False) -> ProjectionResult:
    """Closest CVENN state to ``rho_s`` in Frobenius norm.

    Returns a :class:`ProjectionResult`. When the solver fails to meet the
    tolerances the result carries ``converged=False``; with ``strict=True``
    a :class:`~cvenn.errors.NotConverged` is raised instead.
    """
    config = config or SolverConfig()
    dims = rho_s.dims
    if is_cvenn(rho_s, LogBase.NATS):
        return ProjectionResult(rho_s, 0.0, 0.0, 0, True)

    target = rho_s.matrix
    x = np.array(bisect_to_boundary(rho_s).matrix)
    penalty, multiplier = config.penalty_initial, 0.0
    total, converged, inner_ok = 0, False, False
    outer = 0
    for outer in range(1, config.max_outer + 1):
        problem = _Problem(target, dims, penalty, multiplier)
        x, used, inner_ok = _inner(problem, x, config)
        total += used
        violation = max(0.0, -_cond_nats(x, dims))
        multiplier = problem.shifted(x)
        if violation <= config.violation_tolerance and inner_ok:
            converged = True
            break
        penalty *= config.penalty_growth

    sigma = _restore_feasibility(x, dims)
    violation = max(0.0, -_cond_nats(sigma.matrix, dims))
    distance = float(np.linalg.norm(target - sigma.matrix))
    result = ProjectionResult(sigma, distance, violation, total, converged, outer, multiplier)
    if not converged:
        if strict:
            raise NotConverged("closest-CVENN solver did not converge", result)
        warnings.warn("closest-CVENN solver did not converge", RuntimeWarning, stacklevel=2)
    return result


def _restore_feasibility(x: np.ndarray, dims) -> DensityMatrix:
    """Nudge a nearly feasible iterate onto the CVENN boundary."""
    sigma = DensityMatrix(project_to_density(x), dims)
    if _cond_nats(sigma.matrix, dims) >= 0.0:
        return sigma
    return bisect_to_boundary(sigma, tol=1e-12)
