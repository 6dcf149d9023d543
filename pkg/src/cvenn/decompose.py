"""Expansion of two-party operators in local bases.

Pauli (qubits), generalised Gell-Mann (qudits) and the polarisation
projector form of a Werner-type witness. A decomposition is a list of
``(coefficient, label_A, label_B)`` terms whose tensor products sum back
to the operator; because every basis element is Hermitian, measuring each
local pair and summing ``coefficient * <A (x) B>`` gives ``Tr(W rho)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, PatternMismatch
from .witness import HermitianOperator

__all__ = [
    "Term",
    "BasisDecomposition",
    "pauli_matrices",
    "gellmann_matrices",
    "polarization_states",
    "pauli_decompose",
    "gellmann_decompose",
    "polarization_decompose",
]

PRUNE_TOL = 1e-12


class Term(NamedTuple):
    coefficient: float
    label_A: str
    label_B: str


def pauli_matrices() -> dict[str, np.ndarray]:
    return {
        "I": np.eye(2, dtype=complex),
        "X": np.array([[0, 1], [1, 0]], dtype=complex),
        "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    }


@lru_cache(maxsize=None)
def _gellmann(d: int) -> tuple[tuple[str, np.ndarray], ...]:
    out = [("I", np.eye(d, dtype=complex))]
    n = 0
    for k in range(1, d):
        for j in range(k):
            sym = np.zeros((d, d), dtype=complex)
            sym[j, k] = sym[k, j] = 1.0
            asym = np.zeros((d, d), dtype=complex)
            asym[j, k], asym[k, j] = -1j, 1j
            out.append((f"lambda{n + 1}", sym))
            out.append((f"lambda{n + 2}", asym))
            n += 2
        diag = np.zeros(d)
        diag[:k] = 1.0
        diag[k] = -k
        out.append((f"lambda{n + 1}", np.diag(np.sqrt(2.0 / (k * (k + 1))) * diag).astype(complex)))
        n += 1
    return tuple(out)


def gellmann_matrices(d: int = 3) -> dict[str, np.ndarray]:
    """Identity plus the ``d^2 - 1`` generalised Gell-Mann matrices.

    For each ``k = 1 .. d-1`` the symmetric/antisymmetric pairs ``(j, k)``
    with ``j < k`` come first, followed by the ``k``-th diagonal generator.
    At ``d = 3`` this is the standard ``lambda1 .. lambda8`` order.
    Normalisation: ``Tr(l_i l_j) = 2 delta_ij``.
    """
    if d < 2:
        raise DimensionMismatch(f"Gell-Mann basis needs d >= 2, got {d}")
    return {k: v.copy() for k, v in _gellmann(d)}


def polarization_states() -> dict[str, np.ndarray]:
    s = 1.0 / np.sqrt(2.0)
    return {
        "H": np.array([1, 0], dtype=complex),
        "V": np.array([0, 1], dtype=complex),
        "D": np.array([s, s], dtype=complex),
        "F": np.array([s, -s], dtype=complex),
        "L": np.array([s, 1j * s], dtype=complex),
        "R": np.array([s, -1j * s], dtype=complex),
    }


def _polarization_projectors() -> dict[str, np.ndarray]:
    return {k: np.outer(v, v.conj()) for k, v in polarization_states().items()}


@dataclass(frozen=True)
class BasisDecomposition:
    basis_kind: str  # "pauli" | "gellmann" | "polarization"
    terms: list[Term]
    d: int = 2
    params: dict = field(default_factory=dict)

    def basis(self) -> dict[str, np.ndarray]:
        if self.basis_kind == "pauli":
            return pauli_matrices()
        if self.basis_kind == "gellmann":
            return gellmann_matrices(self.d)
        if self.basis_kind == "polarization":
            return _polarization_projectors()
        raise ValueError(f"unknown basis {self.basis_kind!r}")

    def coefficient(self, label_a: str, label_b: str) -> float:
        return sum(t.coefficient for t in self.terms if (t.label_A, t.label_B) == (label_a, label_b))

    def reconstruct(self) -> np.ndarray:
        basis = self.basis()
        n = self.d * self.d
        out = np.zeros((n, n), dtype=complex)
        for c, a, b in self.terms:
            out += c * np.kron(basis[a], basis[b])
        return out

    def expectation(self, rho) -> float:
        """``sum_i c_i Tr((A_i (x) B_i) rho)``, the value a lab would assemble."""
        rho = np.asarray(rho)
        basis = self.basis()
        total = 0.0
        for c, a, b in self.terms:
            total += c * np.trace(np.kron(basis[a], basis[b]) @ rho).real
        return float(total)

    def to_text(self) -> str:
        return "\n".join(f"{t.coefficient:.4f}  {t.label_A} (x) {t.label_B}" for t in self.terms)


def _matrix_and_dims(w):
    if isinstance(w, HermitianOperator):
        return w.matrix, w.dims
    m = np.asarray(w, dtype=complex)
    d = int(round(np.sqrt(m.shape[0])))
    return m, (d, d)


def _expand(m: np.ndarray, basis: dict[str, np.ndarray]) -> list[Term]:
    terms = []
    for la, a in basis.items():
        na = np.trace(a @ a).real
        for lb, b in basis.items():
            nb = np.trace(b @ b).real
            c = np.trace(m @ np.kron(a, b)) / (na * nb)
            if abs(c.imag) > 1e-10 * max(1.0, abs(c.real)):
                raise ValueError(f"complex coefficient on {la} (x) {lb}; operator is not Hermitian")
            if abs(c.real) >= PRUNE_TOL:
                terms.append(Term(float(c.real), la, lb))
    return terms


def pauli_decompose(w) -> BasisDecomposition:
    """Coefficients ``Tr(W (s_i (x) s_j)) / 4`` over ``{I, X, Y, Z}^2``."""
    m, dims = _matrix_and_dims(w)
    if tuple(dims) != (2, 2):
        raise DimensionMismatch(f"Pauli decomposition needs dims (2, 2), got {dims}")
    return BasisDecomposition("pauli", _expand(m, pauli_matrices()), 2)


def gellmann_decompose(w, d: int | None = None) -> BasisDecomposition:
    m, dims = _matrix_and_dims(w)
    d = dims[0] if d is None else d
    if tuple(dims) != (d, d):
        raise DimensionMismatch(f"Gell-Mann decomposition needs dims ({d}, {d}), got {dims}")
    return BasisDecomposition("gellmann", _expand(m, gellmann_matrices(d)), d)


_POLARIZATION_GROUPS = {
    "a": [(1, "H", "H"), (1, "V", "V")],
    "b": [(1, "V", "H"), (1, "H", "V")],
    "c": [(1, "D", "D"), (1, "F", "F"), (-1, "R", "R"), (-1, "L", "L")],
}


def polarization_decompose(w, residual_tol: float = 1e-10) -> BasisDecomposition:
    """Fit ``W = a(HH + VV) + b(VH + HV) + c(DD + FF - RR - LL)``.

    Each pair denotes the projector onto that product state. Only operators
    of the Werner-witness shape admit this form; anything else raises
    :class:`~cvenn.errors.PatternMismatch`. The fitted ``(a, b, c)`` are in
    ``params``.
    """
    m, dims = _matrix_and_dims(w)
    if tuple(dims) != (2, 2):
        raise DimensionMismatch(f"polarization decomposition needs dims (2, 2), got {dims}")
    proj = _polarization_projectors()
    cols = []
    for group in _POLARIZATION_GROUPS.values():
        cols.append(sum(s * np.kron(proj[a], proj[b]) for s, a, b in group).ravel())
    design = np.stack(cols, axis=1)
    design_ri = np.concatenate([design.real, design.imag])
    target = np.concatenate([m.ravel().real, m.ravel().imag])
    coef, *_ = np.linalg.lstsq(design_ri, target, rcond=None)
    residual = np.linalg.norm(design_ri @ coef - target)
    if residual > residual_tol * max(1.0, np.linalg.norm(m)):
        raise PatternMismatch(f"operator is not of the polarization form (residual {residual:.3e})")
    params = dict(zip(_POLARIZATION_GROUPS, (float(c) for c in coef)))
    terms = [
        Term(sign * params[name], a, b) for name, group in _POLARIZATION_GROUPS.items() for sign, a, b in group
    ]
    return BasisDecomposition("polarization", terms, 2, params)
