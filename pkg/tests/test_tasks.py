import math

import numpy as np
import pytest

from conftest import random_unitary
from cvenn import BITS, NATS
from cvenn.decompose import pauli_matrices
from cvenn.entropy import conditional_entropy, is_cvenn
from cvenn.errors import DegenerateObservable, DimensionMismatch, UnequalDims
from cvenn.states import DensityMatrix, isotropic, max_entangled, random_density, werner
from cvenn.tasks import (
    MemoryRegion,
    UncertaintySetting,
    hashing_bound,
    memory_region,
    merging_cost,
    merging_report,
    randomness_rates,
    sdc_capacity,
    uncertainty_bound,
)

P = pauli_matrices()
MIXED = DensityMatrix(np.eye(4) / 4, (2, 2))


@pytest.fixture
def mub():
    return UncertaintySetting(P["Z"], P["X"])


def product_pure(rng):
    def ket(d):
        v = rng.normal(size=d) + 1j * rng.normal(size=d)
        return v / np.linalg.norm(v)

    v = np.kron(ket(2), ket(3))
    return DensityMatrix(np.outer(v, v.conj()), (2, 3))


class TestMerging:
    def test_werner(self):
        assert merging_cost(werner(0.99), base=NATS) == pytest.approx(-0.6407, abs=5e-4)

    def test_product_is_free(self, rng):
        assert merging_cost(product_pure(rng)) == pytest.approx(0.0, abs=1e-10)

    def test_mixed(self):
        assert merging_cost(MIXED) == pytest.approx(1.0, abs=1e-12)

    def test_direction(self, rng):
        rho = random_density((2, 3), rng)
        assert merging_cost(rho, "BtoA") == pytest.approx(conditional_entropy(rho, "A"))
        with pytest.raises(ValueError):
            merging_cost(rho, "sideways")

    def test_report(self):
        rep = merging_report(max_entangled(2))
        assert rep.advantage and rep.unit == "qubits" and rep.metadata["meaning"] == "gain"
        assert rep.values["cost"] == pytest.approx(-1.0)


class TestDenseCoding:
    def test_bell(self):
        rep = sdc_capacity(max_entangled(2))
        assert rep.values["capacity"] == pytest.approx(2.0) and rep.advantage

    def test_mixed(self):
        rep = sdc_capacity(MIXED)
        assert rep.values["capacity"] == pytest.approx(1.0) and not rep.advantage

    def test_werner(self):
        assert sdc_capacity(werner(0.99)).values["capacity"] == pytest.approx(1.9244, abs=5e-4)

    def test_at_least_classical(self, rng):
        for _ in range(50):
            d = int(rng.integers(2, 4))
            rep = sdc_capacity(random_density((d, d), rng))
            assert rep.values["capacity"] >= math.log2(d) - 1e-12

    def test_unequal(self, rng):
        with pytest.raises(UnequalDims):
            sdc_capacity(random_density((2, 3), rng))


class TestUncertainty:
    def test_mub_constant(self, mub):
        assert mub.c == pytest.approx(0.5)
        rep = uncertainty_bound(mub, MIXED)
        assert rep.values["memoryless_bound"] == pytest.approx(1.0)
        assert rep.values["bound"] == pytest.approx(2.0)

    def test_bell_full_certainty(self, mub):
        assert uncertainty_bound(mub, max_entangled(2)).values["bound"] == pytest.approx(0.0, abs=1e-12)
        assert memory_region(mub, max_entangled(2)) is MemoryRegion.FULL_CERTAINTY

    def test_regions(self, mub):
        assert memory_region(mub, MIXED) is MemoryRegion.NO_ADVANTAGE
        s = conditional_entropy(werner(0.9))
        assert -1 < s < 0
        assert memory_region(mub, werner(0.9)) is MemoryRegion.ADVANTAGE_WITH_UNCERTAINTY

    def test_c_unitary_invariant(self, rng):
        x, y = P["Z"], P["X"] + 0.3 * P["Z"]
        c0 = UncertaintySetting(x, y).c
        for _ in range(50):
            u = random_unitary(rng, 2)
            assert UncertaintySetting(u @ x @ u.conj().T, u @ y @ u.conj().T).c == pytest.approx(c0, abs=1e-12)

    def test_qutrit_mub(self):
        w = np.exp(2j * np.pi / 3)
        f = np.array([[w ** (j * k) for k in range(3)] for j in range(3)]) / np.sqrt(3)
        z = np.diag([1.0, 2.0, 3.0])
        setting = UncertaintySetting(z, f @ z @ f.conj().T)
        assert setting.c == pytest.approx(1 / 3)
        assert memory_region(setting, max_entangled(3)) is MemoryRegion.FULL_CERTAINTY

    def test_region_consistent_with_bound(self, mub, rng):
        for _ in range(100):
            rho = random_density((2, 2), rng)
            s = conditional_entropy(rho)
            region = memory_region(mub, rho)
            if s >= -1e-10:
                assert region is MemoryRegion.NO_ADVANTAGE
            elif s <= math.log2(mub.c) + 1e-10:
                assert region is MemoryRegion.FULL_CERTAINTY
            else:
                assert region is MemoryRegion.ADVANTAGE_WITH_UNCERTAINTY

    def test_degenerate(self):
        with pytest.raises(DegenerateObservable):
            UncertaintySetting(np.eye(2), P["X"])

    def test_dimension(self, mub):
        with pytest.raises(DimensionMismatch):
            uncertainty_bound(mub, isotropic(0.5, 3))


class TestRandomness:
    def test_bell(self):
        rep = randomness_rates(max_entangled(2))
        assert rep.values["R_A"] == pytest.approx(2.0)
        assert rep.values["R_B"] == pytest.approx(2.0)
        assert rep.values["R_G"] == pytest.approx(2.0)
        assert rep.flags == {"beyond_local_A": True, "beyond_local_B": True}

    def test_mixed(self):
        rep = randomness_rates(MIXED)
        for k in ("R_A", "R_B", "R_G"):
            assert rep.values[k] == pytest.approx(0.0, abs=1e-12)
        assert not rep.advantage

    def test_werner(self):
        assert randomness_rates(werner(0.99)).values["R_A"] == pytest.approx(1.9244, abs=5e-4)


class TestHashing:
    def test_values(self):
        assert hashing_bound(max_entangled(2)).values["lower_bound"] == pytest.approx(1.0)
        assert hashing_bound(werner(0.5)).values["lower_bound"] == 0.0
        assert hashing_bound(isotropic(0.8, 3)).values["lower_bound"] == pytest.approx(0.3764, abs=5e-4)


def test_advantage_flags_agree(rng):
    for _ in range(100):
        d = int(rng.integers(2, 4))
        rho = random_density((d, d), rng)
        if rng.random() < 0.5:
            rho = DensityMatrix(0.3 * rho.matrix + 0.7 * max_entangled(d).matrix, (d, d))
        flags = {
            sdc_capacity(rho).advantage,
            randomness_rates(rho).flags["beyond_local_A"],
            hashing_bound(rho).values["lower_bound"] > 0,
            not is_cvenn(rho),
        }
        assert len(flags) == 1


def test_report_text():
    text = sdc_capacity(max_entangled(2)).to_text()
    assert "capacity = 2.0000" in text and "advantage = true" in text
