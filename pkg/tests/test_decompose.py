import numpy as np
import pytest

from conftest import random_hermitian
from cvenn import BITS, NATS
from cvenn.decompose import (
    gellmann_decompose,
    gellmann_matrices,
    pauli_decompose,
    pauli_matrices,
    polarization_decompose,
    polarization_states,
)
from cvenn.errors import DimensionMismatch, PatternMismatch
from cvenn.states import isotropic, random_density, werner
from cvenn.witness import HermitianOperator, eval_witness, log_witness

# Written out by hand in the textbook layout, not generated.
LAMBDA_3 = {
    "lambda1": [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
    "lambda2": [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
    "lambda3": [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
    "lambda4": [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
    "lambda5": [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
    "lambda6": [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
    "lambda7": [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
    "lambda8": np.diag([1, 1, -2]) / np.sqrt(3),
}
SIGNS_3 = {"lambda1": -1, "lambda2": 1, "lambda3": -1, "lambda4": -1, "lambda5": 1,
           "lambda6": -1, "lambda7": 1, "lambda8": -1}


class TestBases:
    def test_gellmann_d3_matches_table(self):
        basis = gellmann_matrices(3)
        assert list(basis) == ["I"] + list(LAMBDA_3)
        for name, ref in LAMBDA_3.items():
            np.testing.assert_allclose(basis[name], np.asarray(ref, dtype=complex), atol=1e-15)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_gellmann_orthogonality(self, d):
        mats = [m for k, m in gellmann_matrices(d).items() if k != "I"]
        assert len(mats) == d * d - 1
        gram = np.array([[np.trace(a @ b) for b in mats] for a in mats])
        np.testing.assert_allclose(gram, 2 * np.eye(d * d - 1), atol=1e-12)
        for m in mats:
            np.testing.assert_allclose(m, m.conj().T)

    def test_gellmann_d2_is_pauli(self):
        g, p = gellmann_matrices(2), pauli_matrices()
        for a, b in [("lambda1", "X"), ("lambda2", "Y"), ("lambda3", "Z")]:
            np.testing.assert_allclose(g[a], p[b])

    def test_polarization_states_normalised(self):
        for v in polarization_states().values():
            assert np.linalg.norm(v) == pytest.approx(1.0)

    def test_gellmann_d1_rejected(self):
        with pytest.raises(DimensionMismatch):
            gellmann_matrices(1)


class TestPauli:
    def test_werner_witness(self):
        dec = pauli_decompose(log_witness(werner(0.99), NATS))
        got = {(t.label_A, t.label_B): t.coefficient for t in dec.terms}
        assert set(got) == {("I", "I"), ("X", "X"), ("Y", "Y"), ("Z", "Z")}
        assert got["I", "I"] == pytest.approx(3.8023, abs=5e-4)
        assert got["Z", "Z"] == pytest.approx(-1.4960, abs=5e-4)
        assert got["X", "X"] == pytest.approx(-1.4960, abs=5e-4)
        assert got["Y", "Y"] == pytest.approx(1.4960, abs=5e-4)

    def test_identity(self):
        dec = pauli_decompose(np.eye(4))
        assert dec.terms == [(1.0, "I", "I")]

    def test_round_trip(self, rng):
        for _ in range(100):
            w = random_hermitian(rng, 4)
            dec = pauli_decompose(w)
            assert np.linalg.norm(dec.reconstruct() - w) <= 1e-12
            assert all(isinstance(t.coefficient, float) for t in dec.terms)

    def test_wrong_dims(self):
        with pytest.raises(DimensionMismatch):
            pauli_decompose(log_witness(isotropic(0.8, 3)))

    def test_expectation_matches_trace(self, rng):
        w = log_witness(werner(0.99), NATS)
        dec = pauli_decompose(w)
        for _ in range(20):
            rho = random_density((2, 2), rng)
            assert dec.expectation(rho.matrix) == pytest.approx(eval_witness(w, rho), abs=1e-12)

    def test_text(self):
        text = pauli_decompose(np.eye(4)).to_text()
        assert text == "1.0000  I (x) I"


class TestGellMann:
    def test_isotropic_witness(self):
        w = log_witness(isotropic(0.8, 3), BITS)
        dec = gellmann_decompose(w)
        assert dec.coefficient("I", "I") == pytest.approx(3.3281, abs=5e-4)
        assert dec.coefficient("I", "I") == pytest.approx(np.trace(w.matrix).real / 9, abs=1e-12)
        assert len(dec.terms) == 9
        for name, sign in SIGNS_3.items():
            c = dec.coefficient(name, name)
            assert abs(c) == pytest.approx(0.86825, abs=1e-4)
            assert np.sign(c) == sign
        assert np.linalg.norm(dec.reconstruct() - w.matrix) <= 1e-10

    def test_identity(self):
        assert gellmann_decompose(np.eye(9)).terms == [(1.0, "I", "I")]

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_round_trip(self, d, rng):
        for _ in range(100 if d < 4 else 10):
            w = random_hermitian(rng, d * d)
            assert np.linalg.norm(gellmann_decompose(w).reconstruct() - w) <= 1e-10

    def test_expectation(self, rng):
        w = log_witness(isotropic(0.8, 3), BITS)
        dec = gellmann_decompose(w)
        for alpha in (0.715, 0.8):
            assert dec.expectation(isotropic(alpha, 3).matrix) == pytest.approx(
                eval_witness(w, isotropic(alpha, 3)), abs=1e-10
            )

    def test_dims_mismatch(self):
        with pytest.raises(DimensionMismatch):
            gellmann_decompose(np.eye(9), d=2)


class TestPolarization:
    def test_werner_witness(self):
        w = log_witness(werner(0.99), NATS)
        dec = polarization_decompose(w)
        p = dec.params
        assert (p["a"], p["b"], p["c"]) == pytest.approx((2.3063, 5.2983, -2.9920), abs=5e-4)
        assert p["a"] == pytest.approx(w.matrix[0, 0].real, abs=1e-12)
        assert len(dec.terms) == 8
        np.testing.assert_allclose(dec.reconstruct(), w.matrix, atol=1e-10)

    def test_geometric_witness_shape(self):
        a, b, c = 0.3588, 0.9361, -0.5774
        m = np.diag([a, b, b, a]).astype(complex)
        m[0, 3] = m[3, 0] = c
        dec = polarization_decompose(HermitianOperator(m, (2, 2)))
        assert (dec.params["a"], dec.params["b"], dec.params["c"]) == pytest.approx((a, b, c), abs=1e-12)

    def test_rejects_other_operators(self, rng):
        with pytest.raises(PatternMismatch):
            polarization_decompose(random_hermitian(rng, 4))
        with pytest.raises(PatternMismatch):
            polarization_decompose(np.diag([1.0, 2.0, 3.0, 4.0]))

    def test_expectation(self, rng):
        w = log_witness(werner(0.99), NATS)
        dec = polarization_decompose(w)
        rho = random_density((2, 2), rng)
        assert dec.expectation(rho.matrix) == pytest.approx(eval_witness(w, rho), abs=1e-10)
