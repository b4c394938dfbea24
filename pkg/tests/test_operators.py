import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacspec import (
    BoundaryPerturbation,
    FloquetMatrix,
    JacobiMatrix,
    apply_boundary,
    make_floquet,
    make_free,
    make_schrodinger,
)

from oracles import dense_eigs


class TestMakeSchrodinger:
    def test_counterexample_matrix(self):
        m = make_schrodinger(3, (2, 0, 0))
        assert m.b == (2, 0, 0)
        assert m.a == (1, 1)
        expected = np.array([[2, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
        np.testing.assert_array_equal(m.to_dense(), expected)

    def test_smallest_case(self):
        m = make_schrodinger(1, (0,))
        np.testing.assert_array_equal(m.to_dense(), np.zeros((1, 1)))

    def test_zero_diagonal_is_free(self):
        assert make_schrodinger(4, (0, 0, 0, 0)) == make_free(4)

    def test_scalar_broadcast(self):
        assert make_schrodinger(3, 0) == make_free(3)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            make_schrodinger(3, (1, 2))


class TestMakeFree:
    def test_n2_dense(self):
        np.testing.assert_array_equal(
            make_free(2).to_dense(), np.array([[0.0, 1.0], [1.0, 0.0]])
        )

    def test_n3_structure(self):
        m = make_free(3).to_dense()
        assert np.all(np.diag(m) == 0)
        assert m[0, 1] == m[1, 0] == m[1, 2] == m[2, 1] == 1
        assert m[0, 2] == m[2, 0] == 0

    def test_spectrum_in_band(self):
        ev = dense_eigs(make_free(5))
        assert np.all(ev >= -2) and np.all(ev <= 2)


class TestApplyBoundary:
    def test_builds_counterexample_a(self):
        m = apply_boundary(make_free(3), BoundaryPerturbation(2, 0))
        assert m == make_schrodinger(3, (2, 0, 0))

    def test_zero_is_identity(self):
        m = make_schrodinger(4, (1.5, -0.5, 0.25, 3))
        assert apply_boundary(m, BoundaryPerturbation(0, 0)) == m

    def test_both_ends(self):
        m = apply_boundary(make_free(3), BoundaryPerturbation(1, -1))
        assert m.b == (1, 0, -1)

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.integers(-50, 50), min_size=1, max_size=8),
        st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
        st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
    )
    def test_additive(self, b, p1, p2):
        m = make_schrodinger(len(b), b)
        one_then_two = apply_boundary(
            apply_boundary(m, BoundaryPerturbation(*p1)), BoundaryPerturbation(*p2)
        )
        combined = apply_boundary(
            m, BoundaryPerturbation(p1[0] + p2[0], p1[1] + p2[1])
        )
        assert one_then_two == combined


class TestMakeFloquet:
    def test_theta_zero_real_ring(self):
        m = make_floquet(3, 0, 0.0).to_dense()
        assert np.allclose(m.imag, 0)
        assert m[0, 2] == 1 and m[2, 0] == 1

    def test_quarter_turn_corners(self):
        m = make_floquet(4, 0, 0.25).to_dense()
        assert abs(m[0, 3] - 1j) < 1e-15
        assert abs(m[3, 0] + 1j) < 1e-15

    def test_theta_canonicalized(self):
        assert make_floquet(4, 0, 1.25).theta == pytest.approx(0.25)
        assert make_floquet(4, 0, -0.75).theta == pytest.approx(0.25)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            make_floquet(2, 0, 0.1)

    def test_hermitian(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            n = int(rng.integers(3, 9))
            m = make_floquet(n, tuple(rng.uniform(-3, 3, n)), float(rng.uniform(0, 1)))
            dense = m.to_dense()
            np.testing.assert_allclose(dense, dense.conj().T)

    def test_reflection_is_transpose(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            n = int(rng.integers(3, 9))
            b = tuple(rng.uniform(-2, 2, n))
            theta = float(rng.uniform(0, 1))
            left = make_floquet(n, b, theta).to_dense()
            right = make_floquet(n, b, 1 - theta).to_dense()
            np.testing.assert_allclose(left, right.T, atol=1e-12)


class TestValidation:
    def test_zero_offdiagonal_rejected(self):
        with pytest.raises(ValueError):
            JacobiMatrix(2, (0,), (1, 1))

    def test_negative_offdiagonal_rejected(self):
        with pytest.raises(ValueError):
            JacobiMatrix(2, (-1,), (1, 1))

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            make_schrodinger(2, (float("nan"), 0))
        with pytest.raises(ValueError):
            BoundaryPerturbation(float("inf"), 0)

    def test_hermitian_jacobi(self):
        m = JacobiMatrix(4, (0.5, 1.5, 2.0), (1, -1, 2, 0)).to_dense()
        np.testing.assert_array_equal(m, m.T)


class TestSerialization:
    def test_jacobi_json(self):
        d = make_schrodinger(3, (2, 0, 0)).to_json_dict()
        assert d == {"n": 3, "a": [1, 1], "b": [2, 0, 0], "boundary": None, "theta": None}

    def test_floquet_json(self):
        d = make_floquet(3, 0, 0.25).to_json_dict()
        assert d["n"] == 3 and d["theta"] == 0.25 and d["b"] == [0, 0, 0]
