"""Vector primitive contracts, including the concat-space alignment identity."""

import numpy as np
import pytest

from sensevec.errors import DimensionMismatch, EmptyInput, ZeroVector
from sensevec.vectorspace import (
    concat_sense,
    cosine,
    duplicate_contextual,
    halves_are_unit,
    l2_normalize,
    mean,
    split_halves,
)


class TestL2Normalize:
    def test_three_four_five(self):
        np.testing.assert_allclose(l2_normalize(np.array([3.0, 4.0])),
                                   [0.6, 0.8], atol=1e-7)

    def test_idempotent_on_unit_vector(self):
        u = l2_normalize(np.array([1.0, 2.0, 2.0]))
        np.testing.assert_allclose(l2_normalize(u), u, atol=1e-7)

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVector):
            l2_normalize(np.array([0.0, 0.0]))

    def test_direction_preserved(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            v = rng.normal(size=8).astype(np.float32)
            u = l2_normalize(v)
            assert cosine(u, v) > 1 - 1e-6


class TestMean:
    def test_two_unit_vectors(self):
        np.testing.assert_array_equal(
            mean([np.array([1.0, 0.0]), np.array([0.0, 1.0])]), [0.5, 0.5])

    def test_single_element_identity_exact(self):
        v = np.array([0.1, -2.5, 3.25], dtype=np.float32)
        assert mean([v]).tolist() == v.tolist()

    def test_against_two_pass_oracle(self):
        # independent oracle: explicit two-pass sum then divide, float64
        rng = np.random.default_rng(42)
        vecs = [rng.normal(size=8).astype(np.float32) for _ in range(100)]
        total = np.zeros(8, dtype=np.float64)
        for v in vecs:
            total = total + np.asarray(v, dtype=np.float64)
        oracle = total / len(vecs)
        np.testing.assert_allclose(mean(vecs), oracle, atol=1e-6)

    def test_component_bounds(self):
        rng = np.random.default_rng(1)
        vecs = [rng.normal(size=5).astype(np.float32) for _ in range(17)]
        m = mean(vecs)
        stack = np.stack(vecs)
        assert np.all(m >= stack.min(axis=0) - 1e-6)
        assert np.all(m <= stack.max(axis=0) + 1e-6)

    def test_empty_rejected(self):
        with pytest.raises(EmptyInput):
            mean([])

    def test_ragged_rejected(self):
        with pytest.raises(DimensionMismatch):
            mean([np.zeros(3), np.zeros(4)])


class TestCosine:
    def test_orthogonal(self):
        assert cosine(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == 0.0

    def test_self_similarity(self):
        v = np.array([0.2, -0.7, 1.1])
        assert cosine(v, v) == pytest.approx(1.0, abs=1e-7)

    def test_analytic_45_degrees(self):
        assert cosine(np.array([1.0, 1.0]), np.array([1.0, 0.0])) == \
            pytest.approx(0.70710678, abs=1e-6)

    def test_symmetry_and_scale_invariance(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            a = rng.normal(size=6)
            b = rng.normal(size=6)
            k = float(rng.uniform(0.1, 50.0))
            assert cosine(a, b) == pytest.approx(cosine(b, a), abs=1e-7)
            assert cosine(k * a, b) == pytest.approx(cosine(a, b), abs=1e-6)

    def test_clamped_to_closed_interval(self):
        v = np.array([1e-3, 1e-3, 1e-3], dtype=np.float32)
        assert -1.0 <= cosine(v, v) <= 1.0
        assert -1.0 <= cosine(v, -v) <= 1.0

    def test_errors(self):
        with pytest.raises(DimensionMismatch):
            cosine(np.zeros(2) + 1, np.zeros(3) + 1)
        with pytest.raises(ZeroVector):
            cosine(np.zeros(2), np.ones(2))


class TestConcatAndDuplicate:
    def test_concat_normalizes_halves(self):
        np.testing.assert_allclose(
            concat_sense(np.array([2.0, 0.0]), np.array([0.0, 5.0])),
            [1.0, 0.0, 0.0, 1.0], atol=1e-7)

    def test_concat_of_equal_unit_vectors(self):
        u = l2_normalize(np.array([1.0, 1.0, 0.0]))
        np.testing.assert_allclose(concat_sense(u, u),
                                   np.concatenate([u, u]), atol=1e-7)

    def test_halves_unit_norm_invariant(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            c = concat_sense(rng.normal(size=7) * 3, rng.normal(size=7) * 0.2)
            assert halves_are_unit(c, tol=1e-5)

    def test_duplicate(self):
        np.testing.assert_allclose(duplicate_contextual(np.array([0.0, 3.0])),
                                   [0.0, 1.0, 0.0, 1.0], atol=1e-7)
        assert halves_are_unit(duplicate_contextual(np.array([2.0, -1.0, 4.0])))

    def test_split_halves_roundtrip(self):
        c = concat_sense(np.array([1.0, 2.0]), np.array([3.0, 4.0]))
        first, second = split_halves(c)
        np.testing.assert_allclose(np.concatenate([first, second]), c)

    def test_errors(self):
        with pytest.raises(ZeroVector):
            duplicate_contextual(np.zeros(3))
        with pytest.raises(DimensionMismatch):
            concat_sense(np.ones(2), np.ones(3))


class TestAlignmentIdentity:
    """cos(dup(c), [v_s;v_d]) must equal the mean of the normalized cosines."""

    def test_identity_on_random_vectors(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            dim = int(rng.integers(2, 16))
            c = rng.normal(size=dim)
            a = rng.normal(size=dim)
            b = rng.normal(size=dim)
            combined = cosine(duplicate_contextual(c), concat_sense(a, b))
            direct = (cosine(c, a) + cosine(c, b)) / 2.0
            assert combined == pytest.approx(direct, abs=1e-6)
