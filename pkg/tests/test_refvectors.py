import numpy as np
import pytest

from subsetbench.refvectors import (
    ReferenceVectorSet,
    das_dennis,
    default_k,
    default_reference_vectors,
    two_layer,
    vectors_for_k,
)


class TestDasDennis:
    def test_h1_is_identity_rows(self):
        v = das_dennis(3, 1).vectors
        assert np.array_equal(np.sort(v, axis=0), np.sort(np.eye(3), axis=0))

    def test_counts(self):
        assert len(das_dennis(3, 12)) == 91
        assert len(das_dennis(5, 6)) == 210

    def test_two_layer_counts(self):
        assert len(two_layer(8, 3, 2)) == 156   # 120 outer + 36 inner
        assert len(two_layer(10, 3, 2)) == 275  # 220 outer + 55 inner
        assert len(das_dennis(10, 3)) == 220
        assert len(das_dennis(10, 2)) == 55

    @pytest.mark.parametrize("m,h", [(3, 4), (5, 3), (8, 2)])
    def test_lattice_structure(self, m, h):
        v = das_dennis(m, h).vectors
        assert np.abs(v.sum(axis=1) - 1.0).max() <= 1e-12
        assert (v >= 0).all() and (v <= 1).all()
        # every component is a multiple of 1/h
        assert np.abs(v * h - np.round(v * h)).max() <= 1e-9
        assert len(np.unique(v, axis=0)) == len(v)

    def test_deterministic_order(self):
        a = das_dennis(4, 5).vectors
        b = das_dennis(4, 5).vectors
        assert a.tobytes() == b.tobytes()

    def test_two_layer_inner_shrink(self):
        m = 4
        vs = two_layer(m, 1, 1).vectors
        outer = das_dennis(m, 1).vectors
        inner = outer / 2.0 + 1.0 / (2 * m)
        want = np.vstack([outer, inner])
        assert np.allclose(np.sort(vs, axis=0), np.sort(want, axis=0), atol=1e-15)
        assert np.abs(vs.sum(axis=1) - 1.0).max() <= 1e-12


class TestDefaults:
    def test_paper_sizes(self):
        for m, want in [(3, 91), (5, 210), (8, 156), (10, 275)]:
            assert default_k(m) == want
            assert len(default_reference_vectors(m)) == want

    def test_unknown_m_rejected(self):
        with pytest.raises(ValueError):
            default_reference_vectors(4)

    def test_vectors_for_k(self):
        assert len(vectors_for_k(3, 91)) == 91
        assert len(vectors_for_k(3, 6)) == 6       # exact lattice, H=2
        assert len(vectors_for_k(4, 20)) == 20     # exact lattice, H=3
        # no lattice of size 7 at m=3: strided rows of the H=3 lattice
        seven = vectors_for_k(3, 7)
        assert len(seven) == 7
        assert len(np.unique(seven.vectors, axis=0)) == 7
        with pytest.raises(ValueError):
            vectors_for_k(3, 0)


class TestValidation:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ReferenceVectorSet(np.array([[1.2, -0.2]]))

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            ReferenceVectorSet(np.array([[0.6, 0.6]]))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            ReferenceVectorSet(np.array([[0.5, 0.5], [0.5, 0.5]]))
