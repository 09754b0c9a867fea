from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from cuberips import (
    IntegerHomologySummary,
    flag_skeleton_from_graph,
    integer_homology_snf,
    skeleton_from_facets,
    smith_normal_form,
)

RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 1, 5), (0, 4, 5), (0, 3, 4),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
]


def test_snf_known_matrices():
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form(np.eye(3, dtype=np.int64)) == [1, 1, 1]
    assert smith_normal_form(np.zeros((3, 4), dtype=np.int64)) == []
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[0]]) == []
    assert smith_normal_form([[-5]]) == [5]
    assert smith_normal_form([[1, 2, 3]]) == [1]


@pytest.mark.parametrize("seed", range(20))
def test_snf_matches_sympy(seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(-9, 10, size=(int(rng.integers(1, 6)), int(rng.integers(1, 6))))
    ours = smith_normal_form(a)
    ref = sympy_snf(Matrix(a.tolist()))
    diag = [abs(int(ref[i, i])) for i in range(min(ref.shape))]
    assert ours == [d for d in diag if d]


def test_snf_divisibility_chain_and_permutation_invariance():
    rng = np.random.default_rng(42)
    for _ in range(30):
        a = rng.integers(-20, 21, size=(5, 5))
        d = smith_normal_form(a)
        assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
        shuffled = a[rng.permutation(5)][:, rng.permutation(5)]
        assert smith_normal_form(shuffled) == d
        assert smith_normal_form(a.T) == d


def test_integer_homology_of_spheres(q3r2, q4r2):
    sphere = skeleton_from_facets(combinations(range(4), 3))
    assert integer_homology_snf(sphere, 2) == IntegerHomologySummary(2, 1, ())
    assert integer_homology_snf(sphere, 1) == IntegerHomologySummary(1, 0, ())
    assert integer_homology_snf(sphere, 0) == IntegerHomologySummary(0, 1, ())
    assert integer_homology_snf(q3r2, 3) == IntegerHomologySummary(3, 1, ())
    assert integer_homology_snf(q4r2, 3) == IntegerHomologySummary(3, 9, ())


def test_integer_homology_torsion():
    rp2 = skeleton_from_facets(RP2_FACETS)
    assert integer_homology_snf(rp2, 1) == IntegerHomologySummary(1, 0, (2,))
    assert integer_homology_snf(rp2, 2) == IntegerHomologySummary(2, 0, ())


def test_dimension_zero_counts_components():
    two = flag_skeleton_from_graph(range(4), [(0, 1), (2, 3)], 1)
    assert integer_homology_snf(two, 0) == IntegerHomologySummary(0, 2, ())


def test_integer_homology_validation():
    sphere = skeleton_from_facets(combinations(range(4), 3))
    with pytest.raises(ValueError):
        integer_homology_snf(sphere, -1)
    with pytest.raises(ValueError):
        integer_homology_snf(sphere, 3)
    truncated = skeleton_from_facets([tuple(range(6))], dim_cap=2)
    with pytest.raises(ValueError):
        integer_homology_snf(truncated, 2)  # needs the 3-layer
    assert integer_homology_snf(truncated, 1) == IntegerHomologySummary(1, 0, ())


def test_integer_homology_size_cap():
    wide = skeleton_from_facets([tuple(range(28))], dim_cap=3)
    with pytest.raises(ValueError):
        integer_homology_snf(wide, 2)  # C(28,4) = 20475 three-simplices
