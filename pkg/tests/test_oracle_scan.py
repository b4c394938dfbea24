import math

import pytest

from jacspec import (
    amb3_candidates,
    brute_force_isospectral_search,
    eigenvalues_jacobi,
    make_free,
)

COARSE = (-3.0, 3.0, 0.05)  # faster grid for unit tests; acceptance uses 0.01


def by_branch(solutions):
    return {s.nearest_branch: s for s in solutions}


class TestGridScan:
    def test_three_sites_only_origin(self):
        sols = brute_force_isospectral_search(3, COARSE, 1e-8, k=1)
        assert len(sols) == 1
        s = sols[0]
        assert s.nearest_branch == "trivial"
        assert math.hypot(s.b1, s.b2) < 1e-6
        assert s.matches_consecutive

    def test_five_sites_finds_both_branches(self):
        sols = brute_force_isospectral_search(5, COARSE, 1e-8, k=1)
        branches = by_branch(sols)
        assert set(branches) == {"trivial", "spurious"}
        free = eigenvalues_jacobi(make_free(5))
        expected = amb3_candidates(free[0], free[1])[1]
        sp = branches["spurious"]
        assert sp.b1 == pytest.approx(expected.b1, abs=1e-8)
        assert sp.b2 == pytest.approx(expected.b2, abs=1e-8)
        assert not sp.matches_consecutive
        assert branches["trivial"].matches_consecutive

    def test_even_middle_spurious_coincides_with_origin(self):
        sols = brute_force_isospectral_search(4, COARSE, 1e-8, k=2)
        assert sols, "the origin should be found"
        for s in sols:
            assert math.hypot(s.b1, s.b2) < 1e-5

    def test_no_nontrivial_consecutive_match(self):
        for n in (3, 4, 5):
            sols = brute_force_isospectral_search(n, COARSE, 1e-8)
            for s in sols:
                if s.matches_consecutive:
                    assert math.hypot(s.b1, s.b2) <= 1e-6, (n, s)

    def test_deterministic(self):
        a = brute_force_isospectral_search(5, COARSE, 1e-8, k=2)
        b = brute_force_isospectral_search(5, COARSE, 1e-8, k=2)
        assert a == b

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            brute_force_isospectral_search(2, COARSE, 1e-8)
        with pytest.raises(ValueError):
            brute_force_isospectral_search(5, (3.0, -3.0, 0.05), 1e-8)
        with pytest.raises(ValueError):
            brute_force_isospectral_search(5, COARSE, 1e-8, k=5)
