"""Cocycle axioms, b-functions, coverings, and carrier constructions."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycloset import (
    CyclicPoset,
    angles_poset,
    build_covering,
    check_covering_axioms,
    check_zposet_star,
    cocycle_from_b,
    is_admissible,
    is_nondegenerate,
    star_product,
    table_poset,
    validate_cocycle_on,
    zn_poset,
)
from cycloset.circle import SymbolicPoint
from cycloset.poset import b_function

from conftest import random_winding_sum, winding_sum_poset


class TestWindingCocycle:
    @pytest.mark.parametrize("n", [4, 5, 6, 8])
    def test_valid_on_zn(self, n):
        p = zn_poset(n)
        report = validate_cocycle_on(p.cocycle, p.window())
        assert report.valid, report.violations

    def test_valid_on_angles(self):
        p = angles_poset(["0", "1/7", "1/3", "2/3", "9/10"])
        assert validate_cocycle_on(p.cocycle, p.window()).valid

    def test_valid_on_symbolic_window(self, zz2):
        assert validate_cocycle_on(zz2.cocycle, zz2.window(3)).valid

    def test_nondegenerate(self, zn8):
        ok, witness = is_nondegenerate(zn8)
        assert ok and witness is None

    def test_round_trip_value(self, zn8):
        pts = zn8.carrier.window()
        for x, y in itertools.permutations(pts[:4], 2):
            assert zn8.c(x, y, x) == 1


class TestBFunction:
    """b(y,z) = c(x0,y,z) reconstructs c via the coboundary formula."""

    @given(st.integers(0, 2**30))
    @settings(max_examples=40, deadline=None)
    def test_round_trip_random_posets(self, seed):
        rng = random.Random(seed)
        m = rng.randint(3, 8)
        poset, _ = random_winding_sum(rng, m)
        pts = poset.carrier.window()
        c2 = cocycle_from_b(pts, b_function(poset))
        for t in itertools.product(pts, repeat=3):
            assert poset.c(*t) == c2(*t)

    def test_round_trip_zn(self, zn8):
        pts = zn8.carrier.window()
        c2 = cocycle_from_b(pts, b_function(zn8))
        for t in itertools.product(pts[:5], repeat=3):
            assert zn8.c(*t) == c2(*t)


class TestCovering:
    @pytest.mark.parametrize("n", [4, 5, 8])
    def test_axioms_and_star_on_zn(self, n):
        cov = build_covering(zn_poset(n), radius=2)
        assert check_covering_axioms(cov)["holds"]
        assert check_zposet_star(cov)["holds"]

    def test_axioms_on_symbolic(self, zz2):
        cov = build_covering(zz2, radius=2)
        assert check_covering_axioms(cov)["holds"]
        assert check_zposet_star(cov)["holds"]

    @given(st.integers(0, 2**30))
    @settings(max_examples=25, deadline=None)
    def test_nondegenerate_iff_covering_antisymmetric(self, seed):
        rng = random.Random(seed)
        m = rng.randint(3, 6)
        # one winding part can be degenerate after restriction; sums are not
        parts = rng.choice([1, 2])
        poset, _ = random_winding_sum(rng, m, parts=parts)
        nondeg, witness = is_nondegenerate(poset)
        cov = build_covering(poset)
        pts = poset.carrier.window()
        antisym = True
        for x, y in itertools.permutations(pts, 2):
            a, bb = (x, 0), (y, poset.b(x, y))
            if cov.leq(a, bb) and cov.leq(bb, a) and a != bb:
                antisym = False
        assert nondeg == antisym
        if not nondeg:
            (x, _), (y, lvl) = witness
            assert cov.leq((x, 0), (y, lvl)) and cov.leq((y, lvl), (x, 0))


class TestRestriction:
    """Restricting the carrier preserves the axioms."""

    @given(st.integers(0, 2**30))
    @settings(max_examples=25, deadline=None)
    def test_restriction_stays_valid(self, seed):
        rng = random.Random(seed)
        m = rng.randint(5, 8)
        poset, _ = random_winding_sum(rng, m)
        pts = poset.carrier.window()
        keep = sorted(rng.sample(range(m), rng.randint(3, m - 1)))
        sub = [pts[i] for i in keep]
        entries = {
            t: poset.c(*t)
            for t in itertools.product(sub, repeat=3)
            if t[0] != t[1] and t[1] != t[2]
        }
        rposet = table_poset(sub, entries)
        assert validate_cocycle_on(rposet.cocycle, sub).valid


class TestStarProduct:
    def test_carrier_points_and_successor(self, zz2):
        z = SymbolicPoint(0, 4)
        assert zz2.succ(z) == SymbolicPoint(0, 5)
        assert zz2.pred(z) == SymbolicPoint(0, 3)

    def test_needs_limits(self):
        with pytest.raises(ValueError):
            star_product([])

    def test_single_limit_poset_works(self):
        p1 = star_product(1)
        assert validate_cocycle_on(p1.cocycle, p1.window(3)).valid

    def test_uneven_limits(self):
        p = star_product([Fraction(0), Fraction(1, 5), Fraction(1, 2)])
        assert p.carrier.num_limits == 3
        assert validate_cocycle_on(p.cocycle, p.window(2)).valid


class TestAdmissibility:
    def test_finite_sets(self):
        assert is_admissible({"kind": "zn", "n": 8}) == (True, None)
        ok, reason = is_admissible({"kind": "zn", "n": 3})
        assert not ok and "4" in reason

    def test_z_zinfty_always(self):
        assert is_admissible({"kind": "z_zinfty", "limits": 10}) == (True, None)

    def test_one_sided_sequence_rejected(self):
        ok, reason = is_admissible({"kind": "sequence", "coefficient": "1/2"})
        assert ok is False
        assert reason == "one-sided limit at 0"

    def test_mirrored_sequence_allowed(self):
        ok, _ = is_admissible(
            {"kind": "sequence", "coefficient": "1/2", "mirrored": True})
        assert ok


def test_winding_sum_fixture_is_sane():
    poset = winding_sum_poset([[0, 1, 2, 3], [2, 0, 3, 1]], [1, 1])
    pts = poset.carrier.window()
    assert validate_cocycle_on(poset.cocycle, pts).valid
    assert all(poset.c(x, y, x) == 2
               for x, y in itertools.permutations(pts, 2))
