"""Partial cyclic orders extracted from bounded cocycles, and the search."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycloset.pco import (
    HypothesisViolated,
    Infeasible,
    Timeout,
    delta_lin,
    is_partial_cyclic_order,
    pco_from_bounded_cocycle,
    search_bounded_cocycle,
)
from cycloset import table_poset, validate_cocycle_on, zn_poset

from conftest import random_winding_sum, winding_sum_poset


def _doubled_winding_z4():
    """Twice the standard winding cocycle on four points."""
    return winding_sum_poset([[0, 1, 2, 3], [0, 1, 2, 3]], [1, 1])


class TestExtraction:
    def test_doubled_winding_distinguished_set(self):
        poset = _doubled_winding_z4()
        pco = pco_from_bounded_cocycle(poset, r=2)
        labels = sorted(poset.carrier.window(), key=repr)
        # c = 2*winding hits the bound exactly on clockwise-read triples
        clockwise = {
            (x, y, z)
            for x, y, z in itertools.permutations(labels, 3)
            if poset.c(x, y, z) == 2
        }
        assert set(pco.triples) == clockwise
        assert len(pco.triples) == 12
        ok, witness = is_partial_cyclic_order(pco.triples, pco.elements)
        assert ok, witness

    def test_report_identities(self):
        pco = pco_from_bounded_cocycle(_doubled_winding_z4(), r=2)
        assert pco.report["identity_i"] is True
        assert pco.report["identity_ii"] is True
        assert pco.report["r"] == 2

    def test_r_must_be_at_least_two(self, zn8):
        with pytest.raises(HypothesisViolated) as exc:
            pco_from_bounded_cocycle(zn8, r=1)
        assert exc.value.hypothesis == "r >= 2"

    def test_bound_violation_names_hypothesis_one(self):
        poset = _doubled_winding_z4()
        with pytest.raises(HypothesisViolated) as exc:
            pco_from_bounded_cocycle(poset, r=3)
        assert exc.value.hypothesis == "(2) c(x,y,x) = r"
        assert exc.value.witness is not None

    def test_cap_violation_names_hypothesis_two(self):
        # weights (1,2) give c(x,y,x)=3, exceeding the requested bound r=2
        poset = winding_sum_poset([[0, 1, 2, 3], [0, 2, 1, 3]], [1, 2])
        with pytest.raises(HypothesisViolated) as exc:
            pco_from_bounded_cocycle(poset, r=2)
        assert exc.value.hypothesis == "(1) c <= r"

    @given(st.integers(0, 2**30))
    @settings(max_examples=1000, deadline=None)
    def test_extraction_always_partial_cyclic(self, seed):
        rng = random.Random(seed)
        m = rng.randint(3, 6)
        parts = rng.randint(2, 3)
        poset, r = random_winding_sum(rng, m, parts=parts)
        pco = pco_from_bounded_cocycle(poset, r)
        ok, witness = is_partial_cyclic_order(pco.triples, pco.elements)
        assert ok, witness


class TestAxiomChecker:
    def test_accepts_total_cyclic_order(self):
        triples = {
            (x, y, z)
            for x, y, z in itertools.permutations(range(5), 3)
            if (y - x) % 5 < (z - x) % 5
        }
        ok, witness = is_partial_cyclic_order(triples, range(5))
        assert ok and witness is None

    def test_rejects_missing_rotation(self):
        ok, witness = is_partial_cyclic_order({(0, 1, 2)}, range(3))
        assert not ok
        assert witness[0] == "a"

    def test_rejects_symmetric_pair(self):
        full = {(0, 1, 2), (1, 2, 0), (2, 0, 1),
                (0, 2, 1), (2, 1, 0), (1, 0, 2)}
        ok, witness = is_partial_cyclic_order(full, range(3))
        assert not ok
        assert witness[0] == "b"

    def test_rejects_nondistinct_triple(self):
        ok, witness = is_partial_cyclic_order({(0, 1, 0)}, range(2))
        assert not ok
        assert witness[0] == "distinct"

    def test_transitivity_failure_witnessed(self):
        base = {(0, 1, 2), (0, 2, 3)}
        closed = set()
        for t in base:
            closed |= {t, (t[1], t[2], t[0]), (t[2], t[0], t[1])}
        ok, witness = is_partial_cyclic_order(closed, range(4))
        assert not ok
        assert witness[0] == "c"
        assert witness[1] == (0, 1, 2, 3)


class TestSearch:
    def test_literal_product_rule_is_feasible(self):
        """The pointwise rule (x-y)(y-z)(z-x) > 0 admits a bounded cocycle."""
        delta = delta_lin(6, include_zero_triples=True)
        result = search_bounded_cocycle(delta, 6)
        assert not isinstance(result, (Infeasible, Timeout))
        assert result["r"] == 2
        assert set(result["table"].values()) <= {0, 2}
        assert result["explored"] <= 200
        labels = list(range(6))
        entries = dict(result["table"])
        poset = table_poset(labels, entries)
        assert validate_cocycle_on(poset.cocycle, labels).valid
        pco = pco_from_bounded_cocycle(poset, result["r"])
        assert set(pco.triples) >= delta

    def test_zero_incomparable_variant_is_infeasible(self):
        result = search_bounded_cocycle(delta_lin(6), 6)
        assert isinstance(result, Infeasible)
        assert not result
        assert result.r_range == (2, 3)
        assert result.explored > 0

    def test_partial_delta_from_two_windings(self):
        rng = random.Random(7)
        poset, r = random_winding_sum(rng, 5, parts=2)
        assert r == 2
        pco = pco_from_bounded_cocycle(poset, r)
        labels = sorted(range(5))
        remap = {p: i for i, p in enumerate(
            sorted(poset.carrier.window(), key=repr))}
        delta = {(remap[x], remap[y], remap[z]) for x, y, z in pco.triples}
        result = search_bounded_cocycle(delta, 5)
        assert not isinstance(result, (Infeasible, Timeout))
        assert result["r"] == 2

    def test_non_pco_input_short_circuits(self):
        result = search_bounded_cocycle({(0, 1, 2), (0, 2, 1)}, 3)
        assert isinstance(result, Infeasible)
        assert result.explored == 0

    def test_budget_exhaustion_raises_timeout(self):
        with pytest.raises(Timeout) as exc:
            search_bounded_cocycle(delta_lin(6), 6, budget=10)
        assert exc.value.explored >= 10

    def test_size_caps_enforced(self):
        with pytest.raises(ValueError):
            search_bounded_cocycle(frozenset(), 8)
        with pytest.raises(ValueError):
            search_bounded_cocycle(frozenset(), 4, r_max=5)
