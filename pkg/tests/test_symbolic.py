"""Clusters over carriers with accumulation points."""

import itertools

import pytest

from cycloset import star_product
from cycloset.circle import SymbolicPoint
from cycloset.clusters import NotInCluster
from cycloset.symbolic import (
    FanFamily,
    MalformedZigzag,
    MutationInsideTail,
    SymbolicCluster,
    Tail,
    _g_arc,
    ar_component,
    ar_neighbors,
    build_nested_cluster,
    build_zigzag_cluster,
    complex_K,
    construct_triangulation_cluster,
    euler_characteristic,
    is_locally_finite,
    is_triangulation_cluster,
    limit_pairs,
    mutate_symbolic,
    rho_from_cluster,
    straight_zigzag,
    validate_symbolic,
)


@pytest.fixture(scope="module")
def zigzag(zz2_module):
    return straight_zigzag(zz2_module)


@pytest.fixture(scope="module")
def nested(zz2_module):
    return build_nested_cluster(zz2_module)


@pytest.fixture(scope="module")
def zz2_module():
    return star_product(2)


class TestVerdicts:
    def test_zigzag_is_a_triangulation_cluster(self, zigzag):
        assert is_triangulation_cluster(zigzag)

    def test_nested_is_not(self, nested):
        assert not is_triangulation_cluster(nested)

    def test_nested_limit_pairs(self, nested):
        assert limit_pairs(nested) == {(0, 1)}

    def test_nested_rho_glues_the_limits(self, nested):
        rho = rho_from_cluster(nested)
        assert [list(c) for c in rho.classes] == [[0, 1]]

    def test_triangulation_rho_is_discrete(self, zigzag):
        rho = rho_from_cluster(zigzag)
        assert all(len(c) == 1 for c in rho.classes)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_constructor_output_is_triangulation(self, m):
        S = construct_triangulation_cluster(star_product(m))
        assert is_triangulation_cluster(S)
        report = validate_symbolic(S)
        assert report["pairwise_ok"], report["bad_pairs"]
        assert report["certificates_ok"]
        assert report["maximal_in_window"], report["addable"]


class TestLocalFiniteness:
    def test_triangulation_clusters_are_locally_finite(self, zigzag):
        ok, witness = is_locally_finite(zigzag)
        assert ok and witness is None

    def test_fixed_endpoint_family_witnessed(self, zz2_module):
        fan = FanFamily(SymbolicPoint(0, 0), Tail(0, 2, +1))
        S = SymbolicCluster(zz2_module, families=[fan])
        ok, witness = is_locally_finite(S)
        assert not ok
        assert witness == SymbolicPoint(0, 0)


class TestPairwiseCompatibility:
    """Sampled windows of represented arcs never cross, and the crossing
    pattern for tail indices i0..i0+3 repeats under translation."""

    @pytest.mark.parametrize("builder", ["zigzag", "constructed"])
    def test_windowed_arcs_pairwise_noncrossing(self, zz2_module, builder):
        S = (straight_zigzag(zz2_module) if builder == "zigzag"
             else construct_triangulation_cluster(zz2_module))
        order = S.poset.carrier.order
        arcs = S.windowed_arcs(50)
        for a, b in itertools.combinations(arcs, 2):
            assert not order.arcs_cross(a, b), (a, b)

    def test_certificates_from_validate(self, zz2_module):
        S = construct_triangulation_cluster(zz2_module)
        assert validate_symbolic(S, window=12)["certificates_ok"]


class TestFanFamilies:
    def test_line_signature_ignores_presentation(self, zz2_module):
        f = FanFamily(SymbolicPoint(0, 0), Tail(1, 0, +1))
        g = f.advanced(3)
        assert f.line_signature() == g.line_signature()

    def test_same_cluster_after_reindexing(self, zigzag):
        """Moving a family's first arcs into the explicit list is invisible."""
        fam = zigzag.families[0]
        heads = [fam.arc(0), fam.arc(1)]
        others = [f for f in zigzag.families if f is not fam]
        shifted = SymbolicCluster(
            zigzag.poset,
            arcs=list(zigzag.arcs) + heads,
            families=others + [fam.advanced(2)],
        )
        assert zigzag.same_cluster(shifted)

    def test_limit_pair_and_fixed_endpoint(self):
        f = FanFamily(SymbolicPoint(0, 3), Tail(1, 0, +1))
        assert f.fixed_endpoint == SymbolicPoint(0, 3)
        assert f.limit_pair(2) is None
        # a -1 tail in interval 0 and a +1 tail in interval 1 converge to the
        # same limit point 0 from opposite sides
        g = FanFamily(Tail(0, 0, -1), Tail(1, 0, +1))
        assert g.limit_pair(2) == (0, 0)
        h = FanFamily(Tail(0, 0, +1), Tail(1, 0, +1))
        assert h.limit_pair(2) == (0, 1)

    def test_two_sided_family_from_tails(self):
        f = FanFamily(Tail(0, 0, -1), Tail(1, 0, +1))
        assert f.fixed_endpoint is None
        a0 = f.arc(0)
        assert {p.limit for p in a0} == {0, 1}


class TestGrid:
    """Arcs joining the two intervals form a grid; G(a,b) and G(c,d) cross
    exactly when a-c and b-d share a strict sign."""

    def test_same_sign_crossing_rule(self, zz2_module):
        order = zz2_module.carrier.order
        rng = range(-3, 4)
        for a in rng:
            for b in rng:
                for c in rng:
                    for d in rng:
                        crossing = order.arcs_cross(_g_arc(a, b), _g_arc(c, d))
                        assert crossing == ((a - c) * (b - d) > 0), \
                            ((a, b), (c, d))

    def test_staircase_corners_build_triangulations(self, zz2_module):
        S = build_zigzag_cluster(zz2_module, [(0, 0), (1, 0), (1, -1)])
        assert is_triangulation_cluster(S)
        assert validate_symbolic(S)["pairwise_ok"]

    def test_non_staircase_refused(self, zz2_module):
        with pytest.raises(MalformedZigzag):
            build_zigzag_cluster(zz2_module, [(0, 0), (1, 1)])
        with pytest.raises(MalformedZigzag):
            build_zigzag_cluster(zz2_module, [])


class TestMutation:
    def test_explicit_arc_flip_is_involutive(self, zigzag):
        arc = next(iter(zigzag.arcs))
        once = mutate_symbolic(zigzag, arc)
        assert not zigzag.same_cluster(once)
        added = set(once.arcs) - set(zigzag.arcs)
        assert len(added) == 1
        back = mutate_symbolic(once, next(iter(added)))
        assert back.same_cluster(zigzag)

    def test_family_head_flip_is_involutive(self, zigzag):
        fam = zigzag.families[0]
        head = fam.arc(0)
        once = mutate_symbolic(zigzag, head)
        added = set(once.arcs) - set(zigzag.arcs)
        assert len(added) == 1
        back = mutate_symbolic(once, next(iter(added)))
        assert back.same_cluster(zigzag)

    def test_deep_tail_arc_refused(self, zigzag):
        fam = zigzag.families[0]
        with pytest.raises(MutationInsideTail):
            mutate_symbolic(zigzag, fam.arc(3))

    def test_unknown_arc_refused(self, zigzag, zz2_module):
        stranger = (SymbolicPoint(0, 40), SymbolicPoint(1, 41))
        with pytest.raises(NotInCluster):
            mutate_symbolic(zigzag, stranger)


class TestARQuiver:
    def test_same_interval_component_is_half_plane(self, zz2_module):
        c = ar_component(zz2_module, (SymbolicPoint(0, 0), SymbolicPoint(0, 5)))
        assert c.kind == "ZA_inf"
        assert c.intervals == (0, 0)

    def test_cross_interval_component_is_full_plane(self, zz2_module):
        c = ar_component(zz2_module, (SymbolicPoint(0, 0), SymbolicPoint(1, 2)))
        assert c.kind == "ZA_inf_inf"
        assert c.intervals == (0, 1)

    def test_neighbor_counts_match_component_shape(self, zz2_module):
        interior = (SymbolicPoint(0, 0), SymbolicPoint(0, 5))
        nb = ar_neighbors(zz2_module, interior)
        assert len(nb["incoming"]) == 2 and len(nb["outgoing"]) == 2

        boundary = (SymbolicPoint(0, 0), SymbolicPoint(0, 2))
        nb = ar_neighbors(zz2_module, boundary)
        assert len(nb["incoming"]) == 1 and len(nb["outgoing"]) == 1

        cross = (SymbolicPoint(0, 0), SymbolicPoint(1, 7))
        nb = ar_neighbors(zz2_module, cross)
        assert len(nb["incoming"]) == 2 and len(nb["outgoing"]) == 2


class TestComplexK:
    def test_triangulation_clusters_are_disks(self, zigzag, zz2_module):
        assert euler_characteristic(complex_K(zigzag)) == 1
        t = construct_triangulation_cluster(zz2_module)
        assert euler_characteristic(complex_K(t)) == 1

    def test_nested_cluster_splits_into_two_disks(self, nested):
        assert euler_characteristic(complex_K(nested)) == 2

    def test_chi_is_window_stable(self, zigzag):
        assert euler_characteristic(complex_K(zigzag, window=12)) == \
            euler_characteristic(complex_K(zigzag, window=24))


class TestFiniteIntersections:
    def test_nonadjacent_interval_pairs_are_rare(self):
        """S meets C_{xy} in finitely many arcs when the closures of the two
        intervals are disjoint; adjacent pairs keep growing with the window."""
        poset = star_product(4)
        S = construct_triangulation_cluster(poset)

        def split(window):
            far, near = [], []
            for a in S.windowed_arcs(window):
                pair = {p.limit for p in a}
                (far if pair in ({0, 2}, {1, 3}) else near).append(a)
            return far, near

        far30, near30 = split(30)
        far60, near60 = split(60)
        assert len(far60) == len(far30)
        assert len(near60) > len(near30)
