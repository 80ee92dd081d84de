"""Poincare-disk SVG output: geometry, styling hooks, determinism."""

import math

import pytest

from cycloset import star_product, zn_poset
from cycloset.circle import SymbolicPoint
from cycloset.render import render_diagram
from cycloset.symbolic import straight_zigzag


def _fan(poset):
    w = poset.carrier.window()
    return [(w[0], w[k]) for k in range(2, len(w) - 1)]


class TestBasics:
    def test_returns_svg_document(self, zn8):
        svg = render_diagram(zn8, arcs=_fan(zn8))
        assert svg.startswith("<svg")
        assert svg.rstrip().endswith("</svg>")
        assert 'viewBox="-1.1 -1.1 2.2 2.2"' in svg

    def test_fan_has_five_arcs_and_eight_marks(self, zn8):
        svg = render_diagram(zn8, arcs=_fan(zn8))
        assert svg.count('class="arc"') == 5
        assert svg.count('class="mark"') == 8

    def test_empty_diagram_is_just_the_boundary(self, zn8):
        svg = render_diagram(zn8, arcs=[])
        assert svg.count('class="boundary"') == 1
        assert 'class="arc"' not in svg

    def test_antipodal_arc_renders_as_line(self):
        poset = zn_poset(4)
        w = poset.carrier.window()
        svg = render_diagram(poset, arcs=[(w[0], w[2])])
        assert "<line" in svg or ('d="M' in svg and " L " in svg)
        assert " A " not in svg.split('class="arc"')[1].split("/>")[0]


class TestDeterminism:
    def test_byte_equal_under_reordering(self, zn8):
        arcs = _fan(zn8)
        assert render_diagram(zn8, arcs=arcs) == \
            render_diagram(zn8, arcs=list(reversed(arcs)))

    def test_byte_equal_across_calls(self):
        S = straight_zigzag()
        a = render_diagram(S.poset, cluster=S, window=4)
        b = render_diagram(S.poset, cluster=S, window=4)
        assert a == b

    def test_no_negative_zero_coordinates(self, zn8):
        svg = render_diagram(zn8, arcs=_fan(zn8))
        assert "-0.000000" not in svg


class TestHighlights:
    def test_highlight_class_applied(self, zn8):
        arcs = _fan(zn8)
        svg = render_diagram(zn8, arcs=arcs, highlights={arcs[0]: "mutated"})
        assert svg.count('class="mutated"') == 1
        assert svg.count('class="arc"') == len(arcs) - 1

    def test_frozen_class(self):
        poset = zn_poset(5, auto="id")
        w = poset.carrier.window()
        boundary = (w[0], w[1])
        svg = render_diagram(poset, arcs=[boundary],
                             highlights={boundary: "frozen"})
        assert svg.count('class="frozen"') == 1


class TestSymbolic:
    def test_cluster_mode_expands_families(self):
        S = straight_zigzag()
        svg = render_diagram(S.poset, cluster=S, window=4)
        assert svg.count('class="family"') == 16
        assert svg.count('class="arc"') == 1
        assert svg.count('class="limit"') == 2

    def test_limit_marks_sit_on_the_limit_angles(self):
        poset = star_product(2)
        svg = render_diagram(poset, arcs=[], cluster=None)
        assert svg.count('class="limit"') == 2

    def test_points_approach_their_limit(self):
        poset = star_product(2)
        order = poset.carrier.order
        near = order.angle_float(SymbolicPoint(0, 10**9))
        far = order.angle_float(SymbolicPoint(0, -10**9))
        # interval 0 covers angles (0, pi); deep tail ends pin to the ends
        assert math.isclose(far, 0.0, abs_tol=1e-6)
        assert math.isclose(near, math.pi, rel_tol=1e-6)
        mid = order.angle_float(SymbolicPoint(0, 0))
        assert math.isclose(mid, math.pi / 2, rel_tol=1e-9)
