"""Poincare-disk SVG rendering of arc diagrams.

Geodesics are drawn as circular arcs meeting the unit circle at right
angles; antipodal endpoints get a diameter.  All float formatting is fixed
width and arcs are emitted in sorted order, so equal inputs produce equal
bytes.  The exact predicates elsewhere never read these coordinates.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping

from .poset import CyclicPoset

__all__ = ["render_diagram"]

_STYLE = (
    "circle.boundary{fill:none;stroke:#222;stroke-width:0.012}"
    "circle.mark{fill:#222;stroke:none}"
    "circle.limit{fill:#c22;stroke:none}"
    "path.arc{fill:none;stroke:#1a4a8a;stroke-width:0.014}"
    "path.frozen{fill:none;stroke:#888;stroke-width:0.014}"
    "path.mutated{fill:none;stroke:#c22;stroke-width:0.02}"
    "path.family{fill:none;stroke:#2a7;stroke-width:0.01;stroke-dasharray:0.03 0.02}"
)


def _f(v: float) -> str:
    out = f"{v:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _xy(theta: float) -> tuple[float, float]:
    return math.cos(theta), math.sin(theta)


def _geodesic_path(t1: float, t2: float) -> str:
    x1, y1 = _xy(t1)
    x2, y2 = _xy(t2)
    dot = x1 * x2 + y1 * y2
    if dot < -1 + 1e-9:
        # antipodal: the geodesic is a diameter
        return f"M {_f(x1)} {_f(y1)} L {_f(x2)} {_f(y2)}"
    # center of the circle through both points orthogonal to the unit circle
    cx, cy = (x1 + x2) / (1 + dot), (y1 + y2) / (1 + dot)
    r = math.hypot(x1 - cx, y1 - cy)
    cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx)
    sweep = 1 if cross > 0 else 0
    return f"M {_f(x1)} {_f(y1)} A {_f(r)} {_f(r)} 0 0 {sweep} {_f(x2)} {_f(y2)}"


def render_diagram(
    poset: CyclicPoset,
    arcs: Iterable[tuple] | None = None,
    cluster=None,
    highlights: Mapping | None = None,
    window: int = 6,
) -> str:
    """SVG document for an arc diagram on the poset's carrier.

    ``arcs`` is an iterable of endpoint pairs; alternatively pass a symbolic
    ``cluster`` whose fan families are expanded within ``window`` and styled
    with the "family" class.  ``highlights`` maps an endpoint pair to a
    class name ("frozen" or "mutated").
    """
    from .descriptors import point_to_json

    order = poset.order
    hl = {}
    for pair, cls in (highlights or {}).items():
        hl[frozenset(pair)] = cls

    entries: list[tuple] = []

    def add(a, b, default_cls):
        cls = hl.get(frozenset((a, b)), default_cls)
        path = _geodesic_path(order.angle_float(a), order.angle_float(b))
        # canonical endpoint order keeps bytes equal under arc reversal
        ends = sorted(
            (point_to_json(poset, p) for p in (a, b)),
            key=lambda v: json.dumps(v, sort_keys=True),
        )
        ident = json.dumps(ends, sort_keys=True, separators=(",", ":"))
        entries.append((cls, path, ident))

    marks: set = set()
    if arcs is not None:
        for a, b in arcs:
            add(a, b, "arc")
            marks.update((a, b))
    if cluster is not None:
        explicit = set(cluster.arcs)
        for a, b in explicit:
            add(a, b, "arc")
            marks.update((a, b))
        for a, b in cluster.windowed_arcs(window):
            pair = (a, b)
            if pair in explicit or (b, a) in explicit:
                continue
            add(a, b, "family")
            marks.update((a, b))

    if poset.carrier.finite:
        marks.update(poset.carrier.window())
        limit_marks = []
    else:
        limit_marks = list(poset.carrier.limits)

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="-1.1 -1.1 2.2 2.2">',
        f"<style>{_STYLE}</style>",
        '<circle class="boundary" cx="0" cy="0" r="1"/>',
    ]
    for cls, path, ident in sorted(entries, key=lambda e: (e[0], e[1])):
        lines.append(f'<path class="{cls}" d="{path}" data-arc=\'{ident}\'/>')
    mark_cmds = []
    for p in marks:
        x, y = _xy(order.angle_float(p))
        mark_cmds.append(f'<circle class="mark" cx="{_f(x)}" cy="{_f(y)}" r="0.022"/>')
    for t in limit_marks:
        x, y = _xy(float(t) * 2 * math.pi)
        mark_cmds.append(f'<circle class="limit" cx="{_f(x)}" cy="{_f(y)}" r="0.016"/>')
    lines.extend(sorted(mark_cmds))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
