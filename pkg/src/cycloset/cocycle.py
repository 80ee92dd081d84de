"""Cocycle providers and validation.

A (reduced) cocycle assigns a natural number c(x,y,z) to every triple of
carrier points subject to

    dc(w,x,y,z) = c(x,y,z) - c(w,y,z) + c(w,x,z) - c(w,x,y) = 0
    c(x,x,y) = c(x,y,y) = 0.

Three providers cover every carrier we support: an explicit table on a
finite carrier, the winding cocycle of circle points (1 exactly when the
ccw walk x -> y -> z completes the circle), and the cactus modification
of a winding cocycle by a noncrossing equivalence (see cactus.py).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from .circle import CircleOrder, CirclePoint

__all__ = [
    "WindingCocycle",
    "TableCocycle",
    "FunctionCocycle",
    "CocycleReport",
    "validate_cocycle_on",
]


class WindingCocycle:
    """Winding cocycle of a circle order; values in {0, 1}."""

    kind = "winding"

    def __init__(self, order: CircleOrder):
        self.order = order

    def __call__(self, x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
        return self.order.winding(x, y, z)


class FunctionCocycle:
    """Wrap an arbitrary triple function as a provider."""

    kind = "function"

    def __init__(self, fn: Callable[[Hashable, Hashable, Hashable], int], label: str = "function"):
        self.fn = fn
        self.label = label

    def __call__(self, x, y, z) -> int:
        return self.fn(x, y, z)


class TableCocycle:
    """Explicit cocycle table on a finite carrier.

    Only triples of pairwise distinct points need to be stored.  Repeated
    arguments are derived: c(x,x,y) = c(x,y,y) = 0 by reducedness, and for a
    carrier with a third point z the return values come out of the cocycle
    identity as c(x,y,x) = c(x,y,z) + c(y,x,z).  Explicit entries, when
    present, win (validation flags them if they break reducedness).
    """

    kind = "table"

    def __init__(self, points: Sequence[Hashable], entries: Mapping[tuple, int]):
        self.points = list(points)
        self._index = {p: i for i, p in enumerate(self.points)}
        self.entries = dict(entries)

    def missing_triples(self) -> list[tuple]:
        missing = []
        for t in product(self.points, repeat=3):
            x, y, z = t
            if x != y and y != z and x != z and t not in self.entries:
                missing.append(t)
        return missing

    def __call__(self, x, y, z) -> int:
        t = (x, y, z)
        if t in self.entries:
            return self.entries[t]
        if x == y or y == z:
            return 0
        if x == z:
            for w in self.points:
                if w != x and w != y:
                    return self(x, y, w) + self(y, x, w)
            raise KeyError(f"c{t} not stored and not derivable on a 2-point carrier")
        raise KeyError(f"missing cocycle entry for {t}")


@dataclass
class CocycleReport:
    valid: bool
    violations: list[dict] = field(default_factory=list)

    def add(self, kind: str, witness, detail: str) -> None:
        self.valid = False
        self.violations.append({"kind": kind, "witness": witness, "detail": detail})

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                {**v, "witness": [repr(w) for w in v["witness"]]} for v in self.violations
            ],
        }


def validate_cocycle_on(
    cocycle, points: Sequence, max_violations: int = 20
) -> CocycleReport:
    """Check naturality, reducedness, and the cocycle identity on a window.

    For table providers, missing distinct-triple entries are reported before
    anything else.  The quadruple sweep is O(n^4); callers pass a window when
    the carrier is infinite.
    """
    report = CocycleReport(valid=True)
    pts = list(points)

    if isinstance(cocycle, TableCocycle):
        for t in cocycle.missing_triples():
            report.add("missing-entry", t, "distinct triple absent from table")
            if len(report.violations) >= max_violations:
                return report
        for t, v in cocycle.entries.items():
            x, y, z = t
            if (x == y or y == z) and v != 0:
                report.add("not-reduced", t, f"c{t} = {v}, repeated-argument triples must vanish")
                if len(report.violations) >= max_violations:
                    return report

    # materialize the window into a dense array so the O(n^4) identity sweep
    # runs vectorized instead of through 4 provider calls per quadruple
    n = len(pts)
    c = np.empty((n, n, n), dtype=np.int64)
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            for k, z in enumerate(pts):
                c[i, j, k] = cocycle(x, y, z)

    for i in range(n):
        for j in range(n):
            if c[i, i, j] != 0:
                report.add("not-reduced", (pts[i], pts[i], pts[j]), f"c = {c[i, i, j]}")
            if c[i, j, j] != 0:
                report.add("not-reduced", (pts[i], pts[j], pts[j]), f"c = {c[i, j, j]}")
            if len(report.violations) >= max_violations:
                return report

    neg = np.argwhere(c < 0)
    for i, j, k in neg[:max_violations]:
        report.add("negative-value", (pts[i], pts[j], pts[k]), f"c = {c[i, j, k]}")
    if len(report.violations) >= max_violations:
        return report

    d = c[None, :, :, :] - c[:, None, :, :] + c[:, :, None, :] - c[:, :, :, None]
    bad = np.argwhere(d != 0)
    for w, x, y, z in bad[: max_violations - len(report.violations)]:
        report.add(
            "cocycle-identity",
            (pts[w], pts[x], pts[y], pts[z]),
            f"dc = {d[w, x, y, z]}",
        )
    return report
