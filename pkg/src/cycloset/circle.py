"""Points on the oriented circle and exact order predicates.

Three kinds of points coexist:

* ``RationalPoint`` -- an exact angle, stored in turns as a ``Fraction`` in
  [0, 1).
* ``OrbitPoint`` -- index ``i`` in an ``n``-element evenly spaced carrier,
  equivalent to the rational angle i/n but kept as an index so carriers of
  Z_n type round-trip through descriptors unchanged.
* ``SymbolicPoint`` -- position ``pos`` (an integer, any sign) inside the
  open interval between limit point ``limit`` and the next limit point of an
  ambient dense carrier.  The interval is a copy of Z ordered by ``pos``;
  pos -> -inf approaches the lower limit point, pos -> +inf the upper one.

Order predicates are exact: rationals compare as fractions, symbolic points
compare lexicographically by (interval, pos), and a rational compares with a
symbolic point exactly whenever the rational does not fall strictly inside
that symbolic point's interval.  The remaining mixed case has no exact
decision procedure without evaluating tan at a rational angle, and nothing
in the supported carriers produces it, so it raises ``MixedOrderUndecidable``
rather than fall back to floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "RationalPoint",
    "OrbitPoint",
    "SymbolicPoint",
    "CirclePoint",
    "MixedOrderUndecidable",
    "DuplicatePoint",
    "CircleOrder",
    "cyclic_order",
    "sort_ccw",
]


class MixedOrderUndecidable(Exception):
    """Raised when a rational angle falls strictly inside a symbolic interval."""


class DuplicatePoint(ValueError):
    """Raised when a strict cyclic-order query receives coincident points."""


@dataclass(frozen=True, order=True)
class RationalPoint:
    turns: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "turns", Fraction(self.turns) % 1)

    def __repr__(self) -> str:
        return f"pt({self.turns})"


@dataclass(frozen=True, order=True)
class OrbitPoint:
    index: int
    n: int

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise ValueError("orbit size must be positive")
        object.__setattr__(self, "index", self.index % self.n)

    @property
    def turns(self) -> Fraction:
        return Fraction(self.index, self.n)

    def __repr__(self) -> str:
        return f"z{self.n}[{self.index}]"


@dataclass(frozen=True, order=True)
class SymbolicPoint:
    limit: int
    pos: int

    def __repr__(self) -> str:
        return f"sym({self.limit},{self.pos})"


CirclePoint = Union[RationalPoint, OrbitPoint, SymbolicPoint]


def _as_turns(p: CirclePoint) -> Fraction | None:
    if isinstance(p, RationalPoint):
        return p.turns
    if isinstance(p, OrbitPoint):
        return p.turns
    return None


class CircleOrder:
    """Exact cyclic-order predicates over a family of circle points.

    ``limits`` gives the rational angles of the limit points bounding the
    symbolic intervals; interval ``k`` is the open arc (limits[k],
    limits[k+1 mod m]).  Carriers without symbolic points may omit it.
    """

    def __init__(self, limits: Sequence[Fraction] | None = None):
        if limits is not None:
            limits = [Fraction(v) % 1 for v in limits]
            if sorted(limits) != list(limits) or len(set(limits)) != len(limits):
                raise ValueError("limit angles must be strictly increasing in [0,1)")
            if len(limits) < 1:
                raise ValueError("need at least one limit point")
        self.limits = limits

    # -- linearized keys ---------------------------------------------------
    #
    # The linear cut sits at limits[0] (or at angle 0 when there are no
    # limits), so no symbolic interval wraps around the cut and every point
    # has a well defined position on [0, 1).

    def _cut(self) -> Fraction:
        return self.limits[0] if self.limits is not None else Fraction(0)

    def _rel(self, t: Fraction) -> Fraction:
        return (t - self._cut()) % 1

    def cmp(self, a: CirclePoint, b: CirclePoint) -> int:
        """Compare by angle ccw from the cut. Returns -1, 0, or +1."""
        ta, tb = _as_turns(a), _as_turns(b)
        if ta is not None and tb is not None:
            ra, rb = self._rel(ta), self._rel(tb)
            return (ra > rb) - (ra < rb)
        if isinstance(a, SymbolicPoint) and isinstance(b, SymbolicPoint):
            if a.limit == b.limit:
                return (a.pos > b.pos) - (a.pos < b.pos)
            if self.limits is None:
                return (a.limit > b.limit) - (a.limit < b.limit)
            m = len(self.limits)
            ka = self._rel(self.limits[a.limit % m])
            kb = self._rel(self.limits[b.limit % m])
            return (ka > kb) - (ka < kb)
        if isinstance(a, SymbolicPoint):
            return -self.cmp(b, a)
        assert ta is not None and isinstance(b, SymbolicPoint)
        if self.limits is None:
            raise MixedOrderUndecidable("no limit angles attached to this order")
        m = len(self.limits)
        lo = self._rel(self.limits[b.limit % m])
        hi = self._rel(self.limits[(b.limit + 1) % m])
        if hi <= lo:
            hi = Fraction(1)
        ra = self._rel(ta)
        if ra <= lo:
            return -1
        if ra >= hi:
            return 1
        raise MixedOrderUndecidable(
            f"rational angle {ta} lies strictly inside symbolic interval {b.limit}"
        )

    def eq(self, a: CirclePoint, b: CirclePoint) -> bool:
        ta, tb = _as_turns(a), _as_turns(b)
        if ta is not None and tb is not None:
            return ta == tb
        if isinstance(a, SymbolicPoint) and isinstance(b, SymbolicPoint):
            return a.limit == b.limit and a.pos == b.pos
        return False  # a symbolic point never sits at a rational angle

    # -- cyclic predicates -------------------------------------------------

    def cyclic(self, a: CirclePoint, b: CirclePoint, c: CirclePoint) -> bool:
        """True iff the three points are distinct and in strict ccw order."""
        if self.eq(a, b) or self.eq(b, c) or self.eq(a, c):
            return False
        ab, bc, ca = self.cmp(a, b), self.cmp(b, c), self.cmp(c, a)
        # strict ccw order holds iff at most one descent around the cycle
        return (ab < 0) + (bc < 0) + (ca < 0) >= 2

    def in_open_arc(self, x: CirclePoint, a: CirclePoint, b: CirclePoint) -> bool:
        """True iff x lies strictly inside the ccw arc from a to b."""
        return self.cyclic(a, x, b)

    def winding(self, x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
        """Winding cocycle: 1 iff walking x -> y -> z ccw completes the circle."""
        if self.eq(x, y) or self.eq(y, z):
            return 0
        if self.eq(x, z):
            return 1
        return 0 if self.cyclic(x, y, z) else 1

    def arcs_cross(
        self,
        arc1: tuple[CirclePoint, CirclePoint],
        arc2: tuple[CirclePoint, CirclePoint],
        mode: str = "open",
    ) -> bool:
        """Whether two geodesic chords intersect on their interiors."""
        if mode not in ("open", "closed"):
            raise ValueError("mode must be open or closed")
        a, b = arc1
        c, d = arc2
        if self.eq(a, b) or self.eq(c, d):
            return False
        # Crossing counts interior intersections only; two geodesics that
        # meet at a shared boundary point are noncrossing in both modes.
        shared = any(self.eq(u, v) for u in (a, b) for v in (c, d))
        if shared:
            return False
        return self.cyclic(a, c, b) != self.cyclic(a, d, b)

    # -- float placement (rendering only, never used in predicates) --------

    def _interval_bounds(self, k: int) -> tuple[Fraction, Fraction]:
        m = len(self.limits)
        return self.limits[k % m], self.limits[(k + 1) % m]

    def angle_float(self, p: CirclePoint) -> float:
        t = _as_turns(p)
        if t is not None:
            return float(t) * 2 * math.pi
        assert isinstance(p, SymbolicPoint)
        if self.limits is None:
            raise ValueError("symbolic placement needs limit angles")
        lo, hi = self._interval_bounds(p.limit)
        width = float(hi - lo) % 1.0
        if width == 0.0:
            width = 1.0
        frac = 0.5 + math.atan(p.pos) / math.pi
        return (float(lo) + width * frac) * 2 * math.pi


def cyclic_order(
    order: CircleOrder, a: CirclePoint, b: CirclePoint, c: CirclePoint
) -> bool:
    """Strict ccw predicate: true iff b lies in the open ccw arc from a to c.

    Unlike ``CircleOrder.cyclic`` this refuses coincident points, so callers
    get a loud error instead of a silent false on degenerate input.
    """
    if order.eq(a, b) or order.eq(b, c) or order.eq(a, c):
        raise DuplicatePoint("cyclic_order needs three distinct points")
    return order.cyclic(a, b, c)


def sort_ccw(order: CircleOrder, pts: Iterable[CirclePoint]) -> list[CirclePoint]:
    """Sort points ccw starting from the 0-turn cut."""
    import functools

    return sorted(pts, key=functools.cmp_to_key(order.cmp))
