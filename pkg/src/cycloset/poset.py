"""Cyclic posets: carriers, automorphisms, and the covering Z-poset.

A cyclic poset is a carrier with a reduced cocycle.  The covering poset is
the carrier times Z with (x,m) <= (y,n) iff n - m >= b(x,y), where the
b-function comes from the cocycle through the designated basepoint x0 (the
first carrier point): b(y,z) := c(x0,y,z).  The cocycle identity then gives
b(x,y) + b(y,z) - b(x,z) = c(x,y,z), so the covering determines the cocycle
and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .circle import (
    CircleOrder,
    CirclePoint,
    OrbitPoint,
    RationalPoint,
    SymbolicPoint,
)
from .cocycle import TableCocycle, WindingCocycle, validate_cocycle_on

__all__ = [
    "Identity",
    "CanonicalSuccessor",
    "RotationBy",
    "InadmissibleRotation",
    "CyclicPoset",
    "zn_poset",
    "angles_poset",
    "star_product",
    "table_poset",
    "CoveringPoset",
    "build_covering",
    "check_covering_axioms",
    "is_nondegenerate",
    "check_zposet_star",
    "b_function",
    "cocycle_from_b",
]


# --------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class Identity:
    kind = "id"


@dataclass(frozen=True)
class CanonicalSuccessor:
    kind = "canonical"


class InadmissibleRotation(ValueError):
    pass


@dataclass(frozen=True)
class RotationBy:
    step: Fraction
    kind = "rotation"

    def __post_init__(self) -> None:
        object.__setattr__(self, "step", Fraction(self.step))
        if not (0 < self.step < Fraction(1, 2)):
            raise InadmissibleRotation(
                f"rotation step must lie strictly between 0 and 1/2 turn, got {self.step}"
            )


Automorphism = Identity | CanonicalSuccessor | RotationBy


# --------------------------------------------------------------------------
# carriers


class FiniteCarrier:
    """Finite list of circle points stored ccw from the basepoint."""

    finite = True

    def __init__(self, points: Sequence[CirclePoint], order: CircleOrder):
        from .circle import sort_ccw

        pts = sort_ccw(order, points)
        for a, b in zip(pts, pts[1:]):
            if order.eq(a, b):
                raise ValueError(f"duplicate carrier point {a}")
        self.points = pts
        self.order = order
        self._idx = {p: i for i, p in enumerate(pts)}

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: CirclePoint) -> bool:
        return p in self._idx

    def index(self, p: CirclePoint) -> int:
        return self._idx[p]

    def successor(self, p: CirclePoint) -> CirclePoint:
        return self.points[(self._idx[p] + 1) % len(self.points)]

    def predecessor(self, p: CirclePoint) -> CirclePoint:
        return self.points[(self._idx[p] - 1) % len(self.points)]

    def window(self, radius: int | None = None) -> list[CirclePoint]:
        return list(self.points)


class SymbolicCarrier:
    """The dense carrier with a copy of Z inserted between consecutive limits."""

    finite = False

    def __init__(self, limits: Sequence[Fraction]):
        self.limits = [Fraction(v) % 1 for v in limits]
        if sorted(self.limits) != self.limits:
            raise ValueError("limit angles must be listed ccw from the basepoint cut")
        self.order = CircleOrder(self.limits)

    def __len__(self) -> int:
        raise TypeError("symbolic carrier is infinite; use window()")

    def __contains__(self, p: CirclePoint) -> bool:
        return isinstance(p, SymbolicPoint) and 0 <= p.limit < len(self.limits)

    @property
    def num_limits(self) -> int:
        return len(self.limits)

    def successor(self, p: CirclePoint) -> CirclePoint:
        if not isinstance(p, SymbolicPoint):
            raise TypeError(f"not a symbolic point: {p}")
        return SymbolicPoint(p.limit, p.pos + 1)

    def predecessor(self, p: CirclePoint) -> CirclePoint:
        if not isinstance(p, SymbolicPoint):
            raise TypeError(f"not a symbolic point: {p}")
        return SymbolicPoint(p.limit, p.pos - 1)

    def window(self, radius: int = 3) -> list[SymbolicPoint]:
        return [
            SymbolicPoint(w, n)
            for w in range(len(self.limits))
            for n in range(-radius, radius + 1)
        ]


class AbstractCarrier:
    """Finite carrier of opaque labels with no circle geometry (table posets)."""

    finite = True

    def __init__(self, labels: Sequence[Hashable]):
        self.points = list(labels)
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate carrier labels")
        self._idx = {p: i for i, p in enumerate(self.points)}
        self.order = None

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return p in self._idx

    def index(self, p) -> int:
        return self._idx[p]

    def successor(self, p):
        return self.points[(self._idx[p] + 1) % len(self.points)]

    def predecessor(self, p):
        return self.points[(self._idx[p] - 1) % len(self.points)]

    def window(self, radius: int | None = None):
        return list(self.points)


# --------------------------------------------------------------------------
# the poset itself


class CyclicPoset:
    def __init__(self, carrier, cocycle, automorphism: Automorphism, name: str = ""):
        self.carrier = carrier
        self.cocycle = cocycle
        self.automorphism = automorphism
        self.name = name or "poset"
        if isinstance(automorphism, RotationBy) and carrier.order is not None:
            self._check_rotation_closure()

    def _check_rotation_closure(self) -> None:
        if not self.carrier.finite:
            raise InadmissibleRotation("rotations are only supported on finite carriers")
        step = self.automorphism.step
        for p in self.carrier.window():
            if self._rotate(p, step) not in self.carrier:
                raise InadmissibleRotation(
                    f"rotation by {step} does not map the carrier to itself ({p})"
                )

    @staticmethod
    def _rotate(p: CirclePoint, step: Fraction) -> CirclePoint:
        if isinstance(p, OrbitPoint):
            shift = step * p.n
            if shift.denominator != 1:
                raise InadmissibleRotation(
                    f"rotation step {step} is not a multiple of 1/{p.n}"
                )
            return OrbitPoint(p.index + int(shift), p.n)
        if isinstance(p, RationalPoint):
            return RationalPoint(p.turns + step)
        raise InadmissibleRotation("cannot rotate symbolic points rationally")

    # -- basic structure ----------------------------------------------------

    @property
    def order(self) -> CircleOrder | None:
        return self.carrier.order

    def c(self, x, y, z) -> int:
        return self.cocycle(x, y, z)

    def succ(self, p):
        return self.carrier.successor(p)

    def pred(self, p):
        return self.carrier.predecessor(p)

    def phi(self, p):
        a = self.automorphism
        if isinstance(a, Identity):
            return p
        if isinstance(a, CanonicalSuccessor):
            return self.succ(p)
        return self._rotate(p, a.step)

    def phi_inv(self, p):
        a = self.automorphism
        if isinstance(a, Identity):
            return p
        if isinstance(a, CanonicalSuccessor):
            return self.pred(p)
        return self._rotate(p, -a.step % 1)

    def window(self, radius: int = 3):
        return self.carrier.window(radius)

    @property
    def basepoint(self):
        if self.carrier.finite:
            return self.carrier.points[0]
        return SymbolicPoint(0, 0)

    def b(self, x, y) -> int:
        """Level jump of the covering order, b(x,y) = c(x0, x, y)."""
        return self.c(self.basepoint, x, y)

    def validate(self, radius: int = 3, max_violations: int = 20):
        return validate_cocycle_on(self.cocycle, self.window(radius), max_violations)

    def __repr__(self) -> str:
        return f"CyclicPoset({self.name}, auto={self.automorphism.kind})"


# --------------------------------------------------------------------------
# constructors


def _make_auto(auto) -> Automorphism:
    if isinstance(auto, (Identity, CanonicalSuccessor, RotationBy)):
        return auto
    if auto in ("id", "identity", None):
        return Identity()
    if auto in ("canonical", "can", "successor"):
        return CanonicalSuccessor()
    return RotationBy(Fraction(auto))


def zn_poset(n: int, auto="canonical") -> CyclicPoset:
    """Z_n: n evenly spaced points with the winding cocycle."""
    if n < 1:
        raise ValueError("n must be positive")
    order = CircleOrder()
    carrier = FiniteCarrier([OrbitPoint(i, n) for i in range(n)], order)
    return CyclicPoset(carrier, WindingCocycle(order), _make_auto(auto), name=f"zn:{n}")


def angles_poset(turns: Iterable, auto="id") -> CyclicPoset:
    """Finite carrier at explicit rational angles (in turns)."""
    order = CircleOrder()
    pts = [RationalPoint(Fraction(t)) for t in turns]
    carrier = FiniteCarrier(pts, order)
    return CyclicPoset(carrier, WindingCocycle(order), _make_auto(auto), name="angles")


def star_product(limits, auto="canonical") -> CyclicPoset:
    """Insert a copy of Z into every gap of the limit set (the dense carrier).

    ``limits`` is either the number of evenly spaced limit points or their
    rational angles.  Points are SymbolicPoint(w, n); n -> +inf approaches
    the next limit point ccw, n -> -inf the limit point w itself.
    """
    if isinstance(limits, int):
        limits = [Fraction(k, limits) for k in range(limits)]
    carrier = SymbolicCarrier([Fraction(v) for v in limits])
    return CyclicPoset(
        carrier,
        WindingCocycle(carrier.order),
        _make_auto(auto),
        name=f"z_zinfty:{carrier.num_limits}",
    )


def table_poset(labels: Sequence[Hashable], entries, auto="id") -> CyclicPoset:
    carrier = AbstractCarrier(labels)
    return CyclicPoset(carrier, TableCocycle(labels, entries), _make_auto(auto), name="table")


# --------------------------------------------------------------------------
# b-function round trip


def b_function(poset: CyclicPoset) -> dict:
    """Tabulate b on the carrier window (finite carriers only)."""
    pts = poset.window()
    return {(x, y): poset.b(x, y) for x in pts for y in pts}


def cocycle_from_b(points: Sequence[Hashable], b: dict) -> TableCocycle:
    """Reconstruct the cocycle table c(x,y,z) = b(x,y) + b(y,z) - b(x,z)."""
    entries = {}
    for x in points:
        for y in points:
            for z in points:
                if x != y and y != z and x != z:
                    entries[(x, y, z)] = b[(x, y)] + b[(y, z)] - b[(x, z)]
    return TableCocycle(points, entries)


# --------------------------------------------------------------------------
# covering poset


class CoveringPoset:
    """Carrier x Z with (x,m) <= (y,n) iff n - m >= b(x,y)."""

    def __init__(self, poset: CyclicPoset, radius: int = 3):
        self.poset = poset
        self.base_points = poset.window(radius)
        self._b = {}
        for x in self.base_points:
            for y in self.base_points:
                self._b[(x, y)] = poset.b(x, y)

    def b(self, x, y) -> int:
        return self._b[(x, y)]

    def leq(self, a: tuple, bb: tuple) -> bool:
        (x, m), (y, n) = a, bb
        return n - m >= self.b(x, y)

    def lt(self, a: tuple, bb: tuple) -> bool:
        return self.leq(a, bb) and not (a == bb or self.leq(bb, a))

    def sigma(self, a: tuple, k: int = 1) -> tuple:
        x, m = a
        return (x, m + k)

    def elements(self, levels: Iterable[int]):
        return [(x, l) for x in self.base_points for l in levels]


def build_covering(poset: CyclicPoset, radius: int = 3) -> CoveringPoset:
    return CoveringPoset(poset, radius)


def check_covering_axioms(cov: CoveringPoset, levels: range = range(-2, 3)) -> dict:
    """Verify the covering is a cyclic Z-poset; returns a witness report.

    Checks: the order is reflexive, transitive, and translation invariant;
    each fiber is ordered as Z with sigma the least strictly greater element;
    and the two-sided cofinality condition x~ <= sigma^m y~ <= sigma^(m+n) x~
    holds with explicit witnesses (m, n) per base pair.
    """
    report = {"holds": True, "violations": [], "cofinality_witnesses": {}}

    def fail(kind, witness):
        report["holds"] = False
        report["violations"].append({"kind": kind, "witness": witness})

    pts = cov.base_points
    for x in pts:
        if cov.b(x, x) != 0:
            fail("fiber-order", (x, cov.b(x, x)))
    # transitivity of the level condition is b(x,y) + b(y,z) >= b(x,z),
    # which is the cocycle value c(x,y,z) >= 0
    for x in pts:
        for y in pts:
            for z in pts:
                if cov.b(x, y) + cov.b(y, z) < cov.b(x, z):
                    fail("transitivity", (x, y, z))
    # sigma is an order automorphism: the defining inequality only sees n - m,
    # so a spot check over the window suffices to guard the implementation
    for x in pts:
        for y in pts:
            for m in levels:
                for n in levels:
                    a, bb = (x, m), (y, n)
                    if cov.leq(a, bb) != cov.leq(cov.sigma(a), cov.sigma(bb)):
                        fail("sigma-not-automorphism", (a, bb))
    # sigma(x,m) is the least element of the fiber strictly above (x,m)
    for x in pts:
        a = (x, 0)
        if not cov.lt(a, cov.sigma(a)):
            fail("sigma-not-above", a)
    # cofinality: x~ <= sigma^m y~ and sigma^m y~ <= sigma^(m+n) x~
    for x in pts:
        for y in pts:
            m = cov.b(x, y)
            n = max(cov.b(y, x), 0)
            if not cov.leq((x, 0), (y, m)):
                fail("cofinality", (x, y))
            elif not cov.leq((y, m), (x, m + n)):
                fail("cofinality", (x, y))
            else:
                report["cofinality_witnesses"][(repr(x), repr(y))] = (m, n)
    return report


def is_nondegenerate(poset: CyclicPoset, radius: int = 3) -> tuple[bool, tuple | None]:
    """c(x,y,x) >= 1 for all x != y; equivalently the covering is antisymmetric.

    Returns (flag, witness); the witness is a pair ((x,0), (y,b(x,y))) of
    covering elements below each other when degenerate.
    """
    pts = poset.window(radius)
    for x in pts:
        for y in pts:
            if x == y:
                continue
            if poset.c(x, y, x) < 1:
                return False, ((x, 0), (y, poset.b(x, y)))
    return True, None


def check_zposet_star(cov: CoveringPoset, levels: range = range(-2, 3), span: int = 0) -> dict:
    """Property: for all a, b there is n with a < sigma^n(b), a not< sigma^(n-1)(b).

    Scans covering elements over the level window and reports the threshold n
    for each ordered pair, or a failure witness when no strict comparison is
    ever reached (degenerate posets).
    """
    if span <= 0:
        span = 2 * (max(abs(v) for v in cov._b.values()) + len(levels) + 2)
    report = {"holds": True, "thresholds": {}, "failures": []}
    elems = cov.elements(levels)
    for a in elems:
        for bb in elems:
            (x, m), (y, k) = a, bb
            base = cov.b(x, y) + m - k
            n = None
            for cand in range(base, base + span):
                if cov.lt(a, cov.sigma(bb, cand)):
                    n = cand
                    break
            if n is None:
                report["holds"] = False
                report["failures"].append({"a": repr(a), "b": repr(bb)})
                continue
            if cov.lt(a, cov.sigma(bb, n - 1)):
                report["holds"] = False
                report["failures"].append(
                    {"a": repr(a), "b": repr(bb), "detail": "threshold not minimal"}
                )
                continue
            report["thresholds"][(repr(a), repr(bb))] = n
    return report
