"""Partial cyclic orders from bounded cocycles, and the inverse search.

A cocycle bounded by r whose round trips all equal r induces a partial
cyclic order: the set of triples where c attains the bound.  The converse
direction is a finite constraint search: given a candidate triple set on a
small ground set, find a reduced bounded cocycle realizing it exactly, or
certify that none exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .poset import CyclicPoset

__all__ = [
    "HypothesisViolated",
    "Timeout",
    "Infeasible",
    "PartialCyclicOrder",
    "pco_from_bounded_cocycle",
    "is_partial_cyclic_order",
    "search_bounded_cocycle",
    "delta_lin",
]


class HypothesisViolated(ValueError):
    def __init__(self, hypothesis: str, witness=None, message: str = ""):
        self.hypothesis = hypothesis
        self.witness = witness
        text = message or f"hypothesis {hypothesis} fails"
        if witness is not None:
            text += f" at {witness}"
        super().__init__(text)


class Timeout(RuntimeError):
    def __init__(self, explored: int):
        self.explored = explored
        super().__init__(f"search budget exceeded after {explored} nodes")


@dataclass(frozen=True)
class Infeasible:
    """Certificate of exhaustion: no table satisfies the constraints."""

    r_range: tuple[int, ...]
    explored: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class PartialCyclicOrder:
    elements: tuple
    triples: frozenset
    report: dict = field(compare=False, default_factory=dict)

    def __contains__(self, t) -> bool:
        return t in self.triples


def is_partial_cyclic_order(
    triples: Iterable[tuple], elements: Sequence[Hashable] | None = None
) -> tuple[bool, tuple | None]:
    """Axioms: rotation-closed (a), antisymmetric (b), transitive (c).

    Witness is (axiom_tag, offending tuple).
    """
    delta = set(tuple(t) for t in triples)
    for t in delta:
        if len(t) != 3 or len(set(t)) != 3:
            return (False, ("distinct", t))
    for x, y, z in delta:
        if (y, z, x) not in delta:
            return (False, ("a", (x, y, z)))
        if (x, z, y) in delta:
            return (False, ("b", (x, y, z)))
    by_head: dict = {}
    for x, y, z in delta:
        by_head.setdefault(x, []).append((y, z))
    for x, pairs in by_head.items():
        present = set(pairs)
        for (y, z), (z2, w) in itertools.product(pairs, pairs):
            if z == z2 and (y, w) not in present and y != w:
                return (False, ("c", (x, y, z, w)))
    return (True, None)


def pco_from_bounded_cocycle(poset: CyclicPoset, r: int) -> PartialCyclicOrder:
    """Triples where the bounded cocycle attains its bound r.

    Requires r >= 2, c <= r everywhere, and full round trips c(x,y,x) = r.
    The result is checked against the cyclic-order axioms, and the two
    structural identities (values of reverse triples summing to r; interior
    values strictly between the bounds) are recorded in the report.
    """
    if r < 2:
        raise HypothesisViolated("r >= 2", witness=r)
    if not poset.carrier.finite:
        raise TypeError("partial cyclic orders are extracted from finite carriers")
    pts = list(poset.carrier.window())
    for t in itertools.product(pts, repeat=3):
        if poset.c(*t) > r:
            raise HypothesisViolated("(1) c <= r", witness=t)
    for x, y in itertools.permutations(pts, 2):
        if poset.c(x, y, x) != r:
            raise HypothesisViolated("(2) c(x,y,x) = r", witness=(x, y))

    delta = frozenset(
        t for t in itertools.permutations(pts, 3) if poset.c(*t) == r
    )
    ok, witness = is_partial_cyclic_order(delta, pts)
    if not ok:
        raise AssertionError(f"axiom {witness[0]} failed at {witness[1]}")

    identity_i = True
    identity_ii = True
    wit_i = wit_ii = None
    for x, y, z in itertools.permutations(pts, 3):
        if poset.c(x, y, z) + poset.c(x, z, y) != r:
            identity_i, wit_i = False, (x, y, z)
        if (x, y, z) not in delta and (x, z, y) not in delta:
            v = poset.c(x, y, z)
            if not (0 < v < r):
                identity_ii, wit_ii = False, (x, y, z, v)
    report = {
        "identity_i": identity_i,
        "identity_i_witness": wit_i,
        "identity_ii": identity_ii,
        "identity_ii_witness": wit_ii,
        "r": r,
    }
    return PartialCyclicOrder(tuple(pts), delta, report)


def delta_lin(m: int, include_zero_triples: bool = False) -> frozenset:
    """Cyclically increasing triples on {0..m-1}.

    By default 0 stays incomparable: the order is the cyclic closure of the
    linear order on the positive elements only, which is the variant whose
    bounded realizations die by infinite descent.  With
    ``include_zero_triples`` the raw product rule (x-y)(y-z)(z-x) > 0 is
    applied to all triples, making the order complete; a complete cyclic
    order is realizable by a multiple of a winding cocycle, so the search
    finds a table in that case.
    """
    out = set()
    for t in itertools.permutations(range(m), 3):
        x, y, z = t
        if (x - y) * (y - z) * (z - x) > 0:
            if include_zero_triples or 0 not in t:
                out.add(t)
    return frozenset(out)


# --------------------------------------------------------------------------
# the constraint search


def _terms_of_quadruple(q: tuple) -> list[tuple[int, tuple]]:
    """Signed cocycle terms of the coboundary at quadruple (w,x,y,z)."""
    w, x, y, z = q
    return [
        (+1, (x, y, z)),
        (-1, (w, y, z)),
        (+1, (w, x, z)),
        (-1, (w, x, y)),
    ]


def search_bounded_cocycle(
    delta: Iterable[tuple],
    m: int,
    r_max: int = 3,
    value_cap: int = 3,
    budget: int = 2_000_000,
):
    """Exhaustive search for a reduced bounded cocycle realizing delta.

    Constraints: values in 0..value_cap, c <= r, full round trips equal r,
    the coboundary vanishes on every quadruple, and c(x,y,z) = r exactly on
    delta (over distinct triples).  Tries r = 2..r_max in order; the first
    table found wins.  Returns the table record or Infeasible; raises
    Timeout when the node budget runs out.
    """
    if m > 7:
        raise ValueError("ground set capped at 7 elements")
    if r_max > 4:
        raise ValueError("bound capped at 4")
    delta = set(tuple(t) for t in delta)
    ok, witness = is_partial_cyclic_order(delta)
    if not ok:
        return Infeasible(r_range=(), explored=0)

    pts = range(m)
    variables = [
        t
        for t in itertools.product(pts, repeat=3)
        if t[0] != t[1] and t[1] != t[2]
    ]
    # every quadruple of the full coboundary sweep; terms with adjacent
    # repeats vanish by reducedness, and coincident terms cancel in pairs
    constraints = []
    seen = set()
    for q in itertools.product(pts, repeat=4):
        coeff: dict[tuple, int] = {}
        for s, t in _terms_of_quadruple(q):
            if t[0] != t[1] and t[1] != t[2]:
                coeff[t] = coeff.get(t, 0) + s
        terms = tuple(sorted((s, t) for t, s in coeff.items() if s != 0))
        if terms and terms not in seen:
            seen.add(terms)
            constraints.append(terms)

    explored = 0
    tried = []
    for r in range(2, r_max + 1):
        if r > value_cap:
            break
        tried.append(r)
        top = min(r, value_cap)
        domain: dict[tuple, set] = {}
        for t in variables:
            x, y, z = t
            if z == x:
                domain[t] = {r}
            elif t in delta:
                domain[t] = {r}
            else:
                domain[t] = set(range(top + 1)) - {r}
        watch: dict[tuple, list[int]] = {t: [] for t in variables}
        for ci, terms in enumerate(constraints):
            for _, t in terms:
                watch[t].append(ci)

        def propagate(assign: dict, queue: list) -> bool:
            nonlocal explored
            while queue:
                ci = queue.pop()
                total = 0
                unknown = None
                for s, t in constraints[ci]:
                    if t in assign:
                        total += s * assign[t]
                    elif unknown is None:
                        unknown = (s, t)
                    else:
                        unknown = False
                        break
                if unknown is False:
                    continue
                if unknown is None:
                    if total != 0:
                        return False
                    continue
                s, t = unknown
                v = -total * s  # coefficients are +-1, so s*v + total = 0
                if v not in domain[t]:
                    return False
                assign[t] = v
                explored += 1
                if explored > budget:
                    raise Timeout(explored)
                queue.extend(watch[t])
            return True

        base: dict[tuple, int] = {}
        for t, d in domain.items():
            if len(d) == 1:
                base[t] = next(iter(d))
        if not propagate(base, list(range(len(constraints)))):
            continue

        order = [t for t in variables if t not in base]
        order.sort()

        def dfs(assign: dict, idx: int):
            nonlocal explored
            while idx < len(order) and order[idx] in assign:
                idx += 1
            if idx == len(order):
                return assign
            t = order[idx]
            for v in sorted(domain[t]):
                explored += 1
                if explored > budget:
                    raise Timeout(explored)
                trial = dict(assign)
                trial[t] = v
                if propagate(trial, list(watch[t])):
                    found = dfs(trial, idx + 1)
                    if found:
                        return found
            return None

        solution = dfs(base, 0)
        if solution:
            table = {
                t: solution[t] for t in variables
            }
            report = _check_solution(table, delta, m, r, value_cap)
            return {"r": r, "table": table, "report": report, "explored": explored}
    return Infeasible(r_range=tuple(tried), explored=explored)


def _check_solution(table: Mapping, delta: set, m: int, r: int, cap: int) -> dict:
    def c(x, y, z):
        if x == y or y == z:
            return 0
        return table[(x, y, z)]

    issues = []
    for t in itertools.product(range(m), repeat=3):
        v = c(*t)
        if not (0 <= v <= min(r, cap)):
            issues.append(("range", t, v))
        x, y, z = t
        if len({x, y, z}) == 3 and ((v == r) != (t in delta)):
            issues.append(("membership", t, v))
    for x, y in itertools.permutations(range(m), 2):
        if c(x, y, x) != r:
            issues.append(("round-trip", (x, y), c(x, y, x)))
    for q in itertools.product(range(m), repeat=4):
        w, x, y, z = q
        if c(x, y, z) - c(w, y, z) + c(w, x, z) - c(w, x, y) != 0:
            issues.append(("coboundary", q, None))
    return {"valid": not issues, "issues": issues[:10]}
