"""Clusters, mutation, exchange graphs, and quivers on finite carriers.

A cluster is a maximal pairwise-compatible set of nonzero objects.  For the
identity automorphism clusters are polygon triangulations plus the frozen
boundary arcs; for the canonical automorphism the boundary arcs are zero
objects and clusters are the diagonal sets alone; for rotations by 1/N turn
clusters are triangulations of a single rotation orbit (an N-gon), which in
general are not maximal compatible sets in the ambient category.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from math import comb

import numpy as np

from . import gf
from .circle import sort_ccw
from .engine import HomEngine
from .poset import CanonicalSuccessor, CyclicPoset, Identity, RotationBy, zn_poset

__all__ = [
    "TooSmall",
    "FrozenArc",
    "NotInCluster",
    "BudgetExceeded",
    "get_engine",
    "compatible",
    "enumerate_clusters",
    "is_cluster",
    "mutation_triangle",
    "mutate",
    "exchange_graph",
    "exchange_graph_dot",
    "cluster_hash",
    "cluster_quiver",
    "quiver_mutation_check",
    "spaced_out_embed",
    "verify_J",
    "rotation_admissible",
    "orbit_embed",
    "rotation_orbits",
    "enumerate_theta_clusters",
    "maximal_compatible_sets",
    "catalan_count",
]


class TooSmall(ValueError):
    pass


class FrozenArc(ValueError):
    pass


class NotInCluster(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


_ENGINES: dict = {}


def get_engine(poset: CyclicPoset, K: int = 6, prime: int = 2,
               check_stability: bool = False) -> HomEngine:
    key = (id(poset), K, prime, check_stability)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = HomEngine(poset, K=K, prime=prime, check_stability=check_stability)
        _ENGINES[key] = eng
    return eng


def catalan_count(N: int) -> int:
    """Number of triangulations of an N-gon: C(2N-4, N-2) / (N-1)."""
    return comb(2 * N - 4, N - 2) // (N - 1)


# --------------------------------------------------------------------------
# arcs and compatibility


def _arc(poset: CyclicPoset, x, y) -> tuple:
    ix, iy = poset.carrier.index(x), poset.carrier.index(y)
    return (x, y) if ix <= iy else (y, x)


def _canon(poset: CyclicPoset, arcs) -> tuple:
    idx = poset.carrier.index
    return tuple(sorted((_arc(poset, *a) for a in arcs),
                        key=lambda a: (idx(a[0]), idx(a[1]))))


def _points_of(arc) -> tuple:
    return arc if isinstance(arc, tuple) else arc.points


def compatible(poset: CyclicPoset, A, B, engine: HomEngine | None = None) -> bool:
    """Ext-compatibility; the sum rule depends on the automorphism.

    With the identity automorphism shift fixes objects and Hom = Ext^1, so a
    pair with a one-way extension still counts as compatible (sum <= 1).  For
    the canonical and rotation automorphisms compatibility means
    Ext-orthogonality in both directions.
    """
    eng = engine or get_engine(poset)
    OA = eng.object(*_points_of(A))
    OB = eng.object(*_points_of(B))
    total = eng.ext1_dim(OA, OB) + eng.ext1_dim(OB, OA)
    if isinstance(poset.automorphism, Identity):
        return total <= 1
    return total == 0


# --------------------------------------------------------------------------
# triangulation machinery (pure combinatorics on a vertex cycle)


def _triangulations(verts: list) -> list[list[tuple]]:
    """All triangulations of the convex polygon on verts, as diagonal lists.

    Ear recursion: the edge (verts[0], verts[-1]) belongs to a unique
    triangle with apex verts[k]; recurse on both sub-polygons.
    """
    m = len(verts)
    if m < 4:
        return [[]]
    out = []
    first, last = verts[0], verts[-1]
    for k in range(1, m - 1):
        extra = []
        if k > 1:
            extra.append((first, verts[k]))
        if k < m - 2:
            extra.append((verts[k], last))
        for L in _triangulations(verts[: k + 1]):
            for R in _triangulations(verts[k:]):
                out.append(L + R + extra)
    return out


def _polygon_sides(verts: list) -> set:
    return {frozenset((verts[i], verts[(i + 1) % len(verts)]))
            for i in range(len(verts))}


def _flip_apexes(verts: list, diagonals: set[frozenset], arc: frozenset) -> tuple:
    """The two triangle apexes adjacent to a diagonal of a triangulation.

    Vertices are in convex position, so a 3-cycle of edges always bounds a
    face; the apexes are exactly the vertices joined to both arc endpoints.
    """
    edges = diagonals | _polygon_sides(verts)
    x, y = tuple(arc)
    apexes = [c for c in verts
              if c not in (x, y)
              and frozenset((x, c)) in edges and frozenset((y, c)) in edges]
    if len(apexes) != 2:
        raise ValueError(f"arc {set(arc)} does not bound two triangles")
    return apexes[0], apexes[1]


# --------------------------------------------------------------------------
# cluster sets per automorphism


def _require_finite(poset: CyclicPoset):
    if not poset.carrier.finite:
        raise TypeError("finite carrier required")
    if len(poset.carrier) < 4:
        raise TooSmall(f"carrier has {len(poset.carrier)} points; need at least 4")


def _id_frozen(poset: CyclicPoset) -> list[tuple]:
    return [_arc(poset, p, poset.succ(p)) for p in poset.carrier.points]


def enumerate_clusters(poset: CyclicPoset) -> list[tuple]:
    """All clusters, in canonical form (sorted arc tuples)."""
    _require_finite(poset)
    auto = poset.automorphism
    pts = list(poset.carrier.points)
    if isinstance(auto, CanonicalSuccessor):
        return sorted(_canon(poset, tri) for tri in _triangulations(pts))
    if isinstance(auto, Identity):
        frozen = _id_frozen(poset)
        return sorted(_canon(poset, tri + frozen) for tri in _triangulations(pts))
    if isinstance(auto, RotationBy):
        return enumerate_theta_clusters(poset)
    raise TypeError(f"unsupported automorphism {auto!r}")


def is_cluster(poset: CyclicPoset, arcs) -> tuple[bool, dict | None]:
    """Validity check with a defect witness (None when valid)."""
    _require_finite(poset)
    eng = get_engine(poset)
    arcs = [_arc(poset, *a) for a in arcs]
    seen = set()
    for a in arcs:
        if a in seen:
            return False, {"defect": "duplicate arc", "arc": a}
        seen.add(a)
        st = eng.object(*a).status
        if st != "nonzero":
            return False, {"defect": f"object is {st}", "arc": a}
    for i, a in enumerate(arcs):
        for b in arcs[i + 1:]:
            if not compatible(poset, a, b, eng):
                return False, {"defect": "incompatible pair", "arcs": (a, b)}
    if isinstance(poset.automorphism, RotationBy):
        # clusters here are triangulations of one rotation orbit
        if not arcs:
            return False, {"defect": "empty arc set"}
        orbit = set(_orbit_of(poset, arcs[0][0]))
        for a in arcs:
            if a[0] not in orbit or a[1] not in orbit:
                return False, {"defect": "arc leaves the rotation orbit", "arc": a}
        want = len(orbit) - 3
        if len(arcs) != want:
            return False, {"defect": f"expected {want} orbit diagonals",
                           "got": len(arcs)}
        return True, None
    # id/canonical: maximality against every nonzero object
    pts = poset.carrier.points
    arcset = set(arcs)
    for i, x in enumerate(pts):
        for y in pts[i:]:
            cand = _arc(poset, x, y)
            if cand in arcset or eng.object(*cand).status != "nonzero":
                continue
            if all(compatible(poset, cand, a, eng) for a in arcs):
                return False, {"defect": "not maximal", "missing": cand}
    return True, None


# --------------------------------------------------------------------------
# mutation


def _cluster_parts(poset: CyclicPoset, cluster) -> tuple[set, set]:
    """Split a cluster into (frozen arcs, flippable diagonals)."""
    arcs = {_arc(poset, *a) for a in cluster}
    if isinstance(poset.automorphism, Identity):
        frozen = set(_id_frozen(poset))
        return arcs & frozen, arcs - frozen
    return set(), arcs


def _mutation_verts(poset: CyclicPoset, diagonals: set) -> list:
    if isinstance(poset.automorphism, RotationBy) and diagonals:
        return _orbit_of(poset, next(iter(diagonals))[0])
    return list(poset.carrier.points)


def mutation_triangle(poset: CyclicPoset, cluster, arc) -> tuple:
    """Exchange partner and approximation middle term for a flip.

    Returns (E(a,b) arc, (E(x,b) arc, E(a,y) arc)) with x,a,y,b in ccw
    cyclic order, from the exact sequence
    0 -> E(x,y) -> E(x,b) + E(a,y) -> E(a,b) -> 0.
    """
    arc = _arc(poset, *arc)
    frozen, diagonals = _cluster_parts(poset, cluster)
    if arc in frozen:
        raise FrozenArc(f"{arc} is a frozen boundary arc")
    if arc not in diagonals:
        raise NotInCluster(f"{arc} not in cluster")
    verts = _mutation_verts(poset, diagonals)
    dset = {frozenset(a) for a in diagonals}
    c1, c2 = _flip_apexes(verts, dset, frozenset(arc))
    x, y = arc
    pos = {v: i for i, v in enumerate(verts)}
    span = (pos[y] - pos[x]) % len(verts)
    a, b = (c1, c2) if (pos[c1] - pos[x]) % len(verts) < span else (c2, c1)
    partner = _arc(poset, a, b)
    middle = (_arc(poset, x, b), _arc(poset, a, y))
    return partner, middle


def mutate(poset: CyclicPoset, cluster, arc) -> tuple:
    """Replace a nonfrozen arc by its unique exchange partner."""
    partner, _ = mutation_triangle(poset, cluster, arc)
    arc = _arc(poset, *arc)
    out = [_arc(poset, *a) for a in cluster if _arc(poset, *a) != arc]
    return _canon(poset, out + [partner])


def exchange_graph(poset: CyclicPoset, seed, budget: int = 10000) -> dict:
    """BFS closure of the flip relation from a seed cluster.

    Raises BudgetExceeded (carrying the truncated graph with a frontier list)
    if more than `budget` nodes are reachable.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    seed = _canon(poset, seed)
    nodes = {seed}
    edges = set()
    queue = [seed]
    frontier = set()
    while queue:
        cur = queue.pop()
        _, diagonals = _cluster_parts(poset, cur)
        for arc in diagonals:
            nxt = mutate(poset, cur, arc)
            edges.add(frozenset((cur, nxt)))
            if nxt not in nodes:
                if len(nodes) >= budget:
                    frontier.add(nxt)
                    continue
                nodes.add(nxt)
                queue.append(nxt)
    graph = {
        "nodes": sorted(nodes),
        "edges": sorted(tuple(sorted(e)) for e in edges),
        "complete": not frontier,
        "frontier": sorted(frontier - nodes),
    }
    if frontier:
        raise BudgetExceeded(f"exchange graph exceeds budget {budget}", graph)
    return graph


def cluster_hash(cluster) -> str:
    """Short content hash of a cluster in canonical form."""
    return hashlib.sha256(repr(cluster).encode()).hexdigest()[:16]


def exchange_graph_dot(graph: dict) -> str:
    names = {node: f"c{i}" for i, node in enumerate(graph["nodes"])}
    lines = ["graph exchange {"]
    for node, name in names.items():
        lines.append(f'  {name} [label="{cluster_hash(node)}"];')
    for a, b in graph["edges"]:
        lines.append(f"  {names[a]} -- {names[b]};")
    lines.append("}")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# cluster quivers


def _stable_comp_rank(eng: HomEngine, A, B, through) -> int:
    """Rank, inside stable Hom(A,B), of composites through the given objects."""
    K2 = eng.K2
    base = eng._projective_span_rank(A, B)
    blocks = []
    for Q in set(eng.envelope(A)) | set(through):
        into = eng._solution_basis(A, Q)
        outof = eng._solution_basis(Q, B)
        if len(into) and len(outof):
            blocks.append(eng._batch_compose(
                into.reshape(-1, 4, K2), A, Q, outof.reshape(-1, 4, K2), B))
    if not blocks:
        return 0
    total = gf.rank(eng._truncate(np.vstack(blocks)), eng.p)
    return total - base


def cluster_quiver(poset: CyclicPoset, cluster) -> dict:
    """Arrows i -> j with multiplicity dim rad(T_i,T_j)/rad^2(T_i,T_j).

    rad(A,B) is the full stable Hom for nonisomorphic indecomposables (their
    stable endomorphism rings are local with residue field k), and rad^2 is
    spanned by composites through the other cluster members.
    """
    eng = get_engine(poset)
    arcs = list(_canon(poset, cluster))
    objs = {a: eng.object(*a) for a in arcs}
    arrows = {}
    for a in arcs:
        for b in arcs:
            if a == b:
                continue
            A, B = objs[a], objs[b]
            rad = eng.stable_hom_dim(A, B)
            if rad == 0:
                continue
            through = [objs[c] for c in arcs if c != a and c != b]
            rad2 = _stable_comp_rank(eng, A, B, through)
            mult = rad - rad2
            if mult > 0:
                arrows[(a, b)] = mult
    return {"vertices": arcs, "arrows": arrows}


def _quiver_matrix(q: dict) -> dict:
    verts = q["vertices"]
    m = {(a, b): 0 for a in verts for b in verts}
    for (a, b), k in q["arrows"].items():
        m[(a, b)] += k
        m[(b, a)] -= k
    return m


def _dwz_mutate(q: dict, k) -> dict:
    """Matrix mutation at vertex k (sign-skew-symmetric, 2-acyclic case)."""
    verts = q["vertices"]
    b = _quiver_matrix(q)
    nb = {}
    for i in verts:
        for j in verts:
            if i == k or j == k:
                nb[(i, j)] = -b[(i, j)]
            else:
                nb[(i, j)] = b[(i, j)] + (abs(b[(i, k)]) * b[(k, j)]
                                          + b[(i, k)] * abs(b[(k, j)])) // 2
    return nb


def quiver_mutation_check(poset: CyclicPoset, cluster, arc) -> bool:
    """Does the quiver of the mutated cluster equal the DWZ mutation?

    Compared on all vertex pairs except frozen-frozen ones; the exchanged
    vertex is identified with its partner.
    """
    arc = _arc(poset, *arc)
    partner, _ = mutation_triangle(poset, cluster, arc)
    mutated = mutate(poset, cluster, arc)
    q0 = cluster_quiver(poset, cluster)
    q1 = cluster_quiver(poset, mutated)
    want = _dwz_mutate(q0, arc)
    got = _quiver_matrix(q1)
    rename = {v: v for v in q1["vertices"]}
    rename[partner] = arc
    frozen, _ = _cluster_parts(poset, cluster)
    for (i, j), v in got.items():
        i0, j0 = rename[i], rename[j]
        if i0 in frozen and j0 in frozen:
            continue
        if want[(i0, j0)] != v:
            return False
    return True


# --------------------------------------------------------------------------
# the spaced-out embedding J: C_id(Z_n) -> C_phi(Z_2n)


def spaced_out_embed(n: int):
    """Returns (source poset, target poset, arc map E(x_i,x_j) -> E(x_2i,x_2j))."""
    src = zn_poset(n, "id")
    dst = zn_poset(2 * n, "canonical")
    dpts = dst.carrier.points

    def J(arc):
        x, y = _points_of(arc)
        return _arc(dst, dpts[2 * src.carrier.index(x)],
                    dpts[2 * src.carrier.index(y)])

    return src, dst, J


def verify_J(n: int) -> dict:
    """Exhaustive verification that J embeds C_id(Z_n) into C_phi(Z_2n)."""
    src, dst, J = spaced_out_embed(n)
    es = get_engine(src)
    ed = get_engine(dst)
    spts = src.carrier.points
    report = {"n": n, "hom_preserved": True, "clusters_to_clusters": True,
              "frozen_to_nonzero": True, "image_meets_shifted_image": False,
              "mismatches": []}
    arcs = [(spts[i], spts[j]) for i in range(n) for j in range(i + 1, n)]
    for a in arcs:
        for b in arcs:
            d0 = es.stable_hom_dim(es.object(*a), es.object(*b))
            d1 = ed.stable_hom_dim(ed.object(*J(a)), ed.object(*J(b)))
            if d0 != d1:
                report["hom_preserved"] = False
                report["mismatches"].append({"pair": (repr(a), repr(b)),
                                             "src": d0, "dst": d1})
    for p in spts:
        if ed.object(*J((p, src.succ(p)))).status != "nonzero":
            report["frozen_to_nonzero"] = False
    for cl in enumerate_clusters(src):
        image = [J(a) for a in cl]
        ok, defect = is_cluster(dst, image)
        if not ok:
            report["clusters_to_clusters"] = False
            report["mismatches"].append({"cluster": repr(cl), "defect": defect})
    image_objs = {frozenset(J(a)) for a in arcs}
    shifted = {frozenset(ed.shift(ed.object(*J(a))).points) for a in arcs}
    report["image_meets_shifted_image"] = bool(image_objs & shifted)
    return report


# --------------------------------------------------------------------------
# rotation automorphisms


def rotation_admissible(theta) -> dict:
    """Decide whether rotation by theta (turns) yields a cluster structure."""
    theta = Fraction(theta)
    if not (0 < theta < Fraction(1, 2)):
        return {"decision": "NoClusterStructure",
                "reason": f"rotation by {theta} turns is not admissible"}
    if theta.numerator != 1:
        return {"decision": "NoClusterStructure",
                "reason": f"{theta} is not 1/N for an integer N"}
    N = theta.denominator
    if N < 4:
        return {"decision": "NoClusterStructure", "reason": f"N = {N} < 4"}
    return {"decision": "ClusterStructure", "N": N}


def _orbit_of(poset: CyclicPoset, x) -> list:
    out = [x]
    cur = poset.phi(x)
    while cur != x:
        out.append(cur)
        cur = poset.phi(cur)
    return sort_ccw(poset.order, out)


def rotation_orbits(poset: CyclicPoset) -> list[list]:
    seen = set()
    orbits = []
    for p in poset.carrier.points:
        if p in seen:
            continue
        orb = _orbit_of(poset, p)
        seen.update(orb)
        orbits.append(orb)
    return orbits


def orbit_embed(poset: CyclicPoset, x):
    """J_x: Z_N -> orbit of x, i -> phi^i(x); returns (Z_N poset, vertex map)."""
    orbit = _orbit_of(poset, x)
    N = len(orbit)
    zn = zn_poset(N, "canonical")
    start = orbit.index(x)

    def vertex(i: int):
        return orbit[(start + i) % N]

    return zn, vertex


def enumerate_theta_clusters(poset: CyclicPoset) -> list[tuple]:
    """Clusters of a theta-rotation poset: orbit triangulations, deduplicated."""
    if not isinstance(poset.automorphism, RotationBy):
        raise TypeError("rotation automorphism required")
    decision = rotation_admissible(poset.automorphism.step)
    if decision["decision"] != "ClusterStructure":
        raise ValueError(decision["reason"])
    out = set()
    for orbit in rotation_orbits(poset):
        for tri in _triangulations(orbit):
            out.add(_canon(poset, tri))
    return sorted(out)


def maximal_compatible_sets(poset: CyclicPoset, seed=(), budget: int = 1000) -> list[tuple]:
    """All maximal Ext-compatible extensions of the seed, up to `budget` sets.

    Candidates are pre-filtered to the objects compatible with every seed
    member; any object compatible with a superset of the seed is such a
    candidate, so leaf maximality only needs checking against them.
    """
    _require_finite(poset)
    eng = get_engine(poset)
    pts = list(poset.carrier.points)
    seed = [_arc(poset, *a) for a in seed]
    for i, a in enumerate(seed):
        for b in seed[i + 1:]:
            if not compatible(poset, a, b, eng):
                raise ValueError("seed is not pairwise compatible")
    allobjs = []
    for i, x in enumerate(pts):
        for y in pts[i:]:
            a = _arc(poset, x, y)
            if eng.object(*a).status == "nonzero":
                allobjs.append(a)
    cands = [a for a in allobjs if a not in seed
             and all(compatible(poset, a, b, eng) for b in seed)]
    comp: dict = {a: set() for a in cands}
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            if compatible(poset, a, b, eng):
                comp[a].add(b)
                comp[b].add(a)

    results: list[tuple] = []

    def extend(current: list, pool: list):
        if len(results) >= budget:
            raise BudgetExceeded(f"more than {budget} maximal sets", results)
        if not pool:
            cur = set(current)
            if not any(a not in cur and cur <= comp[a] for a in cands):
                results.append(_canon(poset, seed + current))
            return
        head, rest = pool[0], pool[1:]
        extend(current + [head], [a for a in rest if a in comp[head]])
        # a branch skipping head can only reach maximal sets if something
        # later conflicts with it
        if not all(a in comp[head] for a in rest):
            extend(current, rest)

    extend([], cands)
    return sorted(set(results))
