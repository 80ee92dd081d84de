"""Shared JSON bodies for the CLI and the HTTP service.

Every public function returns a plain dict carrying schema_version, built
from library calls only, so `--format json` CLI output and endpoint bodies
are the same bytes for the same input.
"""

from __future__ import annotations

import hashlib
from typing import Any, Mapping

from . import clusters as cl
from . import pco as pco_mod
from .cactus import (
    NoncrossingPartition,
    cactus_decompose,
    cluster_correspondence,
    rho_classes,
    require_noncrossing,
)
from .cocycle import validate_cocycle_on
from .descriptors import (
    cluster_from_json,
    cluster_to_json,
    family_to_json,
    frac_str,
    point_from_json,
    point_to_json,
    poset_from_descriptor,
    poset_to_descriptor,
)
from .poset import (
    CyclicPoset,
    build_covering,
    check_covering_axioms,
    check_zposet_star,
    is_nondegenerate,
    star_product,
    zn_poset,
)
from .render import render_diagram
from .symbolic import (
    SymbolicCluster,
    build_nested_cluster,
    build_zigzag_cluster,
    construct_triangulation_cluster,
    is_locally_finite,
    is_triangulation_cluster,
    limit_pairs,
    mutate_symbolic,
    rho_from_cluster,
)

SCHEMA_VERSION = 1


class ValidationFailure(ValueError):
    """Input was well-formed but describes an invalid object (exit code 1)."""


def body(**kw) -> dict:
    return {"schema_version": SCHEMA_VERSION, **kw}


def resolve_poset(spec) -> CyclicPoset:
    """Poset from a descriptor dict or a shorthand name like "zn:8"."""
    if isinstance(spec, CyclicPoset):
        return spec
    if isinstance(spec, Mapping):
        return poset_from_descriptor(spec)
    if isinstance(spec, str):
        kind, _, arg = spec.partition(":")
        if kind == "zn" and arg:
            base, _, theta = arg.partition("@")
            return zn_poset(int(base), auto=theta or "canonical")
        if kind == "z_zinfty" and arg:
            return star_product(int(arg))
        raise ValidationFailure(f"unknown poset name {spec!r}")
    raise ValidationFailure(f"cannot resolve poset from {spec!r}")


def symbolic_hash(S: SymbolicCluster) -> str:
    name, sigs, arcs = S.key()
    blob = repr((name, sorted(sigs, key=repr), sorted(arcs, key=repr)))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def any_cluster_hash(poset: CyclicPoset, cluster) -> str:
    if isinstance(cluster, SymbolicCluster):
        return symbolic_hash(cluster)
    return cl.cluster_hash(tuple(sorted(cluster)))


# --------------------------------------------------------------------------
# poset-core operations


def op_validate_cocycle(poset_spec) -> dict:
    poset = resolve_poset(poset_spec)
    report = validate_cocycle_on(poset.cocycle, poset.window(3))
    return body(
        poset=poset_to_descriptor(poset),
        valid=report.valid,
        violations=[repr(v) for v in report.violations],
    )


def op_covering(poset_spec, radius: int = 2) -> dict:
    poset = resolve_poset(poset_spec)
    cov = build_covering(poset, radius)
    axioms = check_covering_axioms(cov)
    star = check_zposet_star(cov)
    nondeg, witness = is_nondegenerate(poset, radius)
    return body(
        poset=poset_to_descriptor(poset),
        axioms_hold=axioms["holds"],
        violations=[repr(v) for v in axioms["violations"]],
        property_star=star["holds"],
        thresholds=[
            {"a": a, "b": b, "n": n} for (a, b), n in sorted(star["thresholds"].items())
        ],
        failures=star["failures"],
        nondegenerate=nondeg,
        degeneracy_witness=repr(witness) if witness else None,
    )


def op_pco(poset_spec, r: int) -> dict:
    poset = resolve_poset(poset_spec)
    try:
        out = pco_mod.pco_from_bounded_cocycle(poset, r)
    except pco_mod.HypothesisViolated as e:
        raise ValidationFailure(str(e)) from e
    labels = list(out.elements)
    idx = {p: i for i, p in enumerate(labels)}
    return body(
        r=r,
        elements=[repr(p) for p in labels],
        delta=sorted([idx[x], idx[y], idx[z]] for x, y, z in out.triples),
        identities={
            "values_of_reversed_triples_sum_to_r": out.report["identity_i"],
            "undetermined_values_strictly_interior": out.report["identity_ii"],
        },
    )


def _delta_from_spec(spec: Mapping) -> tuple[frozenset, int]:
    if "triples" in spec:
        delta = frozenset(tuple(t) for t in spec["triples"])
        ground = {x for t in delta for x in t}
        m = int(spec.get("m", (max(ground) + 1) if ground else 0))
        return delta, m
    if spec.get("name") == "delta_lin":
        m = int(spec["m"])
        return (
            pco_mod.delta_lin(m, bool(spec.get("include_zero_triples", False))),
            m,
        )
    raise ValidationFailure("delta spec needs 'triples' or name 'delta_lin'")


def op_search_pco(delta_spec: Mapping, m: int | None = None, r_max: int = 3,
                  value_cap: int = 3, budget: int = 2_000_000) -> dict:
    delta, m_spec = _delta_from_spec(delta_spec)
    m = m if m is not None else m_spec
    ok, witness = pco_mod.is_partial_cyclic_order(delta)
    try:
        res = pco_mod.search_bounded_cocycle(delta, m, r_max, value_cap, budget)
    except pco_mod.Timeout as e:
        return body(result="timeout", explored=e.explored, is_pco=ok)
    if isinstance(res, pco_mod.Infeasible):
        return body(
            result="infeasible",
            r_range=list(res.r_range),
            explored=res.explored,
            is_pco=ok,
            axiom_witness=repr(witness) if witness else None,
        )
    return body(
        result="table",
        r=res["r"],
        explored=res["explored"],
        is_pco=ok,
        table=sorted([x, y, z, v] for (x, y, z), v in res["table"].items()),
        valid=res["report"]["valid"],
    )


# --------------------------------------------------------------------------
# cluster operations


_SEED_CACHE: dict = {}


def default_cluster(poset: CyclicPoset, seed=None):
    """Initial cluster for a session: a named preset, a file payload, or
    the first enumerated cluster (symbolic: the standard triangulation)."""
    if isinstance(seed, Mapping):
        loaded = cluster_from_json(seed)
        if isinstance(loaded, SymbolicCluster):
            return loaded
        _, arcs = loaded
        return _canon_arcs(poset, arcs)
    if poset.carrier.finite:
        if isinstance(seed, (list, tuple, set, frozenset)):
            decoded = [tuple(point_from_json(poset, p) for p in a)
                       for a in seed]
            return _canon_arcs(poset, decoded)
        key = repr(poset_to_descriptor(poset))
        if key not in _SEED_CACHE:
            _SEED_CACHE[key] = cl.enumerate_clusters(poset)[0]
        return _SEED_CACHE[key]
    if seed in (None, "triangulation"):
        return construct_triangulation_cluster(poset)
    if seed == "zigzag":
        return build_zigzag_cluster(poset)
    if seed == "nested":
        return build_nested_cluster(poset)
    raise ValidationFailure(f"unknown seed {seed!r}")


def _canon_arcs(poset, arcs):
    return tuple(sorted(cl._arc(poset, *a) for a in arcs))


def cluster_body(poset: CyclicPoset, cluster) -> dict:
    if isinstance(cluster, SymbolicCluster):
        data = cluster_to_json(poset, cluster.arcs, cluster.families)
    else:
        data = cluster_to_json(poset, cluster)
    data["hash"] = any_cluster_hash(poset, cluster)
    return data


def op_clusters(poset_spec, want_list: bool = False) -> dict:
    poset = resolve_poset(poset_spec)
    if not poset.carrier.finite:
        raise ValidationFailure("cluster enumeration needs a finite carrier")
    try:
        found = cl.enumerate_clusters(poset)
    except cl.TooSmall as e:
        raise ValidationFailure(str(e)) from e
    out = body(poset=poset_to_descriptor(poset), count=len(found))
    if want_list:
        out["clusters"] = [
            [[point_to_json(poset, a), point_to_json(poset, b)] for a, b in c]
            for c in found
        ]
    return out


def parse_arc(poset: CyclicPoset, text: str):
    """Endpoint pair "x,y"; each endpoint is an index or limit:pos."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationFailure(f"arc must be two endpoints, got {text!r}")

    def pt(s: str):
        s = s.strip()
        if ":" in s:
            w, _, n = s.partition(":")
            return point_from_json(poset, {"limit": int(w), "pos": int(n)})
        return point_from_json(poset, int(s))

    return (pt(parts[0]), pt(parts[1]))


def arc_json(poset, arc) -> list:
    return [point_to_json(poset, arc[0]), point_to_json(poset, arc[1])]


def mutate_any(poset: CyclicPoset, cluster, arc):
    """(new_cluster, removed_arc, added_arc) for finite or symbolic clusters."""
    if isinstance(cluster, SymbolicCluster):
        new = mutate_symbolic(cluster, arc)
        added = set(new.arcs) - set(cluster.arcs)
        return new, cluster._norm_arc(arc), next(iter(added))
    arc_c = cl._arc(poset, *arc)
    new = cl.mutate(poset, cluster, arc_c)
    added = set(new) - set(cluster)
    return new, arc_c, next(iter(added))


def ext_pair(poset: CyclicPoset, a, b) -> list[int]:
    eng = cl.get_engine(poset)
    A, B = eng.object(*a), eng.object(*b)
    return [eng.ext1_dim(A, B), eng.ext1_dim(B, A)]


def op_mutate(cluster_data: Mapping, arc_text: str | None = None,
              arc_spec=None) -> dict:
    loaded = cluster_from_json(cluster_data)
    if isinstance(loaded, SymbolicCluster):
        poset, cluster = loaded.poset, loaded
    else:
        poset, arcs = loaded
        cluster = _canon_arcs(poset, arcs)
    if arc_text is not None:
        arc = parse_arc(poset, arc_text)
    else:
        arc = (point_from_json(poset, arc_spec[0]), point_from_json(poset, arc_spec[1]))
    new, removed, added = mutate_any(poset, cluster, arc)
    return body(
        cluster=cluster_body(poset, new),
        removed=arc_json(poset, removed),
        added=arc_json(poset, added),
        exchange_partner=arc_json(poset, added),
        ext_changes={
            "removed_vs_added": ext_pair(poset, removed, added),
        },
    )


def op_exchange_graph(poset_spec, seed=None, budget: int = 10000,
                      want_dot: bool = False) -> dict:
    poset = resolve_poset(poset_spec)
    start = default_cluster(poset, seed)
    try:
        graph = cl.exchange_graph(poset, start, budget)
        complete = True
    except cl.BudgetExceeded as e:
        graph, complete = e.partial, False
    out = body(
        poset=poset_to_descriptor(poset),
        nodes=len(graph["nodes"]),
        edges=len(graph["edges"]),
        complete=complete,
        node_hashes=sorted(cl.cluster_hash(n) for n in graph["nodes"]),
    )
    if want_dot:
        out["dot"] = cl.exchange_graph_dot(graph)
    return out


def op_homdim(poset_spec, frm, to, ext: bool = False) -> dict:
    poset = resolve_poset(poset_spec)
    a = parse_arc(poset, frm) if isinstance(frm, str) else tuple(
        point_from_json(poset, p) for p in frm)
    b = parse_arc(poset, to) if isinstance(to, str) else tuple(
        point_from_json(poset, p) for p in to)
    eng = cl.get_engine(poset)
    A, B = eng.object(*a), eng.object(*b)
    dim = eng.ext1_dim(A, B) if ext else eng.stable_hom_dim(A, B)
    return body(
        poset=poset_to_descriptor(poset),
        source=arc_json(poset, a),
        target=arc_json(poset, b),
        ext=bool(ext),
        dim=dim,
        statuses=[A.status, B.status],
    )


def op_theta(n_or_spec, theta: str, maximal: bool = False,
             want_list: bool = False, seed=None, budget: int = 1000) -> dict:
    if isinstance(n_or_spec, str) and n_or_spec.startswith("zn:"):
        n = int(n_or_spec.split(":")[1].split("@")[0])
    else:
        n = int(n_or_spec)
    poset = zn_poset(n, auto=theta)
    admiss = cl.rotation_admissible(theta)
    out = body(poset=poset_to_descriptor(poset), admissible=admiss)
    if maximal:
        seed_arcs = []
        if seed:
            loaded = cluster_from_json(seed) if isinstance(seed, Mapping) else None
            if loaded:
                _, seed_arcs = loaded
        try:
            sets = cl.maximal_compatible_sets(poset, seed_arcs, budget=budget)
        except cl.BudgetExceeded as e:
            sets = e.partial
            out["complete"] = False
        out["maximal_sets"] = [
            [arc_json(poset, a) for a in s] for s in sets
        ]
        out["max_size"] = max((len(s) for s in sets), default=0)
        out["count"] = len(sets)
        return out
    found = cl.enumerate_theta_clusters(poset)
    out["count"] = len(found)
    if want_list:
        out["clusters"] = [[arc_json(poset, a) for a in c] for c in found]
    return out


def op_embed_j(n: int) -> dict:
    rep = cl.verify_J(n)
    return body(**rep)


# --------------------------------------------------------------------------
# symbolic / cactus operations


def op_triangulation_check(cluster_data: Mapping) -> dict:
    loaded = cluster_from_json(cluster_data)
    if not isinstance(loaded, SymbolicCluster):
        poset, arcs = loaded
        ok, defect = cl.is_cluster(poset, arcs)
        return body(kind="finite", verdict=ok,
                    defect=repr(defect) if defect else None)
    S = loaded
    lf, witness = is_locally_finite(S)
    out = body(kind="symbolic", locally_finite=lf,
               witness=repr(witness) if witness else None)
    if not lf:
        out["verdict"] = False
        return out
    pairs = sorted(limit_pairs(S))
    rho = rho_from_cluster(S)
    out["verdict"] = is_triangulation_cluster(S)
    out["limit_pairs"] = [list(p) for p in pairs]
    out["rho"] = [sorted(c) for c in rho.classes]
    return out


def _rho_for(poset: CyclicPoset, classes) -> NoncrossingPartition:
    sites = tuple(poset.carrier.limits)
    rho = NoncrossingPartition(sites, tuple(tuple(c) for c in classes))
    require_noncrossing(rho)
    return rho


def op_cactus(cluster_data: Mapping | None = None, poset_spec=None,
              rho_classes_spec=None) -> dict:
    if cluster_data is not None:
        S = cluster_from_json(cluster_data)
        if not isinstance(S, SymbolicCluster):
            raise ValidationFailure("cactus analysis needs a symbolic cluster")
        poset = S.poset
        rho = rho_from_cluster(S)
    else:
        poset = resolve_poset(poset_spec)
        if poset.carrier.finite:
            raise ValidationFailure("cactus decomposition needs limit points")
        rho = _rho_for(poset, rho_classes_spec)
    decomp = cactus_decompose(poset, rho)
    out = body(poset=poset_to_descriptor(poset), **decomp.to_json())
    out["sites"] = [frac_str(s) for s in rho.sites]
    out["components"] = [sorted(c) for c in rho_classes(poset, rho)]
    out["disk_count"] = len(decomp.disks)
    if cluster_data is not None:
        for dc in cluster_correspondence(S):
            out["disks"][dc.disk_index]["cluster"] = cluster_to_json(
                dc.cluster.poset, dc.cluster.arcs, dc.cluster.families)
    return out


def op_render(cluster_data: Mapping, highlights=None, window: int = 6) -> str:
    loaded = cluster_from_json(cluster_data)
    hl = {}
    if isinstance(loaded, SymbolicCluster):
        poset, S = loaded.poset, loaded
        for h in highlights or []:
            pair = tuple(point_from_json(poset, p) for p in h["arc"])
            hl[pair] = h["class"]
        return render_diagram(poset, cluster=S, highlights=hl, window=window)
    poset, arcs = loaded
    for h in highlights or []:
        pair = tuple(point_from_json(poset, p) for p in h["arc"])
        hl[pair] = h["class"]
    return render_diagram(poset, arcs=sorted(arcs), highlights=hl)


def render_any(poset: CyclicPoset, cluster, highlights=None) -> str:
    if isinstance(cluster, SymbolicCluster):
        return render_diagram(poset, cluster=cluster, highlights=highlights)
    return render_diagram(poset, arcs=sorted(cluster), highlights=highlights)


# --------------------------------------------------------------------------
# built-in catalog


def catalog() -> dict:
    entries = []
    for n in range(4, 10):
        entries.append({"name": f"zn:{n}",
                        "descriptor": {"kind": "zn", "n": n, "auto": "canonical"},
                        "seeds": []})
    entries.append({"name": "zn:5@id",
                    "descriptor": {"kind": "zn", "n": 5, "auto": "id"},
                    "seeds": []})
    entries.append({"name": "zn:24@1/8",
                    "descriptor": {"kind": "zn", "n": 24,
                                   "auto": {"rotation": "1/8"}},
                    "seeds": []})
    for m in (1, 2, 3):
        seeds = ["triangulation"]
        if m == 2:
            seeds += ["zigzag", "nested"]
        entries.append({"name": f"z_zinfty:{m}",
                        "descriptor": {"kind": "z_zinfty", "limits": m,
                                       "auto": "canonical"},
                        "seeds": seeds})
    return body(posets=entries)
