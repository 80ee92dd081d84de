"""JSON descriptors: posets, clusters, symbolic families, admissibility.

All rationals travel as "p/q" strings.  Finite carrier points serialize as
their ccw index; symbolic points as {"limit": w, "pos": n}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Any, Mapping

from .poset import (
    CyclicPoset,
    FiniteCarrier,
    SymbolicCarrier,
    AbstractCarrier,
    Identity,
    CanonicalSuccessor,
    RotationBy,
    zn_poset,
    angles_poset,
    star_product,
    table_poset,
)
from .circle import OrbitPoint, RationalPoint, SymbolicPoint
from .symbolic import FanFamily, SymbolicCluster, Tail

__all__ = [
    "frac_str",
    "parse_frac",
    "poset_to_descriptor",
    "poset_from_descriptor",
    "cluster_to_json",
    "cluster_from_json",
    "family_to_json",
    "family_from_json",
    "is_admissible",
]


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_frac(s) -> Fraction:
    return Fraction(s)


def _auto_json(poset: CyclicPoset) -> Any:
    a = poset.automorphism
    if isinstance(a, Identity):
        return "id"
    if isinstance(a, CanonicalSuccessor):
        return "canonical"
    if isinstance(a, RotationBy):
        return {"rotation": frac_str(a.step)}
    raise TypeError(f"unknown automorphism {a!r}")


def _auto_from_json(spec) -> Any:
    if spec in ("id", None):
        return "id"
    if spec == "canonical":
        return "canonical"
    if isinstance(spec, Mapping) and "rotation" in spec:
        return parse_frac(spec["rotation"])
    raise ValueError(f"bad automorphism spec {spec!r}")


def poset_to_descriptor(poset: CyclicPoset) -> dict:
    auto = _auto_json(poset)
    carrier = poset.carrier
    if isinstance(carrier, SymbolicCarrier):
        m = carrier.num_limits
        even = [Fraction(k, m) for k in range(m)]
        limits = m if list(carrier.limits) == even else [frac_str(v) for v in carrier.limits]
        return {"kind": "z_zinfty", "limits": limits, "auto": auto}
    if isinstance(carrier, FiniteCarrier):
        pts = carrier.window()
        if pts and all(isinstance(p, OrbitPoint) for p in pts):
            n = pts[0].n
            if len(pts) == n and all(p.index == i for i, p in enumerate(pts)):
                return {"kind": "zn", "n": n, "auto": auto}
        return {
            "kind": "angles",
            "turns": [frac_str(p.turns) for p in pts],
            "auto": auto,
        }
    if isinstance(carrier, AbstractCarrier):
        labels = carrier.window()
        rows = [[t[0], t[1], t[2], poset.c(*t)] for t in permutations(labels, 3)]
        return {"kind": "table", "carrier": list(labels), "cocycle": rows, "auto": auto}
    raise TypeError(f"cannot describe carrier {carrier!r}")


def poset_from_descriptor(desc: Mapping) -> CyclicPoset:
    kind = desc.get("kind")
    auto = _auto_from_json(desc.get("auto", "canonical" if kind != "table" else "id"))
    if kind == "zn":
        return zn_poset(int(desc["n"]), auto=auto)
    if kind == "angles":
        return angles_poset([parse_frac(t) for t in desc["turns"]], auto=auto)
    if kind == "z_zinfty":
        limits = desc["limits"]
        if not isinstance(limits, int):
            limits = [parse_frac(v) for v in limits]
        return star_product(limits, auto=auto)
    if kind == "table":
        labels = [tuple(x) if isinstance(x, list) else x for x in desc["carrier"]]
        entries = {}
        for row in desc.get("cocycle", []):
            *t, v = row
            entries[tuple(tuple(x) if isinstance(x, list) else x for x in t)] = int(v)
        return table_poset(labels, entries, auto=auto)
    raise ValueError(f"unknown poset kind {kind!r}")


# --------------------------------------------------------------------------
# carrier points and arcs


def point_to_json(poset: CyclicPoset, p) -> Any:
    if isinstance(p, SymbolicPoint):
        return {"limit": p.limit, "pos": p.pos}
    return poset.carrier.index(p)


def point_from_json(poset: CyclicPoset, spec) -> Any:
    if isinstance(spec, Mapping):
        return SymbolicPoint(int(spec["limit"]), int(spec["pos"]))
    return poset.carrier.window()[int(spec)]


def _arc_to_json(poset, arc):
    return [point_to_json(poset, arc[0]), point_to_json(poset, arc[1])]


def _arc_from_json(poset, spec):
    return (point_from_json(poset, spec[0]), point_from_json(poset, spec[1]))


def family_to_json(fam: FanFamily) -> dict:
    def spec(e):
        if isinstance(e, Tail):
            return {"tail": {"limit": e.interval, "dir": "+" if e.step > 0 else "-", "start": e.start}}
        return {"limit": e.limit, "pos": e.pos}

    return {"fixed": spec(fam.x), "moving": spec(fam.y), "offset": 0}


def family_from_json(data: Mapping) -> FanFamily:
    offset = int(data.get("offset", 0))

    def spec(obj, shift):
        if "tail" in obj:
            t = obj["tail"]
            step = 1 if t["dir"] == "+" else -1
            return Tail(int(t["limit"]), int(t["start"]) + shift * step, step)
        return SymbolicPoint(int(obj["limit"]), int(obj["pos"]))

    # the offset shifts where the moving endpoint's enumeration begins
    return FanFamily(spec(data["fixed"], 0), spec(data["moving"], offset))


def cluster_to_json(poset: CyclicPoset, arcs, families=()) -> dict:
    out = {
        "poset": poset_to_descriptor(poset),
        "arcs": sorted(
            (_arc_to_json(poset, a) for a in arcs),
            key=lambda r: str(r),
        ),
    }
    if families or not poset.carrier.finite:
        out["families"] = [family_to_json(f) for f in families]
    return out


def cluster_from_json(data: Mapping):
    """Finite clusters come back as (poset, arcs); symbolic as SymbolicCluster."""
    poset = poset_from_descriptor(data["poset"])
    arcs = [_arc_from_json(poset, r) for r in data.get("arcs", [])]
    if poset.carrier.finite:
        return poset, frozenset(arcs)
    families = [family_from_json(f) for f in data.get("families", [])]
    return SymbolicCluster(poset, arcs, families)


# --------------------------------------------------------------------------
# admissibility of described subsets


def is_admissible(desc) -> tuple[bool, str | None]:
    """Discrete, every accumulation point two-sided, at least 4 elements.

    Accepts poset descriptors (zn / angles / z_zinfty) and sequence
    descriptors {"kind": "sequence", "coefficient": "1/2"} meaning the
    angles {c/n : n >= 1}, optionally {"mirrored": true} for {+-c/n}.
    """
    if isinstance(desc, CyclicPoset):
        desc = poset_to_descriptor(desc)
    kind = desc.get("kind")
    if kind == "zn":
        n = int(desc["n"])
        return (True, None) if n >= 4 else (False, "fewer than 4 elements")
    if kind == "angles":
        turns = {parse_frac(t) % 1 for t in desc["turns"]}
        if len(turns) < 4:
            return (False, "fewer than 4 elements")
        return (True, None)
    if kind == "z_zinfty":
        limits = desc["limits"]
        count = limits if isinstance(limits, int) else len(limits)
        if count < 1:
            return (False, "no limit points")
        return (True, None)
    if kind == "sequence":
        # c/n accumulates at 0 from above only, unless mirrored
        if desc.get("mirrored"):
            return (True, None)
        return (False, "one-sided limit at 0")
    raise ValueError(f"unknown descriptor kind {kind!r}")
