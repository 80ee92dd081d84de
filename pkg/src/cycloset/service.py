"""Session-backed HTTP JSON service.

Stateless endpoints delegate to the same builders as the CLI, so bodies
match ``--format json`` output exactly.  Sessions live in memory, guarded by
per-session locks; with a state directory each mutation is snapshotted and
unknown ids are replayed from disk.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
from dataclasses import dataclass, field
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import ops
from .clusters import FrozenArc, NotInCluster
from .descriptors import point_from_json, poset_to_descriptor
from .symbolic import MutationInsideTail, SymbolicCluster

SCHEMA_VERSION = ops.SCHEMA_VERSION


@dataclass
class Session:
    id: str
    poset: Any
    seed: Any
    seed_spec: Any
    cluster: Any
    history: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def hash(self) -> str:
        return ops.any_cluster_hash(self.poset, self.cluster)


def _err(status: int, kind: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"schema_version": SCHEMA_VERSION,
                 "error": {"type": kind, "message": message}},
    )


def _parse_arc(poset, spec):
    if isinstance(spec, str):
        return ops.parse_arc(poset, spec)
    if isinstance(spec, (list, tuple)) and len(spec) == 2:
        return tuple(point_from_json(poset, p) for p in spec)
    raise ops.ValidationFailure(f"bad arc spec {spec!r}")


def create_app(state_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="cycloset", version="1.0")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()
    state_dir = state_dir or os.environ.get("CYCLOSET_STATE_DIR")
    if state_dir:
        os.makedirs(state_dir, exist_ok=True)

    def snapshot(s: Session) -> None:
        if not state_dir:
            return
        data = {
            "id": s.id,
            "poset": poset_to_descriptor(s.poset),
            "seed": s.seed_spec,
            "history": [h["arc"] for h in s.history],
        }
        path = os.path.join(state_dir, f"{s.id}.json")
        with open(path + ".tmp", "w") as fh:
            json.dump(data, fh)
        os.replace(path + ".tmp", path)

    def restore(sid: str) -> Session | None:
        if not state_dir:
            return None
        path = os.path.join(state_dir, f"{sid}.json")
        if not os.path.exists(path):
            return None
        with open(path) as fh:
            data = json.load(fh)
        poset = ops.resolve_poset(data["poset"])
        cluster = ops.default_cluster(poset, data.get("seed"))
        s = Session(id=sid, poset=poset, seed=cluster,
                    seed_spec=data.get("seed"), cluster=cluster)
        for arc_spec in data["history"]:
            arc = _parse_arc(poset, arc_spec)
            s.cluster, _, _ = ops.mutate_any(poset, s.cluster, arc)
            s.history.append({"arc": arc_spec, "hash": s.hash()})
        return s

    def get_session(sid: str) -> Session | None:
        with registry_lock:
            s = sessions.get(sid)
            if s is None:
                s = restore(sid)
                if s is not None:
                    sessions[sid] = s
            return s

    @app.exception_handler(ops.ValidationFailure)
    async def _vf(request: Request, exc: ops.ValidationFailure):
        return _err(422, "ValidationFailure", str(exc))

    @app.get("/api/posets")
    def posets():
        return ops.catalog()

    @app.post("/api/session")
    def new_session(payload: dict):
        try:
            poset = ops.resolve_poset(payload["poset"])
            cluster = ops.default_cluster(poset, payload.get("seed"))
        except KeyError as e:
            return _err(422, "ValidationFailure", f"missing field {e}")
        except ops.ValidationFailure as e:
            return _err(422, "ValidationFailure", str(e))
        sid = secrets.token_hex(8)
        s = Session(id=sid, poset=poset, seed=cluster,
                    seed_spec=payload.get("seed"), cluster=cluster)
        with registry_lock:
            sessions[sid] = s
        snapshot(s)
        return {
            "schema_version": SCHEMA_VERSION,
            "id": sid,
            "cluster": ops.cluster_body(poset, cluster),
            "svg": ops.render_any(poset, cluster),
        }

    @app.post("/api/session/{sid}/mutate")
    def mutate(sid: str, payload: dict):
        s = get_session(sid)
        if s is None:
            return _err(404, "UnknownSession", sid)
        with s.lock:
            try:
                arc = _parse_arc(s.poset, payload["arc"])
            except KeyError:
                return _err(422, "ValidationFailure", "missing field 'arc'")
            except ops.ValidationFailure as e:
                return _err(422, "ValidationFailure", str(e))
            try:
                new, removed, added = ops.mutate_any(s.poset, s.cluster, arc)
            except FrozenArc as e:
                return _err(409, "FrozenArc", str(e))
            except NotInCluster as e:
                return _err(409, "NotInCluster", str(e))
            except MutationInsideTail as e:
                return _err(409, "MutationInsideTail", str(e))
            except (ValueError, KeyError) as e:
                return _err(422, "ValidationFailure", str(e))
            s.cluster = new
            s.history.append({"arc": payload["arc"], "hash": s.hash()})
            snapshot(s)
            highlights = {tuple(added): "mutated"}
            return {
                "schema_version": SCHEMA_VERSION,
                "cluster": ops.cluster_body(s.poset, new),
                "svg": ops.render_any(s.poset, new, highlights=highlights),
                "exchange_partner": ops.arc_json(s.poset, added),
                "removed": ops.arc_json(s.poset, removed),
                "ext_changes": {
                    "removed_vs_added": ops.ext_pair(s.poset, removed, added),
                },
            }

    @app.get("/api/session/{sid}/neighbors")
    def neighbors(sid: str):
        s = get_session(sid)
        if s is None:
            return _err(404, "UnknownSession", sid)
        with s.lock:
            out, frozen = [], []
            if isinstance(s.cluster, SymbolicCluster):
                candidates = list(s.cluster.arcs)
                candidates += [f.arc(0) for f in s.cluster.families]
            else:
                candidates = list(s.cluster)
            for arc in candidates:
                try:
                    new, _, added = ops.mutate_any(s.poset, s.cluster, arc)
                except (FrozenArc, MutationInsideTail):
                    frozen.append(ops.arc_json(s.poset, arc))
                    continue
                except (ValueError, KeyError):
                    continue
                out.append({
                    "arc": ops.arc_json(s.poset, arc),
                    "partner": ops.arc_json(s.poset, added),
                    "hash": ops.any_cluster_hash(s.poset, new),
                })
            return {
                "schema_version": SCHEMA_VERSION,
                "neighbors": out,
                "frozen": frozen,
            }

    @app.get("/api/session/{sid}")
    def session_state(sid: str):
        s = get_session(sid)
        if s is None:
            return _err(404, "UnknownSession", sid)
        with s.lock:
            return {
                "schema_version": SCHEMA_VERSION,
                "id": s.id,
                "cluster": ops.cluster_body(s.poset, s.cluster),
                "svg": ops.render_any(s.poset, s.cluster),
            }

    @app.get("/api/session/{sid}/history")
    def history(sid: str):
        s = get_session(sid)
        if s is None:
            return _err(404, "UnknownSession", sid)
        with s.lock:
            return {
                "schema_version": SCHEMA_VERSION,
                "seed_hash": ops.any_cluster_hash(s.poset, s.seed),
                "current_hash": s.hash(),
                "history": list(s.history),
            }

    @app.post("/api/homdim")
    def homdim(payload: dict):
        return ops.op_homdim(
            payload["poset"], payload["from"], payload["to"],
            ext=bool(payload.get("ext", False)),
        )

    @app.post("/api/triangulation-check")
    def triangulation_check(payload: dict):
        return ops.op_triangulation_check(payload["cluster"])

    @app.post("/api/cactus")
    def cactus(payload: dict):
        if "cluster" in payload:
            return ops.op_cactus(cluster_data=payload["cluster"])
        return ops.op_cactus(
            poset_spec=payload["poset"],
            rho_classes_spec=payload["rho"]["classes"],
        )

    return app


app = create_app()
