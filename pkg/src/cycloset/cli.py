"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage error.  With
``--format json`` each subcommand prints exactly the JSON body the HTTP
service would return for the same operation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ops

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _poset_arg(text: str):
    """A shorthand name like zn:8, or a path to a descriptor file."""
    if ":" in text and not text.endswith(".json"):
        return text
    return _load_json(text)


def _emit(args, data, text_lines=None) -> int:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines or [json.dumps(data, indent=2, sort_keys=True)]:
            print(line)
    return EXIT_OK


def _cmd_validate_cocycle(args) -> int:
    data = ops.op_validate_cocycle(_poset_arg(args.file))
    code = EXIT_OK if data["valid"] else EXIT_INVALID
    _emit(args, data, [f"valid: {data['valid']}"] +
          [f"  {v}" for v in data["violations"]])
    return code


def _cmd_covering(args) -> int:
    data = ops.op_covering(_poset_arg(args.file), radius=args.radius)
    ok = data["axioms_hold"] and data["property_star"] and data["nondegenerate"]
    _emit(args, data, [
        f"axioms: {data['axioms_hold']}",
        f"property (*): {data['property_star']}",
        f"nondegenerate: {data['nondegenerate']}",
        f"thresholds computed: {len(data['thresholds'])}",
    ])
    return EXIT_OK if ok else EXIT_INVALID


def _cmd_pco(args) -> int:
    data = ops.op_pco(_poset_arg(args.file), args.r)
    _emit(args, data, [
        f"r = {data['r']}, |delta| = {len(data['delta'])}",
        f"identities: {data['identities']}",
    ])
    return EXIT_OK


def _cmd_search_pco(args) -> int:
    spec = _load_json(args.file)
    data = ops.op_search_pco(spec, m=args.m, r_max=args.rmax,
                             value_cap=args.cap, budget=args.budget)
    _emit(args, data, [f"result: {data['result']}"] + (
        [f"r = {data['r']}"] if data["result"] == "table" else []))
    return EXIT_OK if data["result"] != "timeout" else EXIT_INVALID


def _cmd_clusters(args) -> int:
    data = ops.op_clusters(_poset_arg(args.poset), want_list=args.list)
    lines = [str(data["count"])]
    if args.list:
        lines += [json.dumps(c) for c in data["clusters"]]
    _emit(args, data, lines)
    return EXIT_OK


def _cmd_mutate(args) -> int:
    data = ops.op_mutate(_load_json(args.cluster), arc_text=args.arc)
    _emit(args, data, [
        f"removed: {data['removed']}",
        f"added: {data['added']}",
        f"hash: {data['cluster']['hash']}",
    ])
    return EXIT_OK


def _cmd_exchange_graph(args) -> int:
    seed = _load_json(args.seed) if args.seed else None
    data = ops.op_exchange_graph(_poset_arg(args.poset), seed=seed,
                                 budget=args.budget, want_dot=bool(args.dot))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(data["dot"])
        data = {k: v for k, v in data.items() if k != "dot"}
    _emit(args, data, [
        f"nodes: {data['nodes']}",
        f"edges: {data['edges']}",
        f"complete: {data['complete']}",
    ])
    return EXIT_OK if data["complete"] else EXIT_INVALID


def _cmd_homdim(args) -> int:
    data = ops.op_homdim(_poset_arg(args.poset), args.frm, args.to, ext=args.ext)
    _emit(args, data, [str(data["dim"])])
    return EXIT_OK


def _cmd_theta(args) -> int:
    seed = _load_json(args.seed) if args.seed else None
    data = ops.op_theta(args.poset, args.theta, maximal=args.maximal,
                        want_list=args.list, seed=seed, budget=args.budget)
    if data["admissible"]["decision"] != "ClusterStructure":
        _emit(args, data, [f"no cluster structure: {data['admissible']['reason']}"])
        return EXIT_INVALID
    lines = [str(data.get("count", ""))]
    if args.maximal:
        lines = [f"maximal sets: {data['count']}, largest: {data['max_size']}"]
    _emit(args, data, lines)
    return EXIT_OK


def _cmd_embed_j(args) -> int:
    data = ops.op_embed_j(args.n)
    ok = (data["hom_preserved"] and data["clusters_to_clusters"]
          and data["frozen_to_nonzero"] and not data["image_meets_shifted_image"])
    _emit(args, data, [
        f"hom preserved: {data['hom_preserved']}",
        f"clusters to clusters: {data['clusters_to_clusters']}",
        f"frozen to nonzero: {data['frozen_to_nonzero']}",
        f"image meets shifted image: {data['image_meets_shifted_image']}",
    ])
    return EXIT_OK if ok else EXIT_INVALID


def _cmd_triangulation_check(args) -> int:
    data = ops.op_triangulation_check(_load_json(args.cluster))
    _emit(args, data, [f"triangulation cluster: {data['verdict']}"])
    return EXIT_OK if data["verdict"] else EXIT_INVALID


def _cmd_cactus(args) -> int:
    if args.rho:
        rho_spec = _load_json(args.rho)
        data = ops.op_cactus(poset_spec=_poset_arg(args.cluster),
                             rho_classes_spec=rho_spec["classes"])
    else:
        data = ops.op_cactus(cluster_data=_load_json(args.cluster))
    _emit(args, data, [
        f"classes: {data['classes']}",
        f"disks: {data['disk_count']}",
        f"tree edges: {data['tree']}",
    ])
    return EXIT_OK


def _cmd_render(args) -> int:
    svg = ops.op_render(_load_json(args.cluster), window=args.window)
    with open(args.out, "w") as fh:
        fh.write(svg)
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"schema_version": ops.SCHEMA_VERSION,
                          "out": args.out, "bytes": len(svg)},
                         indent=2, sort_keys=True))
    else:
        print(f"wrote {args.out} ({len(svg)} bytes)")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(state_dir=args.state_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cycloset")
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate-cocycle")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_validate_cocycle)

    s = sub.add_parser("covering")
    s.add_argument("file")
    s.add_argument("--radius", type=int, default=2)
    s.set_defaults(fn=_cmd_covering)

    s = sub.add_parser("pco")
    s.add_argument("file")
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(fn=_cmd_pco)

    s = sub.add_parser("search-pco")
    s.add_argument("file")
    s.add_argument("--m", type=int, default=None)
    s.add_argument("--rmax", type=int, default=3)
    s.add_argument("--cap", type=int, default=3)
    s.add_argument("--budget", type=int, default=2_000_000)
    s.set_defaults(fn=_cmd_search_pco)

    s = sub.add_parser("clusters")
    s.add_argument("poset")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    s.set_defaults(fn=_cmd_clusters)

    s = sub.add_parser("mutate")
    s.add_argument("--cluster", required=True)
    s.add_argument("--arc", required=True)
    s.set_defaults(fn=_cmd_mutate)

    s = sub.add_parser("exchange-graph")
    s.add_argument("poset")
    s.add_argument("--seed")
    s.add_argument("--budget", type=int, default=10000)
    s.add_argument("--dot")
    s.set_defaults(fn=_cmd_exchange_graph)

    s = sub.add_parser("homdim")
    s.add_argument("poset")
    s.add_argument("--from", dest="frm", required=True)
    s.add_argument("--to", required=True)
    s.add_argument("--ext", action="store_true")
    s.set_defaults(fn=_cmd_homdim)

    s = sub.add_parser("theta")
    s.add_argument("poset")
    s.add_argument("--theta", required=True)
    s.add_argument("--maximal", action="store_true")
    s.add_argument("--count", action="store_true")
    s.add_argument("--list", action="store_true")
    s.add_argument("--seed")
    s.add_argument("--budget", type=int, default=1000)
    s.set_defaults(fn=_cmd_theta)

    s = sub.add_parser("embed-j")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=_cmd_embed_j)

    s = sub.add_parser("triangulation-check")
    s.add_argument("cluster")
    s.set_defaults(fn=_cmd_triangulation_check)

    s = sub.add_parser("cactus")
    s.add_argument("cluster", help="cluster file, or poset when --rho is given")
    s.add_argument("--rho")
    s.set_defaults(fn=_cmd_cactus)

    s = sub.add_parser("render")
    s.add_argument("cluster")
    s.add_argument("--out", required=True)
    s.add_argument("--window", type=int, default=6)
    s.set_defaults(fn=_cmd_render)

    s = sub.add_parser("serve")
    s.add_argument("--port", type=int, default=8787)
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--state-dir", default=None)
    s.set_defaults(fn=_cmd_serve)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ops.ValidationFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, KeyError, FileNotFoundError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
