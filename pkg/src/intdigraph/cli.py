"""Command-line interface.

Every solving subcommand re-verifies its own output and reports
``certificate_checked``; exit codes distinguish a solved instance (0), a
proven negative answer such as no-kernel or an ordering violation (2),
and an error (1).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import generators, oracle
from .domination import red_blue_min_dominating, min_absorbing_reflexive, \
    min_dominating_reflexive
from .errors import ParseError
from .fileio import (detect_kind, emit_digraph, emit_interval_rep,
                     parse_bigraph_rep, parse_digraph, parse_interval_rep,
                     parse_ordering, parse_vertex_set, parse_weights)
from .graphs import Digraph, underlying_undirected, verify_set
from .independent import max_independent_duf
from .intervals import extract_duf_ordering, normalize, realize_digraph
from .kernels import kernel_linear, optimal_kernel_adjusted, optimal_kernel_duf
from .ordering import (StructureWitness, build_representation,
                       check_reflexive_interval_ordering,
                       verify_cocomparability_ordering, verify_duf_ordering)
from .pointpoint import (AntiWalkWitness, PointRep, SubdivisionMap,
                         find_anti_directed_walk, k_subdivision, lift_set,
                         project_set, recognize_point_point)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NONEXISTENT = 2


def _read(path: str) -> str:
    return Path(path).read_text()


def _witness_json(w):
    if isinstance(w, StructureWitness):
        return {"kind": w.kind, "vertices": list(w.vertices),
                "positions": list(w.positions)}
    if isinstance(w, AntiWalkWitness):
        return asdict(w)
    if isinstance(w, tuple):
        return {"triple": list(w)}
    return w


def _cert_payload(cert) -> dict:
    payload = {"status": "ok"}
    payload.update(cert.to_json())
    return payload


def _load_weights(args, n: int):
    if getattr(args, "weights", None) is None:
        return None
    w = parse_weights(_read(args.weights))
    if len(w) != n:
        raise ValueError(f"weights file has {len(w)} entries, expected {n}")
    return w


def _rep_and_graph(text: str):
    rep = normalize(parse_interval_rep(text))
    return rep, realize_digraph(rep)


def _cmd_kernel(args):
    rep = normalize(parse_interval_rep(_read(args.rep)))
    return _cert_payload(kernel_linear(rep)), EXIT_OK


def _optimal_kernel(args, objective: str):
    texts = [_read(p) for p in args.inputs]
    kinds = [detect_kind(t) for t in texts]
    if kinds == ["intervals"]:
        if args.adjusted:
            if args.weights:
                raise ValueError("the adjusted solver does not take weights")
            cert = optimal_kernel_adjusted(normalize(parse_interval_rep(texts[0])),
                                           objective)
        else:
            rep, g = _rep_and_graph(texts[0])
            ordering = extract_duf_ordering(rep)
            cert = optimal_kernel_duf(g, ordering, objective, _load_weights(args, g.n))
    elif kinds == ["digraph", "ordering"]:
        g = parse_digraph(texts[0])
        ordering = parse_ordering(texts[1])
        cert = optimal_kernel_duf(g, ordering, objective, _load_weights(args, g.n))
    else:
        raise ValueError("expected an interval file, or a digraph plus an ordering; "
                         f"got {kinds}")
    if cert is None:
        return {"status": "no-kernel"}, EXIT_NONEXISTENT
    return _cert_payload(cert), EXIT_OK


def _cmd_absorbing(args):
    rep = normalize(parse_interval_rep(_read(args.rep)))
    return _cert_payload(min_absorbing_reflexive(rep)), EXIT_OK


def _cmd_dominating(args):
    rep = normalize(parse_interval_rep(_read(args.rep)))
    return _cert_payload(min_dominating_reflexive(rep)), EXIT_OK


def _cmd_mis(args):
    g = parse_digraph(_read(args.digraph))
    ordering = parse_ordering(_read(args.ordering))
    cert = max_independent_duf(g, ordering, _load_weights(args, g.n))
    return _cert_payload(cert), EXIT_OK


def _cmd_red_blue(args):
    rep = parse_bigraph_rep(_read(args.bigraph))
    cert = red_blue_min_dominating(rep)
    if cert is None:
        return {"status": "no-dominating-set"}, EXIT_NONEXISTENT
    return _cert_payload(cert), EXIT_OK


def _cmd_recognize_pp(args):
    g = parse_digraph(_read(args.digraph))
    result = recognize_point_point(g)
    if isinstance(result, PointRep):
        return {"status": "point-point",
                "points": {"s": list(result.s_points),
                           "t": list(result.t_points)}}, EXIT_OK
    return {"status": "not-point-point",
            "witness": _witness_json(result)}, EXIT_NONEXISTENT


def _cmd_check_ordering(args):
    g = parse_digraph(_read(args.digraph))
    ordering = parse_ordering(_read(args.ordering))
    if args.kind == "duf":
        witness = verify_duf_ordering(g, ordering)
    elif args.kind == "reflexive":
        witness = check_reflexive_interval_ordering(g, ordering)
    elif args.kind == "cocomp":
        witness = verify_cocomparability_ordering(underlying_undirected(g), ordering)
    else:
        raise ValueError(f"unknown ordering kind {args.kind!r}")
    if witness is None:
        return {"status": "valid", "kind": args.kind}, EXIT_OK
    return {"status": "violation", "kind": args.kind,
            "witness": _witness_json(witness)}, EXIT_NONEXISTENT


def _cmd_build_rep(args):
    g = parse_digraph(_read(args.digraph))
    ordering = parse_ordering(_read(args.ordering))
    text = emit_interval_rep(build_representation(g, ordering))
    if args.json:
        return {"status": "ok", "instance": text}, EXIT_OK
    return text, EXIT_OK


def _serialize_map(sub: SubdivisionMap) -> dict:
    return {
        "k": sub.k,
        "origin": emit_digraph(sub.origin),
        "host": emit_digraph(sub.host),
        "paths": {f"{u} {v}": list(path) for (u, v), path in sorted(sub.paths.items())},
    }


def _parse_map(text: str) -> SubdivisionMap:
    data = json.loads(text)
    paths = {}
    for key, ids in data["paths"].items():
        u, v = key.split()
        paths[(int(u), int(v))] = tuple(ids)
    return SubdivisionMap(origin=parse_digraph(data["origin"]),
                          host=parse_digraph(data["host"]),
                          k=int(data["k"]), paths=paths)


def _cmd_subdivide(args):
    g = parse_digraph(_read(args.digraph))
    sub = k_subdivision(g, args.k)
    return {"status": "ok", "map": _serialize_map(sub)}, EXIT_OK


def _cmd_lift(args):
    sub = _parse_map(_read(args.map))
    s = parse_vertex_set(_read(args.set))
    lifted = lift_set(sub, s, args.kind)
    return {"status": "ok", "set": list(lifted), "size": len(lifted)}, EXIT_OK


def _cmd_project(args):
    sub = _parse_map(_read(args.map))
    s = parse_vertex_set(_read(args.set))
    projected = project_set(sub, s, args.kind)
    return {"status": "ok", "set": list(projected), "size": len(projected)}, EXIT_OK


def _cmd_verify(args):
    text = _read(args.instance)
    kind = detect_kind(text)
    if kind == "digraph":
        g = parse_digraph(text)
    elif kind == "intervals":
        g = realize_digraph(parse_interval_rep(text))
    else:
        raise ValueError(f"verify expects a digraph or intervals file, got {kind}")
    s = parse_vertex_set(_read(args.set))
    cert = verify_set(g, s, args.kind)
    payload = {"status": "ok", "mode": args.kind, "set": list(cert.vertices),
               "checks": dict(cert.checks), "pass": cert.all_checks_pass()}
    return payload, EXIT_OK if cert.all_checks_pass() else EXIT_NONEXISTENT


def _budget(args) -> oracle.OracleBudget:
    if getattr(args, "budget_n", None) is None:
        return oracle.DEFAULT_BUDGET
    b = args.budget_n
    return oracle.OracleBudget(subset_n=b, perm_n=b, k33_n=b)


def _oracle_digraph(text: str) -> Digraph:
    kind = detect_kind(text)
    if kind == "digraph":
        return parse_digraph(text)
    if kind == "intervals":
        return realize_digraph(parse_interval_rep(text))
    raise ValueError(f"expected a digraph or intervals file, got {kind}")


def _cmd_oracle(args):
    budget = _budget(args)
    if args.problem == "kernel":
        g = _oracle_digraph(_read(args.inputs[0]))
        objective = args.objective or "exists"
        cert = oracle.brute_kernel(g, objective, budget=budget)
        if cert is None:
            return {"status": "no-kernel"}, EXIT_NONEXISTENT
        return _cert_payload(cert), EXIT_OK
    if args.problem == "absorbing":
        g = _oracle_digraph(_read(args.inputs[0]))
        return _cert_payload(oracle.brute_min_absorbing(g, budget=budget)), EXIT_OK
    if args.problem == "independent":
        g = _oracle_digraph(_read(args.inputs[0]))
        w = _load_weights(args, g.n)
        return _cert_payload(oracle.brute_max_independent(g, w, budget=budget)), EXIT_OK
    if args.problem == "red-blue":
        rep = parse_bigraph_rep(_read(args.inputs[0]))
        cert = oracle.brute_red_blue(rep, budget=budget)
        if cert is None:
            return {"status": "no-dominating-set"}, EXIT_NONEXISTENT
        return _cert_payload(cert), EXIT_OK
    if args.problem == "k33":
        g = _oracle_digraph(_read(args.inputs[0]))
        witness = oracle.find_induced_k33(underlying_undirected(g), budget=budget)
        if witness is None:
            return {"status": "none"}, EXIT_NONEXISTENT
        return {"status": "ok", "parts": [list(witness[0]), list(witness[1])]}, EXIT_OK
    if args.problem == "ordering-search":
        g = _oracle_digraph(_read(args.inputs[0]))
        kind = args.kind or "duf"
        if kind == "reflexive":
            kind = "reflexive-interval"
        found = oracle.brute_ordering_search(g, kind, budget=budget)
        if found is None:
            return {"status": "no-ordering", "kind": kind}, EXIT_NONEXISTENT
        return {"status": "ok", "kind": kind, "ordering": list(found.perm)}, EXIT_OK
    if args.problem == "anti-walk":
        g = _oracle_digraph(_read(args.inputs[0]))
        witness = find_anti_directed_walk(g, brute=True)
        if witness is None:
            return {"status": "none"}, EXIT_NONEXISTENT
        return {"status": "ok", "witness": _witness_json(witness)}, EXIT_OK
    raise ValueError(f"unknown oracle problem {args.problem!r}")


def _cmd_gen(args):
    seed = args.seed
    if args.gen_kind == "reflexive-interval":
        from .fileio import emit_interval_rep as emit
        instance = emit(generators.gen_reflexive_interval(
            args.n, seed, grid=args.grid, max_len=args.max_len))
    elif args.gen_kind == "interval-bigraph":
        from .fileio import emit_bigraph_rep as emit_b
        instance = emit_b(generators.gen_interval_bigraph(
            args.a, args.b, seed, grid=args.grid, max_len=args.max_len))
    elif args.gen_kind == "random-digraph":
        instance = emit_digraph(generators.gen_random_digraph(
            args.n, args.p, args.loop_p, seed))
    elif args.gen_kind == "subdivided":
        sub = generators.gen_subdivided(args.n, args.p, args.k, seed)
        instance = emit_digraph(sub.host)
    else:
        raise ValueError(f"unknown generator kind {args.gen_kind!r}")
    if args.json:
        return {"status": "ok", "instance": instance}, EXIT_OK
    return instance, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intdigraph",
        description="Kernels, domination and independent sets in reflexive "
                    "interval digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", help="kernel of a reflexive interval representation")
    p.add_argument("rep")
    p.set_defaults(func=_cmd_kernel)

    for name, objective in (("min-kernel", "min"), ("max-kernel", "max")):
        p = sub.add_parser(name, help=f"{objective}imum kernel (DUF DP)")
        p.add_argument("inputs", nargs="+",
                       help="an intervals file, or a digraph file plus an ordering file")
        p.add_argument("--adjusted", action="store_true",
                       help="use the O(n^2) solver for adjusted representations")
        p.add_argument("--weights", help="file of per-vertex integer weights")
        p.set_defaults(func=lambda a, _obj=objective: _optimal_kernel(a, _obj))

    p = sub.add_parser("absorbing", help="minimum absorbing set (reflexive rep)")
    p.add_argument("rep")
    p.set_defaults(func=_cmd_absorbing)

    p = sub.add_parser("dominating", help="minimum dominating set (reflexive rep)")
    p.add_argument("rep")
    p.set_defaults(func=_cmd_dominating)

    p = sub.add_parser("mis", help="maximum independent set (digraph + DUF ordering)")
    p.add_argument("digraph")
    p.add_argument("ordering")
    p.add_argument("--weights")
    p.set_defaults(func=_cmd_mis)

    p = sub.add_parser("red-blue", help="minimum A-dominating subset of B")
    p.add_argument("bigraph")
    p.set_defaults(func=_cmd_red_blue)

    p = sub.add_parser("recognize-pp", help="point-point recognition with witness")
    p.add_argument("digraph")
    p.set_defaults(func=_cmd_recognize_pp)

    p = sub.add_parser("check-ordering", help="validate an ordering")
    p.add_argument("digraph")
    p.add_argument("ordering")
    p.add_argument("--kind", choices=("duf", "reflexive", "cocomp"), required=True)
    p.set_defaults(func=_cmd_check_ordering)

    p = sub.add_parser("build-rep", help="interval representation from an ordering")
    p.add_argument("digraph")
    p.add_argument("ordering")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_build_rep)

    p = sub.add_parser("subdivide", help="k-subdivision of a loopless digraph")
    p.add_argument("digraph")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_subdivide)

    for name, fn in (("lift", _cmd_lift), ("project", _cmd_project)):
        p = sub.add_parser(name, help=f"{name} a kernel/absorbing set through a subdivision")
        p.add_argument("map", help="JSON map emitted by 'subdivide'")
        p.add_argument("set", help="file of space-separated vertex ids")
        p.add_argument("--kind", choices=("kernel", "absorbing"), default="kernel")
        p.set_defaults(func=fn)

    p = sub.add_parser("oracle", help="budgeted brute-force reference solvers")
    p.add_argument("problem", choices=("kernel", "absorbing", "independent",
                                       "red-blue", "k33", "ordering-search",
                                       "anti-walk"))
    p.add_argument("inputs", nargs="+")
    p.add_argument("--objective", choices=("exists", "min", "max"))
    p.add_argument("--kind", choices=("duf", "reflexive"))
    p.add_argument("--weights")
    p.add_argument("--budget-n", type=int, dest="budget_n")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="run the definitional check on a set")
    p.add_argument("instance", help="digraph or intervals file")
    p.add_argument("set", help="file of space-separated vertex ids")
    p.add_argument("--kind", required=True,
                   choices=("independent", "absorbing", "dominating", "kernel",
                            "solution"))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="seeded random instance generators")
    p.add_argument("gen_kind", metavar="kind",
                   choices=("reflexive-interval", "interval-bigraph",
                            "random-digraph", "subdivided"))
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--a", type=int, default=4)
    p.add_argument("--b", type=int, default=4)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--loop-p", type=float, default=0.0, dest="loop_p")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--grid", type=int)
    p.add_argument("--max-len", type=int, dest="max_len")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except ParseError as exc:
        print(json.dumps({"status": "error", "error": str(exc)}))
        return EXIT_ERROR
    except (ValueError, RuntimeError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(json.dumps({"status": "error",
                          "error": f"{type(exc).__name__}: {exc}"}))
        return EXIT_ERROR
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
