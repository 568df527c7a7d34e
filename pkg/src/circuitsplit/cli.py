"""Command-line interface: ``circuitsplit <command> FILE [options]``.

Files are JSON: a network is an object with ``boundary``, a matrix is a list of
rows of exact strings, a split system is an object with ``parts``.  Output is
JSON with sorted keys unless ``--emit`` asks for a table or a picture.
Exit codes: 0 success, 1 domain error (JSON message on stderr), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import render
from .core.embedding import validate_embedding
from .core.matrix import ExtMatrix, parse_matrix
from .core.network import CircularNetwork, parse_network, serialize_network
from .core.systems import CompactifiedSplitSystem, parse_split_system
from .duality import medial_strands, planar_dual
from .electrical import equivalent, kron_reduce, resistance_matrix, response_matrix
from .enumeration import (CELLS_MAX_N, PTOLEMY_MAX_N, SERIES, SPACES, count_series,
                          enumerate_cells, enumeration_table, format_table)
from .errors import CircuitSplitError
from .generate import cactus_corpus, planar_corpus, random_split_system
from .maps import GROVE_MAX_EDGES, graphical_system, rho, sigma, xi, xi_prime
from .plabic import planarity_obstruction, plabic_tiling
from .splits import ORDER_SEARCH_MAX_N, find_circular_order, is_kalmanson, metric_of_splits, split_decomposition

UNSAFE = 10 ** 6


class UsageError(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _matrix_json(m: ExtMatrix):
    rows = [json.dumps(r) for r in m.to_lists()]
    return "[\n  " + ",\n  ".join(rows) + "\n]\n"


def load(path):
    """Read a network, matrix or split system from a JSON file ('-' for stdin)."""
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    data = json.loads(text)
    if isinstance(data, list):
        return parse_matrix(data)
    if isinstance(data, dict) and "boundary" in data:
        return parse_network(data)
    if isinstance(data, dict) and "parts" in data:
        return parse_split_system(data)
    raise CircuitSplitError(f"{path}: not a network, matrix or split system")


def _expect(obj, kinds, what):
    if not isinstance(obj, kinds):
        names = " or ".join(k.__name__ for k in (kinds if isinstance(kinds, tuple) else (kinds,)))
        raise CircuitSplitError(f"{what} needs a {names} input, got {type(obj).__name__}")
    return obj


def _order(arg, w, max_n):
    if arg in (None, "clockwise"):
        return None
    if arg == "auto":
        found = find_circular_order(w, max_n)
        if found is None:
            raise CircuitSplitError("no circular order makes the matrix Kalmanson")
        return found
    try:
        return tuple(int(x) for x in arg.split(","))
    except ValueError:
        raise UsageError(f"bad --order {arg!r}: use clockwise, auto or a comma list") from None


def _system_table(sys_: CompactifiedSplitSystem):
    lines = []
    for p in sys_.parts:
        lines.append("part " + " ".join(map(str, p.order)))
        for side, w in p.splits:
            lines.append(f"  {{{','.join(map(str, sorted(side)))}}}  {w}")
    return "\n".join(lines) + "\n"


def _emit_matrix(m, emit):
    if emit == "table":
        return m.to_table() + "\n"
    return _matrix_json(m)


def _emit_system(s, emit):
    return _system_table(s) if emit == "table" else _dump(s.to_dict())


def cmd_response(args):
    net = _expect(load(args.file), CircularNetwork, "response")
    return _emit_matrix(response_matrix(net), args.emit)


def cmd_resistance(args):
    src = _expect(load(args.file), (CircularNetwork, ExtMatrix), "resistance")
    return _emit_matrix(resistance_matrix(src), args.emit)


def cmd_kron(args):
    net = _expect(load(args.file), CircularNetwork, "kron")
    red = kron_reduce(net)
    if args.emit == "table":
        return _emit_matrix(response_matrix(net), "table")
    if args.emit in ("dot", "svg"):
        return _picture(red.to_network(), args.emit)
    return _dump(red.to_dict())


def _as_resistance(src):
    return resistance_matrix(src) if isinstance(src, CircularNetwork) else src


def cmd_kalmanson(args):
    w = _as_resistance(_expect(load(args.file), (CircularNetwork, ExtMatrix), "kalmanson"))
    order = _order(args.order, w, args.max_n(ORDER_SEARCH_MAX_N))
    report = is_kalmanson(w, order)
    out = report.to_dict()
    out["order"] = list(order) if order else list(range(1, w.n + 1))
    return _dump(out)


def cmd_map(args):
    src = load(args.file)
    if args.kind in ("xi", "xi-prime"):
        src = _expect(src, (CircularNetwork, ExtMatrix), args.kind)
        result = xi(src) if args.kind == "xi" else xi_prime(src)
    elif args.kind == "sigma":
        src = _expect(src, CircularNetwork, "sigma")
        result = sigma(src, max_edges=args.max_n(GROVE_MAX_EDGES))
    else:
        w = _as_resistance(_expect(src, (CircularNetwork, ExtMatrix), "rho"))
        result = rho(w, _order(args.order, w, args.max_n(ORDER_SEARCH_MAX_N)))
    return _emit_system(result, args.emit)


def _picture(net, emit, title="network"):
    return render.network_dot(net, title) if emit == "dot" else render.network_svg(net, title)


def cmd_dual(args):
    net = _expect(load(args.file), CircularNetwork, "dual")
    d = planar_dual(net)
    if args.emit in ("dot", "svg"):
        return _picture(d, args.emit, "dual")
    return serialize_network(d) + "\n"


def cmd_strands(args):
    net = _expect(load(args.file), CircularNetwork, "strands")
    diagram = medial_strands(net)
    if args.emit == "dot":
        return render.strands_dot(diagram, net)
    if args.emit == "svg":
        return render.strands_svg(diagram, net)
    return _dump(diagram.to_dict())


def cmd_tiling(args):
    src = load(args.file)
    if isinstance(src, CompactifiedSplitSystem):
        system, prime = src, args.convention == "xi-prime"
    else:
        m = response_matrix(src) if isinstance(src, CircularNetwork) else src
        system, prime = graphical_system(m, prime=True), True
    tiling = plabic_tiling(system, prime=prime)
    if args.emit == "svg":
        return render.tiling_svg(tiling, system.n)
    out = _dump(tiling.to_dict())
    if not tiling.ok:
        raise CircuitSplitError("split system is not Ptolemy-closed", out)
    return out


def cmd_obstruction(args):
    src = _expect(load(args.file), (CircularNetwork, ExtMatrix), "obstruction")
    m = response_matrix(src) if isinstance(src, CircularNetwork) else src
    return _dump(planarity_obstruction(m).to_dict())


def cmd_embedding(args):
    net = _expect(load(args.file), CircularNetwork, "embedding")
    return _dump(validate_embedding(net).to_dict())


def cmd_enumerate(args):
    limit = args.max_n(PTOLEMY_MAX_N)
    if args.what == "table":
        rows = enumeration_table(args.n)
        if args.emit == "table":
            return format_table(rows) + "\n"
        return _dump({"n": args.n, "series": [r.to_dict() for r in rows]})
    if args.what not in SERIES:
        raise UsageError(f"unknown series {args.what!r}; choose from table, {', '.join(SERIES)}")
    if args.what in ("xiImage", "faithfulBar") and args.n > limit:
        raise CircuitSplitError(f"Ptolemy enumeration is limited to n <= {limit}; pass --unsafe-size")
    s = count_series(args.what, args.n)
    if args.emit == "table":
        return format_table([s]) + "\n"
    return _dump({"name": s.name, "n": args.n, "count": s[args.n], "terms": list(s.terms)})


def cmd_cells(args):
    if args.space not in SPACES:
        raise UsageError(f"unknown space {args.space!r}; choose from {', '.join(SPACES)}")
    report = enumerate_cells(args.space, args.n, max_n=args.max_n(CELLS_MAX_N))
    if args.emit == "table":
        dims = range(len(report.f_vector))
        head = "dim    " + " ".join(f"{d:>6}" for d in dims)
        body = "cells  " + " ".join(f"{c:>6}" for c in report.f_vector)
        return f"{head}\n{body}\ntotal  {report.total}\n"
    return _dump(report.to_dict())


def selftest(seed, count):
    """Random cross-checks of the independent pipelines; returns a JSON-ready dict."""
    failures = []
    nets = planar_corpus(seed, count)
    cacti = cactus_corpus(seed + 1, max(1, count // 3))
    for k, net in enumerate(nets + cacti):
        tag = f"network {k}"
        d = planar_dual(net)
        checks = {
            "xi = rho(dual)": lambda: xi(net) == rho(d),
            "xi_prime(dual) = rho": lambda: xi_prime(d) == rho(net),
            "double dual": lambda: equivalent(planar_dual(d), net.relabel(1)),
            "no obstruction": lambda: planarity_obstruction(response_matrix(net)).verdict == "NO_OBSTRUCTION",
        }
        if k < len(nets):
            checks["sigma = rho"] = lambda: sigma(net) == rho(net)
        for name, fn in checks.items():
            if not fn():
                failures.append({"check": name, "case": tag, "network": net.to_dict()})
    rng = random.Random(seed)
    for k in range(count):
        s = random_split_system(rng)
        if split_decomposition(metric_of_splits(s), s.order) != s:
            failures.append({"check": "split round trip", "case": f"system {k}", "system": s.to_dict()})
    return {"seed": seed, "networks": len(nets) + len(cacti), "systems": count, "failures": failures,
            "ok": not failures}


def cmd_selftest(args):
    seed = int(os.environ.get("CIRCUITSPLIT_SEED", "0"))
    report = selftest(seed, args.count)
    out = _dump(report)
    if not report["ok"]:
        raise CircuitSplitError("selftest failed", out)
    return out


EMITS = {
    "response": ("json", "table"), "resistance": ("json", "table"), "kron": ("json", "table", "dot", "svg"),
    "kalmanson": ("json",), "map": ("json", "table"), "dual": ("json", "dot", "svg"),
    "strands": ("json", "dot", "svg"), "tiling": ("json", "svg"), "obstruction": ("json",),
    "embedding": ("json",), "enumerate": ("json", "table"), "cells": ("json", "table"), "selftest": ("json",),
}


def build_parser():
    p = argparse.ArgumentParser(prog="circuitsplit", description="Circular electrical networks and split systems.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", default="json", choices=("json", "table", "dot", "svg"))
    common.add_argument("--unsafe-size", action="store_true", help="lift the desk-scale size guards")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file:
            sp.add_argument("file", help="input JSON file, or - for stdin")
        sp.set_defaults(func=fn)
        return sp

    add("response", cmd_response, "response matrix of a network")
    add("resistance", cmd_resistance, "resistance matrix of a network or response matrix")
    add("kron", cmd_kron, "Kron reduction of a network")
    add("kalmanson", cmd_kalmanson, "Kalmanson test of a resistance matrix").add_argument("--order")
    sp = sub.add_parser("map", parents=[common], help="split system of a network or matrix")
    sp.add_argument("kind", choices=("xi", "xi-prime", "sigma", "rho"))
    sp.add_argument("file")
    sp.add_argument("--order", help="clockwise (default), auto, or a comma-separated cyclic order")
    sp.set_defaults(func=cmd_map)
    add("dual", cmd_dual, "planar dual of an embedded network")
    add("strands", cmd_strands, "medial strands and stub matching")
    add("tiling", cmd_tiling, "plabic tiling of a split system, network or response matrix").add_argument(
        "--convention", choices=("xi", "xi-prime"), default="xi-prime",
        help="how splits of a split-system file are drawn as chords")
    add("obstruction", cmd_obstruction, "Ptolemy planarity obstruction of a response matrix")
    add("embedding", cmd_embedding, "validate the rotation system of a network")
    sp = add("enumerate", cmd_enumerate, "count series (or 'table' for all)", file=False)
    sp.add_argument("what")
    sp.add_argument("--n", type=int, required=True)
    sp = add("cells", cmd_cells, "f-vector of a cell complex", file=False)
    sp.add_argument("space")
    sp.add_argument("--n", type=int, required=True)
    sp = add("selftest", cmd_selftest, "seeded random cross-checks (seed from CIRCUITSPLIT_SEED)", file=False)
    sp.add_argument("--count", type=int, default=30)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.emit not in EMITS[args.command]:
        parser.error(f"{args.command} does not support --emit {args.emit}")
    args.max_n = (lambda default: UNSAFE) if args.unsafe_size else (lambda default: default)
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        parser.error("--n must be nonnegative")
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (CircuitSplitError, ValueError, ArithmeticError, OSError) as exc:
        text = str(exc.args[0]) if isinstance(exc, CircuitSplitError) and exc.args else str(exc)
        msg = {"error": type(exc).__name__, "message": text}
        if getattr(exc, "witness", None) is not None:
            msg["witness"] = list(exc.witness)
        if isinstance(exc, CircuitSplitError) and len(exc.args) > 1:
            sys.stdout.write(exc.args[1])
        sys.stderr.write(_dump(msg))
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
