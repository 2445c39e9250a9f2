"""Command-line front end.

One subcommand per library operation, grouped as ``degseq``, ``hs``, ``mp``,
``norm`` and ``cx``.  Exit codes follow a fixed convention:

* 0 -- success / affirmative verdict
* 1 -- negative verdict (e.g. "not graphic", "no good bisection")
* 2 -- input error (bad files, bad flags, instances over enumeration caps)
* 3 -- internal invariant breach: a certified guarantee failed, which would
  be counterexample material and is never downgraded to a warning

Output is plain text by default; ``--format json`` switches to one JSON
document on stdout.  Exact rationals are rendered as decimal strings when
they terminate and as "p/q" otherwise, never as lossy floats.  Graph files
and vertex lists are 0-based externally, as documented in ``graph_core``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hs_realization
from .counterexamples import ab_pairs, pair_sequence, triple_clique, verify_thm_2n
from .degree_sequences import is_graphic, lay_off, lay_off_with_order, parse_degree_file
from .errors import CounterexampleError
from .graph_core import (
    bisection_slack,
    format_graph,
    parity_bisection,
    partition_json,
    read_graph_file,
)
from .judicious_bounds import (
    exact_min_norm,
    f_lambda_k,
    find_judicious_bipartition,
    k_partition_min_norm,
    norm_bound,
    norm_bound_exact,
)
from .multipartite import (
    MultipartiteSpec,
    complete_multipartite,
    find_good_bisection,
    floor_good_bisection,
    good_bisection_oracle,
    good_subset_search,
    minus_edge_oracle,
)

ORACLE_PRINT_CAP = 10**6


def fraction_str(fr: Fraction) -> str:
    """Decimal string when the fraction terminates in base 10, else p/q."""
    den = fr.denominator
    while den % 2 == 0:
        den //= 2
    while den % 5 == 0:
        den //= 5
    if den != 1:
        return f"{fr.numerator}/{fr.denominator}"
    scale = 0
    den = fr.denominator
    while den % 2 == 0:
        den //= 2
        scale += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    digits = max(scale, fives)
    scaled = fr.numerator * 10**digits // fr.denominator
    if digits == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    text = f"{scaled:0{digits + 1}d}"
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _jsonify(obj):
    if isinstance(obj, Fraction):
        return fraction_str(obj)
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [_jsonify(v) for v in sorted(obj)]
    return obj


def _emit(args, data: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(_jsonify(data), sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _parse_lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse lambda {text!r}; use e.g. 2, 1.5 or 3/2")


def _read_sequence(path):
    with open(path) as fh:
        seq, reordered = parse_degree_file(fh.read())
    if reordered:
        print("warning: degree sequence reordered to nonincreasing", file=sys.stderr)
    return seq


# --------------------------------------------------------------------------
# handlers
# --------------------------------------------------------------------------


def _cmd_degseq_check(args) -> int:
    seq = _read_sequence(args.seqfile)
    verdict = is_graphic(seq)
    _emit(args, {"sequence": list(seq), "graphic": verdict},
          ["graphic" if verdict else "not graphic"])
    return 0 if verdict else 1


def _cmd_degseq_layoff(args) -> int:
    seq = _read_sequence(args.seqfile)
    if args.plain:
        reduced = lay_off(seq, args.index)
        _emit(args, {"reduced": list(reduced)}, [" ".join(map(str, reduced))])
    else:
        res = lay_off_with_order(seq, args.index)
        _emit(
            args,
            {
                "reduced": list(res.reduced.values),
                "affected": sorted(res.affected),
                "removed_index": res.removed_index,
            },
            [
                " ".join(map(str, res.reduced.values)),
                "affected: " + " ".join(map(str, sorted(res.affected))),
            ],
        )
    return 0


def _cmd_hs_realize(args) -> int:
    seq = _read_sequence(args.seqfile)
    cert = hs_realization.build_realization(seq)
    if not hs_realization.verify_certificate(cert, seq):
        raise CounterexampleError(
            "certificate failed verification after construction", pi=seq
        )
    graph_text = format_graph(cert.graph)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(graph_text)
    else:
        sys.stdout.write(graph_text)
    print(json.dumps({"slacks": list(cert.slacks), "ok": True}))
    return 0


def _cmd_hs_verify(args) -> int:
    graph = read_graph_file(args.graphfile)
    slacks = bisection_slack(graph, parity_bisection(graph))
    ok = all(s >= 0 for s in slacks)
    print(json.dumps({"slacks": slacks, "ok": ok}))
    return 0 if ok else 1


def _spec_from_args(args) -> MultipartiteSpec:
    return MultipartiteSpec(tuple(args.parts))


def _cmd_mp_good(args) -> int:
    spec = _spec_from_args(args)
    if spec.order % 2 == 0:
        _emit(args, {"even_order": True, "good_bisection": True},
              ["even order: good bisection always exists"])
        return 0
    witness = good_subset_search(spec)
    space = 1
    for r in spec.parts:
        space *= r + 1
    oracle_counts = None
    oracle_ran = space <= ORACLE_PRINT_CAP
    if oracle_ran:
        oracle_counts = good_bisection_oracle(spec)
        if (witness is None) != (oracle_counts is None):
            raise CounterexampleError(
                "witness search and exhaustive oracle disagree",
                parts=spec.parts, witness=witness, oracle=oracle_counts,
            )
    data = {
        "witness": None if witness is None else {
            "A": sorted(witness.a), "Aprime": sorted(witness.a_prime), "n": witness.n,
        },
        "oracle": ("skipped" if not oracle_ran else
                   ("none" if oracle_counts is None else list(oracle_counts.x))),
    }
    lines = []
    if witness is None:
        lines.append("none")
    else:
        lines.append(
            f"witness: A={sorted(witness.a)} A'={sorted(witness.a_prime)} n={witness.n}"
        )
    if oracle_ran:
        lines.append(
            "oracle: none" if oracle_counts is None
            else f"oracle: counts {list(oracle_counts.x)}"
        )
    _emit(args, data, lines)
    return 0 if witness is not None else 1


def _cmd_mp_bisect(args) -> int:
    spec = _spec_from_args(args)
    graph = complete_multipartite(spec)
    bis = find_good_bisection(spec)
    kind = "good"
    if bis is None:
        bis = floor_good_bisection(spec)
        kind = "floor-good"
    payload = partition_json(graph, bis.bipartition)
    payload["kind"] = kind
    _emit(args, payload, [f"{kind} bisection", json.dumps(_jsonify(payload))])
    return 0


def _cmd_mp_minus_edge(args) -> int:
    spec = _spec_from_args(args)
    found = minus_edge_oracle(spec, (args.parts_pair[0], args.parts_pair[1]))
    if found is None:
        _emit(args, {"good_bisection": None}, ["none"])
        return 1
    data = {
        "good_bisection": {
            "counts": list(found.counts),
            "u_side": found.u_side,
            "w_side": found.w_side,
        }
    }
    _emit(args, data, [
        f"counts {list(found.counts)} u_side={found.u_side} w_side={found.w_side}"
    ])
    return 0


def _cmd_norm_min(args) -> int:
    graph = read_graph_file(args.graphfile)
    lam = _parse_lambda(args.lam)
    if args.k is not None:
        return _kpart_common(args, graph, args.k, lam)
    res = exact_min_norm(graph, lam, workers=args.threads)
    payload = partition_json(graph, res.argmin)
    payload["lambda"] = lam
    payload["value"] = res.value
    _emit(args, payload, [f"min = {res.value}", json.dumps(_jsonify(payload))])
    return 0


def _kpart_common(args, graph, k, lam) -> int:
    value, parts = k_partition_min_norm(graph, k, lam)
    payload = {
        "lambda": lam,
        "k": k,
        "value": value,
        "parts": [[v - 1 for v in part] for part in parts],
    }
    _emit(args, payload, [f"min = {value}", json.dumps(_jsonify(payload))])
    return 0


def _cmd_norm_kpart(args) -> int:
    graph = read_graph_file(args.graphfile)
    return _kpart_common(args, graph, args.k, _parse_lambda(args.lam))


def _cmd_norm_bound(args) -> int:
    lam = _parse_lambda(args.lam)
    value = norm_bound(args.m, lam)
    payload = {"m": args.m, "lambda": lam, "value": value}
    if lam.denominator == 1:
        exact = norm_bound_exact(args.m, int(lam))
        payload["exact"] = {"a": exact.a, "b": exact.b}
    fk = f_lambda_k(args.m, args.k, lam) if args.k else None
    if args.k:
        payload["f_lambda_k"] = fk
    lines = [f"bound = {value}"]
    if args.k:
        lines.append(f"f_lambda_k = {fk}")
    _emit(args, payload, lines)
    return 0


def _cmd_norm_judicious(args) -> int:
    graph = read_graph_file(args.graphfile)
    part = find_judicious_bipartition(graph, budget=args.budget)
    payload = partition_json(graph, part)
    payload["certified"] = True
    _emit(args, payload, [json.dumps(_jsonify(payload))])
    return 0


def _cmd_cx_pairs(args) -> int:
    seq = pair_sequence(args.count)
    _emit(
        args,
        {"pairs": [list(p) for p in seq.pairs]},
        [f"{i}: ({n}, {t})" for i, (n, t) in enumerate(seq.pairs)],
    )
    return 0


def _cmd_cx_graph(args) -> int:
    graph = triple_clique(args.t)
    text = format_graph(graph)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_cx_verify(args) -> int:
    pair = ab_pairs(args.index + 1)[args.index]
    verdict = verify_thm_2n(pair)
    shown = (
        verdict.enumerated_value
        if verdict.method == "enumerated"
        else verdict.e1_lower
    )
    data = {
        "pair": [pair.a, pair.b],
        "method": verdict.method,
        "value": shown,
        "bound": verdict.bound,
        "ok": verdict.ok,
    }
    _emit(args, data, [f"{verdict.method}: {shown} >= {fraction_str(verdict.bound)}"])
    if not verdict.ok:
        raise CounterexampleError(
            "heavy-side bound failed for a valid pair", pair=(pair.a, pair.b)
        )
    return 0


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jpart",
        description="judicious graph partitioning toolkit",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--threads", type=int, default=None,
        help="worker count for exhaustive scans (default: JP_THREADS or all cores)",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    degseq = sub.add_parser("degseq", help="degree-sequence operations")
    dsub = degseq.add_subparsers(dest="cmd", required=True)
    p = dsub.add_parser("check", help="is the sequence graphic?")
    p.add_argument("seqfile")
    p.set_defaults(func=_cmd_degseq_check)
    p = dsub.add_parser("layoff", help="lay off one entry")
    p.add_argument("seqfile")
    p.add_argument("-i", "--index", type=int, required=True,
                   help="1-based position to lay off")
    p.add_argument("--plain", action="store_true",
                   help="decrement lowest-index entries instead of largest values")
    p.set_defaults(func=_cmd_degseq_layoff)

    hs = sub.add_parser("hs", help="degree-sequence realizations")
    hsub = hs.add_subparsers(dest="cmd", required=True)
    p = hsub.add_parser("realize", help="realize with a good parity bisection")
    p.add_argument("seqfile")
    p.add_argument("-o", "--output", help="graph file destination (default stdout)")
    p.set_defaults(func=_cmd_hs_realize)
    p = hsub.add_parser("verify", help="recompute parity-bisection slacks")
    p.add_argument("graphfile")
    p.set_defaults(func=_cmd_hs_verify)

    mp = sub.add_parser("mp", help="complete multipartite graphs")
    msub = mp.add_subparsers(dest="cmd", required=True)
    p = msub.add_parser("good", help="good-bisection criterion + oracle")
    p.add_argument("parts", nargs="+", type=int)
    p.set_defaults(func=_cmd_mp_good)
    p = msub.add_parser("bisect", help="emit a (floor-)good bisection")
    p.add_argument("parts", nargs="+", type=int)
    p.set_defaults(func=_cmd_mp_bisect)
    p = msub.add_parser("minus-edge", help="good bisection after deleting one edge")
    p.add_argument("parts", nargs="+", type=int)
    p.add_argument("-p", "--parts-pair", nargs=2, type=int, required=True,
                   metavar=("I", "J"), help="1-based parts joined by the deleted edge")
    p.set_defaults(func=_cmd_mp_minus_edge)

    norm = sub.add_parser("norm", help="bipartition norms and bounds")
    nsub = norm.add_subparsers(dest="cmd", required=True)
    p = nsub.add_parser("min", help="exact minimum norm over bipartitions")
    p.add_argument("graphfile")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", type=int, default=None, help="minimize over k-partitions")
    p.set_defaults(func=_cmd_norm_min)
    p = nsub.add_parser("bound", help="threshold bound for m edges")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", type=int, default=None,
                   help="also report the k-partition extremal value, if defined")
    p.set_defaults(func=_cmd_norm_bound)
    p = nsub.add_parser("judicious", help="certified judicious bipartition")
    p.add_argument("graphfile")
    p.add_argument("--budget", type=int, default=200_000)
    p.set_defaults(func=_cmd_norm_judicious)
    p = nsub.add_parser("kpart", help="minimum norm over k-partitions")
    p.add_argument("graphfile")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=_cmd_norm_kpart)

    cx = sub.add_parser("cx", help="triple-clique counterexample family")
    csub = cx.add_subparsers(dest="cmd", required=True)
    p = csub.add_parser("pairs", help="the integer-pair recurrence")
    p.add_argument("-n", "--count", type=int, required=True)
    p.set_defaults(func=_cmd_cx_pairs)
    p = csub.add_parser("graph", help="emit the triple-clique graph file")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-o", "--output", help="destination (default stdout)")
    p.set_defaults(func=_cmd_cx_graph)
    p = csub.add_parser("verify", help="check the heavy-side bound for pair #i")
    p.add_argument("-i", "--index", type=int, required=True)
    p.set_defaults(func=_cmd_cx_verify)

    return parser


_PARSER = _build_parser()


def dispatch(argv: list[str]) -> int:
    """Parse and run one command, mapping failures to the exit-code contract."""
    try:
        args = _PARSER.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except CounterexampleError as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
