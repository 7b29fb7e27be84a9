"""Command-line interface: ``python3 -m simfes <command> ...``.

Exit codes: 0 success, 1 usage error or unreadable input, 2 malformed input,
3 oracle mismatch or a witness that fails verification.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .ecg import (ECGParseError, EdgeColoredGraph, format_answer, parse_ecg, parse_witness,
                  simultaneous_forest_check, verify_sfes, write_ecg)
from .ffield import DEFAULT_PRIME, PrimeField
from .generators import (HSInstance, PHSInstance, VCInstance, gen_hs, gen_phs, gen_random,
                         gen_vc3)
from .kernelizer import kernelize
from .maxsim_solver import brute_maxsim, max_simultaneous_forest, solve_maxsim
from .simfes_solver import brute_simfes, solve_simfes

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3
BENCH_HEADER = ["instance", "n", "m", "alpha", "k", "answer", "millis", "kernel_vertices"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> EdgeColoredGraph:
    return parse_ecg(_read(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _prime(args) -> int:
    try:
        return PrimeField(args.prime).p
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _nonneg(name: str, value: int | None) -> int:
    if value is None:
        raise UsageError(f"--{name} is required")
    if value < 0:
        raise UsageError(f"--{name} must be non-negative")
    return value


# ---------------------------------------------------------------- commands

def cmd_solve(args) -> int:
    G = _load_graph(args.input)
    k = _nonneg("k", args.k)
    v = solve_simfes(G, k, seed=args.seed, trials=args.trials,
                     use_kernel=not args.no_kernel, prime=_prime(args))
    _emit(format_answer(v.witness if v else None), args.output)
    if args.oracle:
        ref = brute_simfes(G, k)
        if ref.answer != v.answer:
            print(f"oracle mismatch: solver {v.answer}, oracle {ref.answer}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_maxsim(args) -> int:
    G = _load_graph(args.input)
    prime = _prime(args)
    if args.q is None:
        size, F = max_simultaneous_forest(G, prime)
        _emit(f"c max simultaneous forest size {size}\n" + format_answer(F), args.output)
        if args.oracle and (not brute_maxsim(G, size) or brute_maxsim(G, size + 1)):
            print("oracle mismatch on the maximum", file=sys.stderr)
            return EXIT_MISMATCH
        return EXIT_OK
    q = _nonneg("q", args.q)
    v = solve_maxsim(G, q, prime)
    _emit(format_answer(v.witness if v else None), args.output)
    if args.oracle and brute_maxsim(G, q).answer != v.answer:
        print("oracle mismatch", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_kernelize(args) -> int:
    G = _load_graph(args.input)
    k = _nonneg("k", args.k)
    kern = kernelize(G, k, signature=not args.no_signature)
    lines = ["# trace:"] + [f"#   {t}" for t in kern.trace]
    lines += [f"# verdict: {kern.verdict}", f"# k: {kern.k}"]
    _emit("\n".join(lines) + "\n" + write_ecg(kern.graph), args.output)
    return EXIT_OK


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    try:
        return tuple(tuple(int(x) for x in p.split("-")) for p in text.split(","))
    except ValueError:
        raise UsageError("edges look like 1-2,1-3,...") from None


def _parse_sets(text: str) -> tuple[frozenset[int], ...]:
    try:
        return tuple(frozenset(int(x) for x in s.split(",")) for s in text.split(";"))
    except ValueError:
        raise UsageError("sets look like 1,2;2,3") from None


def _gen_params(args) -> dict:
    if args.json:
        try:
            params = json.loads(_read(args.json))
        except json.JSONDecodeError as exc:
            raise ECGParseError(exc.lineno, f"bad JSON: {exc.msg}") from None
        if not isinstance(params, dict):
            raise ECGParseError(1, "JSON input must be an object")
        return params
    params: dict = {}
    if args.n is not None:
        params["n"] = args.n
    if args.edges:
        params["edges"] = _parse_pairs(args.edges)
    if args.universe is not None:
        params["universe"] = args.universe
    if args.sets:
        params["sets"] = _parse_sets(args.sets)
    if args.families:
        params["families"] = [_parse_sets(f.replace("/", ";")) for f in args.families.split("|")]
    if args.k is not None:
        params["k"] = args.k
    return params


def _need(params: dict, *keys: str):
    missing = [k for k in keys if k not in params]
    if missing:
        raise UsageError(f"missing input field(s): {', '.join(missing)}")
    return [params[k] for k in keys]


def cmd_gen(args) -> int:
    if args.kind == "random":
        n, m, alpha = (_nonneg(x, getattr(args, x)) for x in ("n", "m", "alpha"))
        try:
            G = gen_random(n, m, alpha, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(write_ecg(G, [f"random n={n} m={m} alpha={alpha} seed={args.seed}"]), args.output)
        return EXIT_OK
    params = _gen_params(args)
    try:
        if args.kind == "vc3":
            n, edges, k = _need(params, "n", "edges", "k")
            G, k2 = gen_vc3(VCInstance(int(n), tuple(tuple(e) for e in edges), int(k)))
        elif args.kind == "hs":
            u, sets, k = _need(params, "universe", "sets", "k")
            G, k2 = gen_hs(HSInstance(int(u), tuple(frozenset(s) for s in sets), int(k)))
        else:
            u, fams, k = _need(params, "universe", "families", "k")
            fams = tuple(tuple(frozenset(s) for s in f) for f in fams)
            G, k2 = gen_phs(PHSInstance(int(u), fams, int(k)))
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    _emit(write_ecg(G, [f"{args.kind} instance", f"k {k2}"]), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load_graph(args.input)
    W = parse_witness(_read(args.witness))
    bad = [e for e in W if not 1 <= e <= G.m]
    if bad:
        print(f"FAIL: unknown edge id(s) {bad}")
        return EXIT_MISMATCH
    if args.forest:
        ok = simultaneous_forest_check(G, W) and (args.q is None or len(set(W)) >= args.q)
    else:
        ok = verify_sfes(G, W) and (args.k is None or len(set(W)) <= args.k)
    print("OK" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_MISMATCH


def _bench_corpus(args):
    if args.inputs:
        for path in args.inputs:
            yield os.path.basename(path), _load_graph(path)
        return
    for i in range(args.count):
        s = args.seed * 1000 + i
        yield f"random-{s}", gen_random(args.n, args.m, args.alpha, s)


def cmd_bench(args) -> int:
    k = _nonneg("k", args.k)
    prime = _prime(args)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    status = EXIT_OK
    for name, G in _bench_corpus(args):
        t0 = time.perf_counter()
        v = solve_simfes(G, k, seed=args.seed, trials=args.trials,
                         use_kernel=not args.no_kernel, prime=prime)
        ms = f"{(time.perf_counter() - t0) * 1000:.1f}" if args.timing else ""
        if args.oracle and brute_simfes(G, k).answer != v.answer:
            print(f"oracle mismatch on {name}", file=sys.stderr)
            status = EXIT_MISMATCH
        kv = v.diagnostics.get("kernel_vertices", "")
        w.writerow([name, G.n, G.m, G.alpha, k, "YES" if v else "NO", ms, kv])
    _emit(buf.getvalue(), args.output)
    return status


# ---------------------------------------------------------------- parser

def _common(p: argparse.ArgumentParser, solver: bool = True) -> None:
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.add_argument("--format", choices=["ecg"], default="ecg")
    if solver:
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
        p.add_argument("--trials", type=int, default=3)
        p.add_argument("--no-kernel", action="store_true", help="skip preprocessing")
        p.add_argument("--oracle", action="store_true", help="cross-check by brute force")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="simfes", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="decide whether k deletions make every color acyclic")
    p.add_argument("input")
    p.add_argument("--k", type=int)
    _common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("maxsim", help="simultaneous forest of size q, or the maximum")
    p.add_argument("input")
    p.add_argument("--q", type=int)
    _common(p)
    p.set_defaults(func=cmd_maxsim)

    p = sub.add_parser("kernelize", help="apply the reduction rules and print the kernel")
    p.add_argument("input")
    p.add_argument("--k", type=int)
    p.add_argument("--no-signature", action="store_true",
                   help="only the six local rules, no twin removal")
    _common(p, solver=False)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=["vc3", "hs", "phs", "random"])
    p.add_argument("--json", help="JSON input file (vc3: n, edges, k; hs: universe, sets, k; "
                                  "phs: universe, families, k)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--edges", help="vc3 edges, e.g. 1-2,1-3,2-3")
    p.add_argument("--universe", type=int)
    p.add_argument("--sets", help="hs sets, e.g. 1,2;2,3")
    p.add_argument("--families", help="phs families separated by |, sets by /, e.g. 1,2/3,4|2,3")
    p.add_argument("--seed", type=int, default=0)
    _common(p, solver=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a witness file against an instance")
    p.add_argument("input")
    p.add_argument("witness")
    p.add_argument("--k", type=int, help="also require at most k deleted edges")
    p.add_argument("--forest", action="store_true",
                   help="treat the witness as a simultaneous forest instead")
    p.add_argument("--q", type=int, help="with --forest, require at least q edges")
    _common(p, solver=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="solve a corpus and write a CSV report")
    p.add_argument("inputs", nargs="*", help="ECG files; a seeded random corpus if omitted")
    p.add_argument("--k", type=int)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--alpha", type=int, default=2)
    p.add_argument("--timing", action="store_true", help="fill the millis column")
    _common(p)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "trials", 1) < 1:
            raise UsageError("--trials must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"simfes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ECGParseError as exc:
        print(f"simfes: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        # oracle size guard and similar refusals
        print(f"simfes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
