"""Command-line front end.

Subcommands: ``info`` (code parameters), ``sliding`` (window generator
matrices), ``dist`` (distance invariants), ``map`` (code-map decision
procedures), ``oracle`` (naive cross-check searches, deliberately slow),
``golden`` (pinned-example regression run).

Exit codes: 0 success, 1 input error, 2 budget refusal, 3 golden mismatch.
All reports are deterministic for fixed inputs and flags; only the
``wall_time_ms`` field varies between runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import distances, maps, oracle
from .errors import BudgetExceeded, ConvinvError
from .field import FieldSpec
from .golden import run_golden
from .maps import CodeMap
from .sliding import sliding
from .structure import ConvCode, make_code


class CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1), not budget refusals (exit 2)
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def parse_code_file(path: str) -> ConvCode:
    """Load a code from a JSON file holding field, n, k and generator rows."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise CliInputError(f"cannot read code file {path}: {e}") from e
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as e:
        raise CliInputError(f"malformed JSON in code file {path}: {e}") from e
    if not isinstance(obj, dict):
        raise CliInputError(f"code file {path} must hold a JSON object")
    for key in ("field", "n", "k", "generator"):
        if key not in obj:
            raise CliInputError(f"code file {path} is missing the {key!r} key")
    try:
        field = FieldSpec.from_json(obj["field"])
    except (ConvinvError, KeyError, TypeError, ValueError) as e:
        raise CliInputError(f"invalid field in code file {path}: {e}") from e
    n, k, gen = obj["n"], obj["k"], obj["generator"]
    if not (isinstance(gen, list) and len(gen) == k
            and all(isinstance(row, list) and len(row) == n for row in gen)):
        raise CliInputError(
            f"generator in code file {path} must be a {k} x {n} array of coefficient lists"
        )
    try:
        return make_code(field, gen)
    except ConvinvError as e:
        raise CliInputError(f"invalid generator in code file {path}: {e}") from e


def _params(code: ConvCode) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "delta": code.delta,
        "delta1": code.delta1,
        "noncat": code.noncatastrophic,
    }


def _emit(report: dict, as_json: bool, started: float) -> None:
    report["wall_time_ms"] = int((time.perf_counter() - started) * 1000)
    if as_json:
        print(json.dumps(report, indent=2))
        return
    for key, val in report.items():
        print(f"{key}: {json.dumps(val)}")


def _cmd_info(args) -> int:
    started = time.perf_counter()
    code = parse_code_file(args.code)
    report = {
        "kind": "info",
        "field": code.field.to_json(),
        "q": code.field.q,
        "params": _params(code),
        "row_degrees": list(code.row_degrees),
        "reduced_generator": code.rowred.to_json(),
    }
    _emit(report, args.json, started)
    return 0


def _cmd_sliding(args) -> int:
    started = time.perf_counter()
    code = parse_code_file(args.code)
    variant = "primed" if args.primed else "plain"
    mat = sliding(code, args.j, variant)
    if args.json:
        report = {
            "kind": "sliding",
            "variant": variant,
            "j": args.j,
            "rows": mat.rows,
            "cols": mat.cols,
            "matrix": mat.to_lists(),
            "params": _params(code),
        }
        _emit(report, True, started)
    else:
        for row in mat.to_lists():
            print(" ".join(str(v) for v in row))
    return 0


def _need(args, flag: str):
    val = getattr(args, flag.lstrip("-").replace("-", "_"))
    if val is None:
        kind = getattr(args, "kind", None)
        what = f"--kind {kind}" if kind else f"--check {args.check}"
        raise CliInputError(f"{what} requires {flag}")
    return val


def _cmd_dist(args) -> int:
    started = time.perf_counter()
    code = parse_code_file(args.code)
    kw = {"budget": args.budget, "threads": args.threads}
    if args.kind == "coldist":
        res = distances.column_distance(code, _need(args, "--j"), **kw)
    elif args.kind == "gencoldist":
        res = distances.gen_column_distance(code, _need(args, "--r"), _need(args, "--j"), **kw)
    elif args.kind == "limit":
        res = distances.gen_column_distance_limit(
            code, _need(args, "--r"), mode=args.mode, window=args.window, **kw,
        )
    elif args.kind == "unrestricted":
        res = distances.unrestricted_gcd(code, _need(args, "--r"), _need(args, "--j"), **kw)
    elif args.kind == "ghw":
        res = distances.ghw(code.evaluate_at_zero(), _need(args, "--r"), **kw)
    elif args.kind == "genweight":
        res = distances.generalized_weight(
            code, _need(args, "--r"), degree_bound=args.degree_bound, budget=args.budget,
        )
    else:  # dfree
        res = distances.free_distance(code, **kw)
    report = {
        "kind": res.kind,
        "r": res.r,
        "j": res.j,
        "value": res.value,
        "exact": res.exact,
        "certificate": res.certificate,
    }
    report.update(res.meta)
    report.pop("nodes", None)  # node counts vary with thread count
    report["params"] = _params(code)
    _emit(report, args.json, started)
    return 0


def _cmd_oracle(args) -> int:
    if not args.unsafe_slow:
        raise CliInputError(
            "the oracle enumerates every tuple without pruning; pass --unsafe-slow to confirm"
        )
    started = time.perf_counter()
    code = parse_code_file(args.code)
    if args.kind == "coldist":
        value = oracle.naive_gen_column_distance(code, 1, _need(args, "--j"))
        r = 1
    elif args.kind == "gencoldist":
        r = _need(args, "--r")
        value = oracle.naive_gen_column_distance(code, r, _need(args, "--j"))
    elif args.kind == "unrestricted":
        r = _need(args, "--r")
        value = oracle.naive_unrestricted(code, r, _need(args, "--j"))
    elif args.kind == "ghw":
        r = _need(args, "--r")
        value = oracle.naive_ghw(code.evaluate_at_zero(), r)
    else:  # genweight
        r = _need(args, "--r")
        value = oracle.naive_genweight(
            code, r, args.degree_bound if args.degree_bound is not None else code.delta1 + 1,
        )
    report = {
        "kind": f"oracle-{args.kind}",
        "r": r,
        "j": args.j,
        "value": value,
        "exact": "proven",
        "params": _params(code),
    }
    _emit(report, args.json, started)
    return 0


def _parse_images(path: str, field) -> list:
    try:
        with open(path, "rb") as fh:
            obj = json.loads(fh.read())
    except OSError as e:
        raise CliInputError(f"cannot read images file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CliInputError(f"malformed JSON in images file {path}: {e}") from e
    if isinstance(obj, dict):
        obj = obj.get("images")
    if not isinstance(obj, list):
        raise CliInputError(f"images file {path} must hold a list of basis images")
    return obj


def _cmd_map(args) -> int:
    started = time.perf_counter()
    domain = parse_code_file(args.domain)
    codomain = parse_code_file(args.codomain)
    images = _parse_images(args.images, domain.field)
    try:
        phi = CodeMap(domain, codomain, images)
    except ConvinvError as e:
        raise CliInputError(f"invalid code map: {e}") from e
    if args.check == "jequiv":
        verdict = maps.check_j_equivalence(phi, _need(args, "--j"), budget=args.budget)
    elif args.check == "equiv":
        verdict = maps.check_equivalence(phi, budget=args.budget)
    elif args.check == "isometry":
        verdict = maps.check_isometry(phi, budget=args.budget)
    else:  # strong
        verdict = maps.check_strong_isometry(phi, args.bound, budget=args.budget)
    report = verdict.to_json()
    report["params"] = {"domain": _params(domain), "codomain": _params(codomain)}
    _emit(report, args.json, started)
    return 0


def _cmd_golden(args) -> int:
    if args.json:
        checks = []

        def emit(line):
            checks.append(line)
    else:
        emit = print
    passed, failed = run_golden(args.filter, emit=emit)
    if args.json:
        print(json.dumps({"passed": passed, "failed": failed, "checks": checks}, indent=2))
    else:
        print(f"golden: {passed} passed, {failed} failed")
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="convinv", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("info", help="print code parameters")
    p.add_argument("--code", required=True, help="code file (JSON)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_info)

    p = subparsers.add_parser("sliding", help="print a window generator matrix")
    p.add_argument("--code", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--primed", action="store_true", help="widened variant with the tail slices")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_sliding)

    p = subparsers.add_parser("dist", help="compute a distance invariant")
    p.add_argument("--code", required=True)
    p.add_argument(
        "--kind", required=True,
        choices=["coldist", "gencoldist", "limit", "unrestricted", "ghw", "genweight", "dfree"],
    )
    p.add_argument("--r", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--mode", choices=["proven", "plateau"], default="proven")
    p.add_argument("--window", type=int, help="plateau window length for limit mode")
    p.add_argument("--degree-bound", type=int, dest="degree_bound")
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_dist)

    p = subparsers.add_parser("oracle", help="naive cross-check search (slow)")
    p.add_argument("--code", required=True)
    p.add_argument(
        "--kind", required=True,
        choices=["coldist", "gencoldist", "unrestricted", "ghw", "genweight"],
    )
    p.add_argument("--r", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--degree-bound", type=int, dest="degree_bound")
    p.add_argument("--unsafe-slow", action="store_true", dest="unsafe_slow")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_oracle)

    p = subparsers.add_parser("map", help="decide a code-map property")
    p.add_argument("--domain", required=True)
    p.add_argument("--codomain", required=True)
    p.add_argument("--images", required=True, help="JSON list of basis images")
    p.add_argument("--check", required=True, choices=["jequiv", "equiv", "isometry", "strong"])
    p.add_argument("--j", type=int)
    p.add_argument("--bound", type=int, help="probe bound for the strong check")
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_map)

    p = subparsers.add_parser("golden", help="re-check the pinned example values")
    p.add_argument("--filter", help="run only checks whose id contains this substring")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_golden)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    try:
        return args.fn(args)
    except CliInputError as e:
        print(f"convinv: error: {e}", file=sys.stderr)
        return 1
    except BudgetExceeded as e:
        msg = str(e)
        if e.needed is not None:
            msg += f" (needed {e.needed}, limit {e.limit})"
        print(f"convinv: budget refused: {msg}", file=sys.stderr)
        return 2
    except ConvinvError as e:
        print(f"convinv: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
