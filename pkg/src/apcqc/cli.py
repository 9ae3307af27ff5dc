"""apcqc command line: apc, build, verify, mds and search subcommands.

Exit codes: 0 computed/verified, 1 claim refuted (witness printed),
2 input error. ``--json PATH`` writes the report (``-`` for stdout).
Worker threads: ``--threads`` or the APCQC_THREADS environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import product
from pathlib import Path

import numpy as np

from . import codec
from .apc import apc_distance
from .codec import CodeSpec, DomainError
from .ffvec import is_prime
from .klverify import kl_check, kl_distance_witness
from .logicfn import ParseError, TableFormatError, parse_poly, quadratic_form, read_table
from .report import Report, emit


class InputError(Exception):
    pass


def _function_from_args(args):
    if args.file and args.poly:
        raise InputError("give either --file or --poly, not both")
    if args.file:
        try:
            return read_table(args.file)
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
        except (TableFormatError, ValueError) as exc:
            raise InputError(f"{args.file}: {exc}") from None
    if args.poly is None:
        raise InputError("a function is required: --file PATH or --poly EXPR with --p and --n")
    if args.p is None or args.n is None:
        raise InputError("--poly needs --p and --n")
    if not is_prime(args.p):
        raise InputError(f"p must be prime, got {args.p}")
    if args.n < 1:
        raise InputError("n must be at least 1")
    try:
        return parse_poly(args.poly, args.p, args.n)
    except ParseError as exc:
        raise InputError(f"{exc}\n  {args.poly}\n  {' ' * exc.pos}^") from None


def _function_echo(args) -> dict:
    if args.file:
        return {"file": Path(args.file).name}
    return {"poly": args.poly, "p": args.p, "n": args.n}


def _function_json(f) -> dict:
    return {"header": f.header, "sha256": f.digest()}


def theorem_flags(code: CodeSpec) -> dict:
    """Check a built code against the distance and dimension theorems."""
    d, dp, K = code.d_claimed, code.d_prime, code.K
    k = dp - d
    thm1 = d <= dp
    if d == dp:
        thm1 = thm1 and all(b.is_zero() for b in code.betas)
    if 0 < k <= dp - 2:
        thm1 = thm1 and codec.check_wh_constraint(code.betas, k)
    try:
        thm2 = K <= codec.max_K(code.n, code.p, dp, k)
    except DomainError:
        thm2 = None
    try:
        mds = codec.mds_saturates(code.n, K, d, code.p)
    except DomainError:
        mds = False
    try:
        thm3 = codec.theorem3_predicate(code.n, code.p, dp, k).to_json()
    except DomainError:
        thm3 = None
    return {"k": k, "thm1_ok": thm1, "thm2_ok": thm2, "mds": mds, "thm3_case": thm3}


def _oracle(code: CodeSpec, t: int, workers) -> tuple[dict, bool]:
    check = kl_check(code, t, workers)
    dist, dist_witness = kl_distance_witness(code, workers)
    ok = check.ok and dist >= code.d_claimed
    out = {
        "t": t,
        "check_ok": check.ok,
        "kl_distance": dist,
        "d_claimed": code.d_claimed,
        "verdict": "pass" if ok else "refuted",
    }
    witness = check.witness or (dist_witness if not ok else None)
    if witness is not None:
        out["witness"] = witness.to_json()
    return out, ok


def cmd_apc(args) -> tuple[Report, int]:
    f = _function_from_args(args)
    res = apc_distance(f, args.threads)
    report = Report(
        command={"name": "apc", **_function_echo(args)},
        function=_function_json(f),
        apc=res.to_json(),
    )
    return report, 0


def cmd_build(args) -> tuple[Report, int]:
    f = _function_from_args(args)
    res = apc_distance(f, args.threads)
    if not res.attained:
        raise InputError("the function's APC distance is unattained; no code can be built")
    dp = res.distance
    if dp < 2:
        raise InputError(f"APC distance {dp} < 2: the construction needs d' >= 2")
    k = args.k
    if k < 0 or k > f.n:
        raise InputError(f"k = {k} outside 0..{f.n}")
    warnings = []
    if k > dp - 2:
        if not args.force:
            raise InputError(f"k = {k} exceeds d' - 2 = {dp - 2} (use --force to build anyway)")
        warnings.append(f"forced: k = {k} exceeds d' - 2 = {dp - 2}")
    branch, betas = codec.build_betas(f.n, k, f.p)
    d = codec.lemma1_distance(betas, dp, f.p, f.n)
    code = CodeSpec(f.p, f.n, f, tuple(betas), dp, d)
    report = Report(
        command={"name": "build", "k": k, "force": bool(args.force), **_function_echo(args)},
        function=_function_json(f),
        apc=res.to_json(),
        code={**code.to_json(), "branch": branch},
        theorems=theorem_flags(code),
        warnings=warnings or None,
    )
    status = 0
    if args.verify:
        report.oracle, ok = _oracle(code, max(d - 1, 0), args.threads)
        status = 0 if ok else 1
    return report, status


def _load_code(path: str) -> CodeSpec:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(obj, dict) and "schema" in obj and "code" in obj:
        obj = obj["code"]
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        return CodeSpec.from_json(obj)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_verify(args) -> tuple[Report, int]:
    code = _load_code(args.spec)
    warnings = code.hypothesis_issues()
    res = apc_distance(code.f, args.threads)
    if res.distance != code.d_prime:
        warnings.append(f"d_prime = {code.d_prime} but the function's APC distance is {res.distance}")
    t = args.t if args.t is not None else max(code.d_claimed - 1, 0)
    if t < 0:
        raise InputError("--t must be non-negative")
    oracle, ok = _oracle(code, t, args.threads)
    if 2 <= code.d_prime <= code.n + 1:
        oracle["lemma1_distance"] = codec.lemma1_distance(code.betas, code.d_prime, code.p, code.n)
    report = Report(
        command={"name": "verify", "spec": Path(args.spec).name, "t": args.t},
        function=_function_json(code.f),
        apc=res.to_json(),
        code=code.to_json(),
        oracle=oracle,
        theorems=theorem_flags(code),
        warnings=warnings or None,
    )
    return report, 0 if ok else 1


def cmd_mds(args) -> tuple[Report, int]:
    n, p, dp, k = args.n, args.p, args.dprime, args.k
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    try:
        res = codec.theorem3_predicate(n, p, dp, k)
    except DomainError as exc:
        raise InputError(str(exc)) from None
    mds = res.to_json()
    try:
        mds["singleton_bound_K"] = codec.singleton_bound_K(n, dp - k, p)
    except DomainError:
        mds["singleton_bound_K"] = None
    report = Report(command={"name": "mds", "n": n, "p": p, "dprime": dp, "k": k}, mds=mds)
    return report, 0


def _poly_text(n: int, coeffs: dict) -> str:
    terms = []
    for (i, j), c in sorted(coeffs.items()):
        if c:
            terms.append(f"x{i}*x{j}" if c == 1 else f"{c}*x{i}*x{j}")
    return "+".join(terms) or "0"


def cmd_search(args) -> tuple[Report, int]:
    n, p = args.n, args.p
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    if n < 1:
        raise InputError("n must be at least 1")
    if args.budget < 1:
        raise InputError("--budget must be at least 1")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    total = p ** len(pairs)
    if n <= 5 and total <= args.budget:
        mode = "exhaustive"
        candidates = product(range(p), repeat=len(pairs))
    else:
        mode = "sampled"
        rng = np.random.default_rng(args.seed)
        candidates = (tuple(int(c) for c in rng.integers(0, p, len(pairs))) for _ in range(args.budget))
    best, best_coeffs, evaluated = None, None, 0
    for cs in candidates:
        coeffs = dict(zip(pairs, cs))
        res = apc_distance(quadratic_form(p, n, coeffs), args.threads)
        evaluated += 1
        score = n + 1 if not res.attained else res.distance
        if best is None or score > best[0]:
            best, best_coeffs = (score, res), coeffs
        if args.target is not None and score >= args.target:
            break
    matrix = [[best_coeffs.get((i, j), 0) for j in range(1, n + 1)] for i in range(1, n + 1)]
    search = {
        "mode": mode,
        "space": total,
        "evaluated": evaluated,
        "best_apc": best[1].to_json(),
        "coefficients": matrix,
        "poly": _poly_text(n, best_coeffs),
        "target": args.target,
        "target_reached": args.target is not None and best[0] >= args.target,
    }
    command = {"name": "search", "n": n, "p": p, "target": args.target, "budget": args.budget}
    if mode == "sampled":
        command["seed"] = args.seed
    return Report(command=command, search=search), 0


def _summary(report: Report) -> str:
    lines = []
    if report.function:
        lines.append(f"function: {report.function['header']} sha256={report.function['sha256'][:16]}")
    if report.apc:
        w = report.apc.get("witness")
        extra = f" (a={w['a']}, b={w['b']})" if w else ""
        lines.append(f"apc distance: {report.apc['distance']}{extra}")
    if report.code:
        c = report.code
        branch = f" branch={c['branch']}" if "branch" in c else ""
        lines.append(f"code: ((n={c['n']}, K={c['K']}, d={c['d_claimed']}))_{c['p']} with d'={c['d_prime']}{branch}")
    if report.theorems:
        lines.append("theorems: " + " ".join(f"{k}={v}" for k, v in report.theorems.items() if k != "thm3_case"))
    if report.oracle:
        o = report.oracle
        lines.append(f"oracle: kl_distance={o['kl_distance']} claimed={o['d_claimed']} -> {o['verdict']}")
        if "witness" in o:
            w = o["witness"]
            lines.append(f"  witness: a={w['a']} b={w['b']} weight={w['weight']} ({w['kind']} i={w['i']} j={w['j']})")
    if report.mds:
        m = report.mds
        lines.append(f"theorem 3 case {m['case']}: {m['holds']} (lhs={m['lhs']}, rhs={m['rhs']})")
        lines.append(f"singleton bound K <= {m['singleton_bound_K']}")
        if "warning" in m:
            lines.append(f"warning: {m['warning']}")
    if report.search:
        s = report.search
        lines.append(f"search ({s['mode']}, {s['evaluated']}/{s['space']}): best apc {s['best_apc']['distance']} for {s['poly']}")
    for w in report.warnings or ():
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apcqc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
        sp.add_argument("--threads", type=int, default=None, help="worker threads (default: APCQC_THREADS or all cores)")
        sp.add_argument("--timing", action="store_true", help="include wall time in the report")

    def fn_input(sp):
        sp.add_argument("--file", help="truth-table file")
        sp.add_argument("--poly", help="polynomial such as 'x1*x2+2*x3'")
        sp.add_argument("--p", type=int)
        sp.add_argument("--n", type=int)

    sp = sub.add_parser("apc", help="APC distance of a function")
    fn_input(sp)
    common(sp)
    sp.set_defaults(run=cmd_apc)

    sp = sub.add_parser("build", help="build a code from a function and k")
    fn_input(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--force", action="store_true", help="allow k > d' - 2")
    sp.add_argument("--verify", action="store_true", help="also run the Knill-Laflamme oracle")
    common(sp)
    sp.set_defaults(run=cmd_build)

    sp = sub.add_parser("verify", help="check a code spec with the Knill-Laflamme oracle")
    sp.add_argument("spec", help="code spec JSON (or a build report)")
    sp.add_argument("--t", type=int, default=None, help="error weight to check (default d_claimed - 1)")
    common(sp)
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("mds", help="quantum Singleton saturation conditions")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--dprime", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp)
    sp.set_defaults(run=cmd_mds)

    sp = sub.add_parser("search", help="search quadratic forms for large APC distance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--target", type=int, default=None)
    sp.add_argument("--budget", type=int, default=1024)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(run=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, status = args.run(args)
    except InputError as exc:
        print(f"apcqc {args.cmd}: error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        report.timing = {"ms": int((time.perf_counter() - start) * 1000)}
    text = emit(report)
    if args.json == "-":
        sys.stdout.write(text)
    else:
        print(_summary(report))
        if args.json:
            Path(args.json).write_text(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
