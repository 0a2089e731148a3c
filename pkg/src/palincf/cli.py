"""Command-line front end.

Every command produces one record ``{command, input, result, verified,
branch}``; integers are rendered as decimal strings.  Exit status is 0 on
success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Optional

from . import palindromes as pal
from .errors import PalinCFError
from .fibpoly import FibParams, mmm_k_min
from .pell import fundamental_negative, fundamental_positive, pell_oracle
from .raney import beta, cf_to_word, double, family_row, word_to_cf
from .surd import CFExpansion, canonicalize, eval_periodic, expand

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


def _dec(value: Any) -> Any:
    """Render integers (recursively) as decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_dec(v) for v in value]
    if isinstance(value, dict):
        return {k: _dec(v) for k, v in value.items()}
    return value


def _cf_dict(cf: CFExpansion) -> dict:
    return {"preperiod": list(cf.preperiod), "period": list(cf.period)}


def record(command: str, inp: dict, result: dict, verified: bool, branch: Optional[str] = None) -> dict:
    return {
        "command": command,
        "input": _dec(inp),
        "result": _dec(result),
        "verified": verified,
        "branch": branch,
    }


def error_record(command: str, inp: dict, exc: Exception) -> dict:
    rec = record(command, inp, {"error": type(exc).__name__, "message": str(exc)}, False)
    rec["exit"] = EXIT_INPUT
    return rec


def _guard(command: str, inp: dict, fn: Callable[[], dict]) -> dict:
    try:
        return fn()
    except PalinCFError as exc:
        return error_record(command, inp, exc)


# -- commands -----------------------------------------------------------------


def run_construct(palindrome: str, k: int, a0: int = 0) -> dict:
    inp = {"palindrome": palindrome, "k": k, "a0": a0}

    def go():
        p = pal.Palindrome.parse(palindrome)
        res = pal.construct(p, k, a0)
        expected = CFExpansion.minimal((a0,), p.entries + (res.s,))
        match = res.expansion == expected
        result = {
            "s": res.s,
            "t": res.t,
            "k_min": res.k_min,
            "poly": list(res.poly),
            "alpha": str(res.alpha),
            "expansion": _cf_dict(res.expansion),
            "period_length": len(res.expansion.period),
            "collapsed": res.collapsed,
        }
        verified = match and res.alpha.is_algebraic_integer()
        return record("construct", inp, result, verified, "collapse" if res.collapsed else "match")

    return _guard("construct", inp, go)


def run_beta(n: int, m: int, k: int) -> dict:
    inp = {"n": n, "m": m, "k": k}

    def go():
        res = beta(FibParams(n, m, k).check())
        oracle = expand(canonicalize(0, 1, res.D))
        result = {
            "D": res.D,
            "s": res.s,
            "cf": _cf_dict(res.cf),
            "period_length": len(res.cf.period),
        }
        return record("beta", inp, result, res.cf == oracle, res.branch)

    return _guard("beta", inp, go)


def run_pell(n: int, m: int, k: int, sign: int) -> dict:
    inp = {"n": n, "m": m, "k": k, "sign": sign}

    def go():
        if sign not in (1, -1):
            raise PalinCFError("sign must be +1 or -1")
        params = FibParams(n, m, k).check()
        sol = fundamental_negative(params) if sign == -1 else fundamental_positive(params)
        oracle = pell_oracle(sol.D, sign)
        result = {"D": sol.D, "x": sol.x, "y": sol.y, "minimal": oracle is not None and oracle.pair == sol.pair}
        return record("pell", inp, result, result["minimal"], sol.branch)

    return _guard("pell", inp, go)


def run_sqrt_family(palindrome: str, count: int) -> dict:
    inp = {"palindrome": palindrome, "count": count}

    def go():
        p = pal.Palindrome.parse(palindrome)
        rows = []
        ok = True
        for a0, D in pal.enumerate_sqrtD(p, count):
            cf = expand(canonicalize(0, 1, D))
            good = cf == CFExpansion.minimal((a0,), p.entries + (2 * a0,))
            ok &= good
            rows.append({"a0": a0, "D": D, "expansion": _cf_dict(cf), "verified": good})
        adm = pal.sqrt_admissibility(p)
        result = {"a0_residue": adm.a0_residue, "a0_modulus": adm.a0_modulus, "rows": rows}
        return record("sqrt-family", inp, result, ok)

    return _guard("sqrt-family", inp, go)


def run_families(kind: str, n: Optional[int], k: Optional[int], ms: list[int], js: list[int]) -> dict:
    inp = {"kind": kind, "n": n, "k": k, "m": ms, "j": js}
    rows, skipped = [], []
    if kind == "sleepers":
        cases = [(n, m, k) for m in ms]
    else:
        cases = [(2 * j, m, 2 if k is None else k) for m in ms for j in js]
    for n_, m_, k_ in cases:
        try:
            row = family_row(FibParams(n_, m_, k_).check())
        except PalinCFError as exc:
            skipped.append({"n": n_, "m": m_, "k": k_, "error": type(exc).__name__, "message": str(exc)})
            continue
        rows.append(
            {
                "n": n_,
                "m": m_,
                "k": k_,
                "D": row.D,
                "cf": _cf_dict(row.cf),
                "period_length": row.period_length,
                "branch": row.branch,
                "verified": row.verified,
            }
        )
    verified = all(r["verified"] for r in rows)
    rec = record("families", inp, {"rows": rows, "skipped": skipped}, verified)
    if skipped:
        rec["exit"] = EXIT_INPUT
    return rec


# -- verification harness -----------------------------------------------------

SUITES = ("palindrome", "beta", "pell", "raney")


def _random_palindrome(rng: random.Random, max_half: int = 3, max_entry: int = 9) -> tuple[int, ...]:
    half = [rng.randint(1, max_entry) for _ in range(rng.randint(1, max_half))]
    if rng.random() < 0.5:
        return tuple(half + half[::-1])
    return tuple(half + half[-2::-1])


def generate_cases(suite: str, budget: int, seed: int, n_max: int = 12, m_max: int = 12,
                   k_span: int = 10**4) -> list[tuple]:
    rng = random.Random(f"{suite}:{seed}")
    cases = []
    for _ in range(budget):
        if suite == "palindrome":
            cases.append((suite, _random_palindrome(rng), rng.randint(0, k_span), rng.randint(-20, 20)))
        elif suite == "raney":
            period = tuple(rng.randint(1, 9) for _ in range(rng.randint(1, 8)))
            cases.append((suite, period))
        else:
            n, m = rng.randint(1, n_max), rng.randint(1, m_max)
            cases.append((suite, n, m, mmm_k_min(n, m) + rng.randint(0, k_span)))
    return cases


def check_case(case: tuple) -> tuple[bool, str, str]:
    """Run one verification case; returns ``(ok, expected, got)``."""
    suite, *args = case
    if suite == "palindrome":
        entries, offset, a0 = args
        res = pal.construct(entries, pal.k_min(entries) + offset, a0)
        want = eval_periodic(CFExpansion((a0,), entries + (res.s,)))
        ok = res.alpha == want and res.alpha.is_algebraic_integer()
        if res.s > max(entries):
            ok &= len(res.expansion.period) == len(entries) + 1
        return ok, str(want), str(res.alpha)
    if suite == "beta":
        res = beta(FibParams(*args).check())
        want = expand(canonicalize(0, 1, res.D))
        return res.cf == want, str(want), str(res.cf)
    if suite == "pell":
        params = FibParams(*args).check()
        pos = fundamental_positive(params)
        want = [pell_oracle(pos.D, 1).pair]
        got = [pos.pair]
        if params.n % 2 == 0 and params.k % 2 == 1:
            want.append(pell_oracle(pos.D, -1).pair)
            got.append(fundamental_negative(params).pair)
        return want == got, str(want), str(got)
    if suite == "raney":
        cf = CFExpansion((0,), args[0])
        alpha = eval_periodic(cf)
        want = expand(alpha * 2)
        got = word_to_cf(double(cf_to_word(cf)))
        return want == got, str(want), str(got)
    raise ValueError(f"unknown suite {suite!r}")


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def run_verify(suite: str, budget: int, seed: int, jobs: int = 1, n_max: int = 12,
               m_max: int = 12, k_span: int = 10**4) -> dict:
    inp = {"suite": suite, "budget": budget, "seed": seed, "n_max": n_max, "m_max": m_max, "k_span": k_span}
    if budget < 1:
        return error_record("verify", inp, PalinCFError("budget must be >= 1"))
    suites = SUITES if suite == "all" else (suite,)
    cases = [c for s in suites for c in generate_cases(s, budget, seed, n_max, m_max, k_span)]
    outcomes = _map(check_case, cases, jobs)
    failures = [
        {"input": [str(a) for a in case], "expected": want, "got": got}
        for case, (ok, want, got) in zip(cases, outcomes)
        if not ok
    ]
    result = {"total": len(cases), "passed": len(cases) - len(failures), "failures": failures}
    return record("verify", inp, result, not failures)


# -- argument handling --------------------------------------------------------


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def _render_text(rec: dict) -> str:
    lines = [f"{rec['command']}: {' '.join(f'{k}={v}' for k, v in rec['input'].items())}"]
    res = rec["result"]
    if "error" in res:
        lines.append(f"  error: {res['error']}: {res['message']}")
        return "\n".join(lines)

    def cf_text(cf):
        pre = cf["preperiod"]
        rest = ", ".join(pre[1:] + [""]) if len(pre) > 1 else ""
        return f"[{pre[0]}; {rest}({', '.join(cf['period'])})]"

    for key, val in res.items():
        if key == "rows":
            for row in val:
                cells = [f"{k}={cf_text(v) if isinstance(v, dict) else v}" for k, v in row.items()]
                lines.append("  " + " ".join(cells))
        elif key == "failures":
            for f in val:
                lines.append(f"  FAIL {f['input']}: expected {f['expected']} got {f['got']}")
        elif isinstance(val, dict):
            lines.append(f"  {key}: {cf_text(val)}")
        else:
            lines.append(f"  {key}: {val}")
    if rec.get("branch"):
        lines.append(f"  branch: {rec['branch']}")
    lines.append(f"  verified: {rec['verified']}")
    return "\n".join(lines)


def emit(rec: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    body = {k: v for k, v in rec.items() if k != "exit"}
    if fmt == "json":
        out.write(json.dumps(body) + "\n")
    else:
        out.write(_render_text(body) + "\n")


def exit_code(records: list[dict]) -> int:
    if any(r.get("exit") == EXIT_INPUT for r in records):
        return EXIT_INPUT
    if any(not r["verified"] for r in records):
        return EXIT_VERIFY
    return EXIT_OK


# batch lines are whitespace-separated tuples in the order below
_BATCH = {
    "construct": (run_construct, (str, int, int)),
    "beta": (run_beta, (int, int, int)),
    "pell": (run_pell, (int, int, int, int)),
    "sqrt-family": (run_sqrt_family, (str, int)),
}


def _batch_line(item: tuple[str, str]) -> dict:
    command, line = item
    fn, types = _BATCH[command]
    fields = line.split()
    try:
        if not (len(types) - (command == "construct") <= len(fields) <= len(types)):
            raise PalinCFError(f"expected {len(types)} fields, got {len(fields)}")
        args = [typ(f) for typ, f in zip(types, fields)]
    except ValueError as exc:
        return error_record(command, {"line": line}, exc)
    return fn(*args)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batch/verify")

    batchable = argparse.ArgumentParser(add_help=False)
    batchable.add_argument("--batch", metavar="FILE", help="one whitespace-separated tuple per line")

    parser = argparse.ArgumentParser(prog="palincf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, batchable], help="algebraic integer from a palindrome")
    p.add_argument("-p", "--palindrome")
    p.add_argument("-k", type=int)
    p.add_argument("--a0", type=int, default=0)

    p = sub.add_parser("beta", parents=[common, batchable], help="expansion of sqrt(s^2 - 4t)")
    for flag in ("-n", "-m", "-k"):
        p.add_argument(flag, type=int)

    p = sub.add_parser("pell", parents=[common, batchable], help="fundamental Pell solutions")
    for flag in ("-n", "-m", "-k"):
        p.add_argument(flag, type=int)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)

    p = sub.add_parser("sqrt-family", parents=[common, batchable], help="sqrt(D) with a palindromic period")
    p.add_argument("-p", "--palindrome")
    p.add_argument("-c", "--count", type=int, default=1)

    p = sub.add_parser("families", parents=[common], help="sleeper and creeper families")
    p.add_argument("kind", choices=("sleepers", "creepers"))
    p.add_argument("-n", type=int, default=2)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("-m", type=_parse_range, default=[2])
    p.add_argument("-j", type=_parse_range, default=[1])

    p = sub.add_parser("verify", parents=[common], help="randomized cross-checks against the oracle")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--k-span", type=int, default=10**4)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    cmd = args.command
    if getattr(args, "batch", None):
        with open(args.batch) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        records = _map(_batch_line, [(cmd, ln) for ln in lines], args.jobs)
    else:
        missing = {
            "construct": ("palindrome", "k"),
            "beta": ("n", "m", "k"),
            "pell": ("n", "m", "k"),
            "sqrt-family": ("palindrome",),
        }.get(cmd, ())
        absent = [name for name in missing if getattr(args, name) is None]
        if absent:
            sys.stderr.write(f"{cmd}: missing required option(s): {', '.join(absent)}\n")
            return EXIT_INPUT
        if cmd == "construct":
            rec = run_construct(args.palindrome, args.k, args.a0)
        elif cmd == "beta":
            rec = run_beta(args.n, args.m, args.k)
        elif cmd == "pell":
            rec = run_pell(args.n, args.m, args.k, args.sign)
        elif cmd == "sqrt-family":
            rec = run_sqrt_family(args.palindrome, args.count)
        elif cmd == "families":
            rec = run_families(args.kind, args.n, args.k, args.m, args.j)
        else:
            rec = run_verify(args.suite, args.budget, args.seed, args.jobs, args.n_max, args.m_max, args.k_span)
        records = [rec]

    for rec in records:
        emit(rec, args.format)
        if "error" in rec["result"]:
            sys.stderr.write(f"{rec['result']['error']}: {rec['result']['message']}\n")
    return exit_code(records)


if __name__ == "__main__":
    sys.exit(main())
