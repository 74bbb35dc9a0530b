"""Command-line driver.

Every command prints one JSON object per line with the keys
cmd, inputs, result, status and runtime_ms.  Exit codes: 0 when every
record is ok (or skipped), 1 on a usage error, 2 on any mismatch.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, is_dataclass

from .ffield import CapExceeded, FieldError, make_field, prime_power, is_prime
from .hasse import hw_certificate
from .hermite import (METHODS, CNResult, DispatchError, NoClosedForm, cn_all, dispatch_case,
                      solve_support_system)
from .hermite.support import BudgetExceeded, check_solution, system
from .hermite.tables import COROLLARY_SECTIONS, range_rows, u_rows
from .ppcheck import is_pp

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(obj):
    if isinstance(obj, CNResult):
        out = {"N": obj.N, "value": obj.value, "method": obj.method}
        if obj.plan is not None:
            out["plan"] = _jsonable(obj.plan)
        if obj.detail:
            out["detail"] = _jsonable(obj.detail)
        return out
    if is_dataclass(obj) and not isinstance(obj, type):
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, int) and not isinstance(obj, bool) and abs(obj) >= 1 << 53:
        return str(obj)  # keep big integers exact for JSON readers
    return obj


def record(cmd: str, inputs: dict, result, status: str, runtime_ms: int) -> str:
    rec = {"cmd": cmd, "inputs": _jsonable(inputs), "result": _jsonable(result),
           "status": status, "runtime_ms": runtime_ms}
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


class Reporter:
    def __init__(self, out_path: str | None, timing: bool):
        self.fh = open(out_path, "w") if out_path else None
        self.timing = timing
        self.mismatch = False

    def emit(self, cmd, inputs, result, status, t0):
        ms = int((time.perf_counter() - t0) * 1000) if self.timing else 0
        line = record(cmd, inputs, result, status, ms)
        if status == "mismatch":
            self.mismatch = True
        print(line)
        if self.fh:
            self.fh.write(line + "\n")

    def close(self):
        if self.fh:
            self.fh.close()


def _q_from(args) -> int:
    if args.p is None:
        raise UsageError("--p is required")
    if not is_prime(args.p):
        raise UsageError(f"--p {args.p} is not prime")
    if args.k < 1:
        raise UsageError("--k must be positive")
    return args.p**args.k


def _require(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required")


# -- commands -----------------------------------------------------------------

def sweep_cases(max_card: int, primes: list[int], include_even: bool) -> list[tuple[int, int, int]]:
    cases = []
    for p in sorted(set(primes)):
        if p == 2 and not include_even:
            continue
        k = 1
        while p ** (2 * k) <= max_card:
            q = p**k
            e = 2
            while q**e <= max_card:
                cases.extend((q, e, a) for a in range(1, p * e - 1))
                e += 1
            k += 1
    return sorted(cases)


def cmd_sweep(args, rep: Reporter) -> None:
    primes = [int(x) for x in args.primes.split(",") if x.strip()] if args.primes else []
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    cases = sweep_cases(args.max_card, primes, args.include_even)

    def run(case):
        q, e, a = case
        t0 = time.perf_counter()
        p, k = prime_power(q)
        try:
            v = is_pp(make_field(p, k, e), a)
        except CapExceeded as exc:
            return case, {"reason": str(exc)}, "skipped", t0
        return case, v, "ok" if v.agrees else "mismatch", t0

    if args.threads > 1:
        with ThreadPoolExecutor(args.threads) as ex:
            results = list(ex.map(run, cases))
    else:
        results = map(run, cases)
    for (q, e, a), res, status, t0 in results:
        rep.emit("sweep", {"q": q, "e": e, "a": a}, res, status, t0)


def cmd_cn(args, rep: Reporter) -> None:
    _require(args, "e", "a")
    q = _q_from(args)
    t0 = time.perf_counter()
    try:
        params = dispatch_case(q, args.e, args.a)
    except (DispatchError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    inputs = {"q": q, "e": args.e, "a": args.a, "method": args.method}
    if params.section == "3":
        rep.emit("cn", inputs, {"section": "3", "reason": "no Hermite witness; use hasse"},
                 "skipped", t0)
        return
    methods = METHODS if args.method == "all" else (args.method,)
    p, k = prime_power(q)
    spec = None
    if "brute" in methods and q**args.e <= args.max_card:
        spec = make_field(p, k, args.e)
    try:
        res = cn_all(params, spec, args.threads, methods)
    except NoClosedForm as exc:
        raise UsageError(str(exc)) from exc
    values = {m: r.value for m, r in res.items() if isinstance(r, CNResult)}
    if not values:
        status = "skipped"
    elif len(set(values.values())) == 1 and 0 not in values.values():
        status = "ok"
    else:
        status = "mismatch"
    result = {"section": params.section, "subcase": params.subcase, "u": params.u,
              "v": params.v, "k": params.k, "methods": res}
    rep.emit("cn", inputs, result, status, t0)


def cmd_tables(args, rep: Reporter) -> None:
    names = sorted(COROLLARY_SECTIONS) if args.which == "all" else [args.which]
    for name in names:
        t0 = time.perf_counter()
        section = COROLLARY_SECTIONS[name]
        rows = [{"u": r.u, "q_gt": r.threshold, "value": r.value, "factored": r.factored}
                for r in u_rows(section)]
        ranges = [{"q_gt": r.lo, "q_le": r.hi, "u": list(r.us), "p": list(r.primes),
                   "q": list(r.qs)} for r in range_rows(section)]
        rep.emit("tables", {"which": name}, {"rows": rows, "ranges": ranges}, "ok", t0)


def cmd_hasse(args, rep: Reporter) -> None:
    _require(args, "e", "a")
    q = _q_from(args)
    t0 = time.perf_counter()
    try:
        cert = hw_certificate(q, args.e, args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep.emit("hasse", {"q": q, "e": args.e, "a": args.a}, cert,
             "ok" if cert.certified else "mismatch", t0)


def cmd_lemma(args, rep: Reporter) -> None:
    _require(args, "e", "id")
    q = _q_from(args)
    t0 = time.perf_counter()
    try:
        _, _, total = system(args.id, q, args.e, args.lemma_k)
        closed = solve_support_system(args.id, q, args.e, args.lemma_k, "closed")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    inputs = {"id": args.id, "q": q, "e": args.e, "k": args.lemma_k}
    result = {"closed": sorted(s.values for s in closed),
              "valid": all(check_solution(s, q, args.e, total) for s in closed)}
    try:
        brute = solve_support_system(args.id, q, args.e, args.lemma_k, "brute")
        result["brute"] = sorted(s.values for s in brute)
        status = "ok" if brute == closed and result["valid"] else "mismatch"
    except BudgetExceeded as exc:
        result["brute"] = str(exc)
        status = "ok" if result["valid"] else "mismatch"
    rep.emit("lemma", inputs, result, status, t0)


def cmd_field(args, rep: Reporter) -> None:
    _require(args, "e")
    q = _q_from(args)
    t0 = time.perf_counter()
    try:
        spec = make_field(args.p, args.k, args.e, args.max_card)
    except (FieldError, CapExceeded) as exc:
        raise UsageError(str(exc)) from exc
    result = {"modulus": list(spec.modulus), "degree": spec.n, "cardinality": spec.cardinality,
              "gcd_q_minus_2": math.gcd(q - 2, spec.cardinality - 1)}
    rep.emit("field", {"q": q, "e": args.e}, result, "ok", t0)


COMMANDS = {"sweep": cmd_sweep, "cn": cmd_cn, "tables": cmd_tables, "hasse": cmd_hasse,
            "lemma": cmd_lemma, "field": cmd_field}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="characteristic")
    common.add_argument("--k", type=int, default=1, help="q = p^k")
    common.add_argument("--e", type=int, help="extension degree over F_q")
    common.add_argument("--a", type=int, help="number of terms in f_a")
    common.add_argument("--max-card", type=int, default=1 << 20, help="largest field to enumerate")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0, help="accepted for reproducible runs")
    common.add_argument("--out", help="also write the report stream to this file")
    common.add_argument("--no-timing", action="store_true", help="report runtime_ms as 0")

    ap = argparse.ArgumentParser(prog="permpoly", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)
    sp = sub.add_parser("sweep", parents=[common], help="is_pp vs the predicted answer")
    sp.add_argument("--primes", default="2,3,5,7,11,13,17,19,23")
    sp.add_argument("--include-even", action="store_true")
    sp = sub.add_parser("cn", parents=[common], help="compute C(N) for (q, e, a)")
    sp.add_argument("--method", choices=METHODS + ("all",), default="all")
    sp = sub.add_parser("tables", parents=[common], help="u-tables and surviving q")
    sp.add_argument("--which", choices=sorted(COROLLARY_SECTIONS) + ["all"], default="all")
    sub.add_parser("hasse", parents=[common], help="Hasse-Weil certificate")
    sp = sub.add_parser("lemma", parents=[common], help="solve a support system both ways")
    sp.add_argument("--id", choices=("6.5", "7.1", "8.1"))
    sp.add_argument("--lemma-k", type=int)
    sub.add_parser("field", parents=[common], help="describe the field F_{q^e}")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    rep = Reporter(args.out, not args.no_timing)
    try:
        COMMANDS[args.cmd](args, rep)
    except UsageError as exc:
        print(f"permpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        rep.close()
    return EXIT_MISMATCH if rep.mismatch else EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
