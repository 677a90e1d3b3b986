"""``cubes`` command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (for example an
infinite family), 3 a verification suite found a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from decimal import Decimal, InvalidOperation

import mpmath

from . import abc, records, reps, verify
from .errors import CubesError, DomainError, InfiniteFamily

REAL_DIGITS = 30


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _uint(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _decimal(text: str) -> Decimal:
    try:
        return Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text}") from None


def _real(x) -> str:
    return mpmath.nstr(x, REAL_DIGITS, strip_zeros=False)


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, ensure_ascii=False, separators=(", ", ": ")) + "\n")


def _envelope(cmd: str, inputs: dict, result: dict) -> dict:
    return {"cmd": cmd, "input": inputs, "result": result}


def _int_str(v: int | None) -> str | None:
    return None if v is None else str(v)


def cmd_count(args, out):
    res = reps.rep_count(args.n, args.t)
    if res.is_infinite:
        raise InfiniteFamily("infinite family: n=t³")
    if args.json:
        result = {
            "kind": res.kind,
            "count": str(res.count),
            "reason": None if res.reason is None else res.reason.value,
        }
        _emit(_envelope("count", {"n": str(args.n), "t": str(args.t)}, result), out)
    else:
        out.write(f"{res.count}\n")


def cmd_enumerate(args, out):
    if args.n == args.t**3:
        raise InfiniteFamily("infinite family: n=t³")
    triples = reps.rep_enumerate(args.n, args.t)
    if args.json:
        result = {"count": str(len(triples)), "triples": [[str(c) for c in tr] for tr in triples]}
        _emit(_envelope("enumerate", {"n": str(args.n), "t": str(args.t)}, result), out)
    else:
        for x, y, z in triples:
            out.write(f"{x} {y} {z}\n")


def cmd_band(args, out):
    count, infinite = reps.band_count(args.n, args.j)
    if args.json:
        result = {"count": str(count), "infinite_heights": [str(t) for t in infinite]}
        _emit(_envelope("band", {"n": str(args.n), "j": str(args.j)}, result), out)
    else:
        out.write(f"{count}\n")
        if infinite:
            print("infinite families at heights: " + " ".join(map(str, infinite)), file=sys.stderr)


def cmd_zero(args, out):
    out.write(f"{records.zero_height_count(args.n)}\n")


def cmd_records(args, out):
    entries = records.record_scan(args.limit, workers=args.threads or os.cpu_count())
    if args.json:
        for e in entries:
            result = {"n": str(e.n), "count": str(e.count), "is_new_max": e.is_new_max}
            _emit(_envelope("records", {"limit": str(args.limit)}, result), out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "count", "is_new_max"])
        for e in entries:
            w.writerow([e.n, e.count, "true" if e.is_new_max else "false"])
    for n, prev, new in records.record_jumps(entries):
        print(f"note: new maximum at n={n} jumps {prev} -> {new} (not +6)", file=sys.stderr)


def cmd_reduced(args, out):
    out.write(f"{abc.reduced_count(args.n)}\n")


def cmd_family(args, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["nu", "p", "p1", "n", "A", "B", "C"])
    for e in abc.prime_family(args.nu):
        w.writerow([e.nu, e.p, e.p1, e.n, *e.witness])


def cmd_abc(args, out):
    found = abc.hunt_high_quality(args.xmax, args.top)
    stats = abc.mean_z_statistics(r.triple.n for r in found)
    eps = None if args.epsilon is None else mpmath.mpf(str(args.epsilon))
    if eps is not None and eps <= 0:
        raise DomainError("epsilon must be positive")
    rows = []
    for n, nu, mz, k in stats:
        row = {"n": str(n), "nu": str(nu), "mean_z": str(mz), "rad": str(k)}
        if eps is not None:
            with mpmath.workdps(abc.WORK_DPS):
                row["implied_K"] = _real(mpmath.mpf(mz.numerator) / mz.denominator / mpmath.power(k, 1 + eps))
        rows.append(row)
    if args.json:
        for r in found:
            t = r.triple
            _emit(
                {"x": str(t.x), "y": str(t.y), "z": str(t.z), "n": str(t.n), "rad": str(t.k),
                 "q": _real(r.q), "implied_C": _real(r.implied_C)},
                out,
            )
        for row in rows:
            _emit(row, out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["x", "y", "z", "n", "rad", "q", "implied_C"])
        for r in found:
            t = r.triple
            w.writerow([t.x, t.y, t.z, t.n, t.k, _real(r.q), _real(r.implied_C)])
        if rows:
            out.write("\n")
            w.writerow(list(rows[0]))
            for row in rows:
                w.writerow(list(row.values()))


def cmd_robin(args, out):
    scan = records.robin_scan(getattr(args, "from"), args.to)
    result = {
        "checked": str(scan.checked),
        "violations": [str(n) for n in scan.violations],
        "out_of_claim": [str(n) for n in scan.out_of_claim],
        "escalated": str(scan.escalated),
    }
    _emit(_envelope("robin", {"from": str(getattr(args, "from")), "to": str(args.to)}, result), out)


def cmd_sigma_ratio(args, out):
    rep = records.sigma_ratio(args.n)
    result = {"sigma1": str(rep.sigma1), "ratio": _real(rep.ratio), "in_S": rep.in_S}
    _emit(_envelope("sigma-ratio", {"n": str(args.n)}, result), out)


def cmd_verify(args, out):
    checks = verify.run_suite(args.suite, fast=args.fast)
    failed = 0
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        line = f"{status} {args.suite}: {c.name}"
        if not c.ok:
            failed += 1
            line += f" ({c.detail})"
        out.write(line + "\n")
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubes", description="Sums of three cubes at prescribed height.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    for name, fn in (("count", cmd_count), ("enumerate", cmd_enumerate)):
        s = sub.add_parser(name)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--t", type=int, required=True)
        s.add_argument("--json", action="store_true")
        s.set_defaults(func=fn)

    s = sub.add_parser("band")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--j", type=_uint, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_band)

    s = sub.add_parser("zero", help="R(0, n)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_zero)

    s = sub.add_parser("records")
    s.add_argument("--limit", type=_uint, required=True)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    s.add_argument("--threads", type=_uint, default=None)
    s.set_defaults(func=cmd_records)

    s = sub.add_parser("reduced")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_reduced)

    s = sub.add_parser("family")
    s.add_argument("--nu", type=_uint, required=True)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("abc")
    s.add_argument("--xmax", type=_uint, required=True)
    s.add_argument("--top", type=_uint, required=True)
    s.add_argument("--epsilon", type=_decimal, default=None)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_abc)

    s = sub.add_parser("robin")
    s.add_argument("--from", type=_uint, required=True)
    s.add_argument("--to", type=_uint, required=True)
    s.set_defaults(func=cmd_robin)

    s = sub.add_parser("sigma-ratio")
    s.add_argument("--n", type=_uint, required=True)
    s.set_defaults(func=cmd_sigma_ratio)

    s = sub.add_parser("verify")
    s.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    s.add_argument("--fast", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    try:
        return args.func(args, out) or 0
    except InfiniteFamily as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (CubesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
