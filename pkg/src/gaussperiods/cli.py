"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 the instance
is not in the primitive-root case, 4 a work budget ran out.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import csv
import dataclasses
import json
import math
import sys
import time
from dataclasses import dataclass

from . import __version__
from .errors import GaussPeriodError, NotCaseOne, ResourceExceeded
from .gaussorder import verify_theorem_instance
from .numtheory import DEFAULT_BUDGET, classify_instance, is_prime
from .partitions import count_bounded, count_nondiv, hagis_main_term, old_bound
from .proofcheck import DEFAULT_CAP, distinct_powers_count

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_CASE_ONE = 3
EXIT_RESOURCE = 4


def fmt_real(x: float) -> str:
    return f"{x:.6g}"


@dataclass
class ScanRecord:
    p: int
    k: int
    q: int
    n: int
    r: int
    t: int | None = None
    case: str = ""
    normal: bool | None = None
    L_n: str | None = None
    bound_P: str | None = None
    distinct_count: str | None = None
    old_bound: float | None = None
    corollary_main: float | None = None
    theorem_pass: bool | None = None
    elapsed_ms: int | None = None
    error: str | None = None

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in dataclasses.fields(cls)]

    def csv_row(self) -> list[str]:
        row = []
        for name in self.field_names():
            v = getattr(self, name)
            if v is None:
                row.append("")
            elif isinstance(v, bool):
                row.append("true" if v else "false")
            elif isinstance(v, float):
                row.append(fmt_real(v))
            else:
                row.append(str(v))
        return row

    def to_json(self) -> str:
        d = {}
        for name in self.field_names():
            v = getattr(self, name)
            d[name] = float(fmt_real(v)) if isinstance(v, float) else v
        return json.dumps(d)


def scan_record(p: int, k: int, n: int, with_distinct: bool = False, cap: int = DEFAULT_CAP,
                seed: int = 0, budget: int = DEFAULT_BUDGET, timing: bool = False) -> ScanRecord:
    start = time.perf_counter()
    inst = classify_instance(p, k, n)
    rec = ScanRecord(p=p, k=k, q=inst.q, n=n, r=inst.r, t=inst.t, case=str(inst.case),
                     normal=inst.normal)
    if inst.is_case_one:
        try:
            rep = verify_theorem_instance(p, k, n, with_distinct=with_distinct, cap=cap,
                                          seed=seed, budget=budget)
        except GaussPeriodError as exc:
            rec.error = f"{type(exc).__name__}: {exc}".replace(",", ";")
        else:
            rec.L_n = str(rep.L_n)
            rec.bound_P = str(rep.bound_P)
            if rep.distinct_count is not None:
                rec.distinct_count = str(rep.distinct_count)
            rec.old_bound = rep.old_bound
            rec.corollary_main = rep.corollary_main
            rec.theorem_pass = rep.theorem_pass
    if timing:
        rec.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return rec


def _scan_worker(args):
    return scan_record(*args)


def scan(primes, k_max: int, n_max: int, jobs: int = 1, **kw) -> list[ScanRecord]:
    """Records for every (q, n) with r = 2n+1 prime, sorted by q then n."""
    todo = sorted(
        ((p ** k, n, p, k) for p in primes for k in range(1, k_max + 1)
         for n in range(1, n_max + 1) if is_prime(2 * n + 1)),
    )
    args = [(p, k, n, kw.get("with_distinct", False), kw.get("cap", DEFAULT_CAP),
             kw.get("seed", 0), kw.get("budget", DEFAULT_BUDGET), kw.get("timing", False))
            for _, n, p, k in todo]
    if jobs > 1 and len(args) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_scan_worker, args, chunksize=1))
    return [_scan_worker(a) for a in args]


def write_records(records, fmt: str, out) -> None:
    """Write records as CSV (header first) or JSON lines; nothing at all if empty."""
    if not records:
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(ScanRecord.field_names())
        for rec in records:
            w.writerow(rec.csv_row())
    else:
        for rec in records:
            out.write(rec.to_json() + "\n")


# -- argument handling -----------------------------------------------------------

def _prime(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _prime_list(text: str) -> list[int]:
    return sorted({_prime(part) for part in text.split(",") if part.strip()})


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def _ell(text: str) -> float:
    if text.lower() in ("inf", "infinity"):
        return math.inf
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("ell must be at least 2")
    return v


def _instance_args(sub):
    sub.add_argument("--p", type=_prime, required=True, help="characteristic")
    sub.add_argument("--k", type=_positive, default=1, help="q = p**k (default 1)")
    sub.add_argument("--n", type=_positive, required=True, help="r = 2n + 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussperiods",
        description="Multiplicative order of Gauss periods of type (n, 2).")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("classify", help="classify the pair (q, n)")
    _instance_args(sp)

    sp = subs.add_parser("order", help="exact order of the Gauss period, as JSON")
    _instance_args(sp)
    sp.add_argument("--with-distinct", action="store_true")
    sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)

    sp = subs.add_parser("scan", help="sweep many (q, n) pairs")
    sp.add_argument("--p", type=_prime_list, default=[2], help="comma-separated primes")
    sp.add_argument("--k", type=_positive, default=1, help="largest k (default 1)")
    sp.add_argument("--n-max", type=_nonneg, required=True)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    sp.add_argument("--with-distinct", action="store_true")
    sp.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte-reproducibility)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", default="-")

    sp = subs.add_parser("bound", help="partition counts and asymptotic main terms")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--s", type=_nonneg, help="partitioned total")
    group.add_argument("--n", type=_positive, help="instance size; uses s = n - 1")
    sp.add_argument("--v", type=_positive, help="multiplicity bound (default 1, or p - 1 with --n)")
    sp.add_argument("--p", type=_prime, default=2, help="characteristic, used with --n")
    sp.add_argument("--ell", type=_ell, help="prime for the main term, or 'inf'")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = subs.add_parser("verify-distinct", help="count distinct powers alpha**Q_U")
    _instance_args(sp)
    sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    return parser


def _classify(a, out):
    inst = classify_instance(a.p, a.k, a.n)
    d = {"p": inst.p, "k": inst.k, "q": inst.q, "n": inst.n, "r": inst.r,
         "r_is_prime": inst.r_is_prime, "t": inst.t, "case": str(inst.case),
         "normal": inst.normal}
    t = "-" if inst.t is None else inst.t
    print(f"q={inst.q} n={inst.n} r={inst.r} t={t} case={inst.case} "
          f"normal={'yes' if inst.normal else 'no'}", file=out)
    print(json.dumps(d), file=out)
    return 0


def _order(a, out):
    rep = verify_theorem_instance(a.p, a.k, a.n, with_distinct=a.with_distinct, cap=a.cap,
                                  seed=a.seed, budget=a.budget)
    print(json.dumps(rep.as_dict()), file=out)
    return 0 if rep.theorem_pass and rep.normal_pass else EXIT_FAILED


def _scan(a, out):
    records = scan(a.p, a.k, a.n_max, jobs=a.jobs, with_distinct=a.with_distinct, cap=a.cap,
                   seed=a.seed, budget=a.budget, timing=a.timing)
    if a.output == "-":
        write_records(records, a.format, out)
    else:
        with open(a.output, "w", newline="") as fh:
            write_records(records, a.format, fh)
    return 0


def _bound(a, out):
    if a.n is not None:
        s = a.n - 1
        v = a.v if a.v is not None else max(a.p - 1, 1)
        ell = a.ell if a.ell is not None else a.p
        rows = {"n": a.n, "s": s, "v": v}
        size = a.n
    else:
        s = a.s
        v = a.v if a.v is not None else 1
        ell = a.ell
        rows = {"s": s, "v": v}
        size = s
    rows["P"] = str(count_bounded(s, v))
    rows["Q"] = str(count_nondiv(s, v + 1))
    if ell is not None:
        rows["ell"] = "inf" if math.isinf(ell) else ell
        rows["main_term"] = float(fmt_real(hagis_main_term(size, ell)))
    if a.n is not None:
        rows["old_bound"] = float(fmt_real(old_bound(a.n)))
    if a.format == "json":
        print(json.dumps(rows), file=out)
    else:
        labels = {"P": f"P({s},{v})", "Q": f"Q({s},{v + 1})"}
        for key, val in rows.items():
            print(f"{labels.get(key, key):>12}  {val}", file=out)
    return 0


def _verify_distinct(a, out):
    res = distinct_powers_count(a.p, a.k, a.n, cap=a.cap)
    summary = {"count": str(res.count), "expected": str(res.expected),
               "truncated": res.truncated, "collisions": len(res.collisions),
               "pass": res.passed}
    print(json.dumps(summary), file=out)
    return 0 if res.passed else EXIT_FAILED


_COMMANDS = {
    "classify": _classify,
    "order": _order,
    "scan": _scan,
    "bound": _bound,
    "verify-distinct": _verify_distinct,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except NotCaseOne as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CASE_ONE
    except ResourceExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
