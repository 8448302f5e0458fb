"""Command-line front end.

Exit codes: 0 success (for ``classify``: the curve exists), 3 the curve does
not exist, 2 bad arguments or inputs outside n >= 2, d >= 1, g >= 0.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

from .classifier import ClassificationResult, classify_triple
from .lattice import DomainError, Mode
from .oracle import run_selftest
from .special import CiFamily, ci_classify, nonspecial

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISSING = 3
MAX_RECORDS = 10**7

CSV_HEADER = ["n", "d", "g", "lambda", "case", "exists", "exceptions", "quadrics", "picard_rank", "birational_only"]
CI_HEADER = ["family", "n", "d", "g", "lambda", "case", "exists", "general_exists", "exceptions", "quadrics",
             "picard_rank", "hypersurface_degree"]


@dataclass(frozen=True)
class OutputRecord:
    n: int
    d: int
    g: int
    lam: int
    case: str
    exists: bool
    exceptions: tuple
    quadrics: str
    picard_rank: int | None
    picard_witnesses: tuple
    birational_only: bool
    mode: str

    @classmethod
    def from_result(cls, res: ClassificationResult) -> "OutputRecord":
        if res.picard is None:
            rank, ws = None, ()
        elif res.picard.rank == 1:
            rank, ws = 1, tuple(f"{w.k}:{w.m}" for w in res.picard.witnesses)
        else:
            rank, ws = 2, ("H", "C")
        return cls(res.n, res.d, res.g, res.lam, res.case.value, res.exists, tuple(res.exception_labels()),
                   res.quadrics.value, rank, ws, res.birational_only, res.mode.value)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lam")
        d["exceptions"] = list(self.exceptions)
        d["picard"] = {"rank": d.pop("picard_rank"), "witnesses": list(d.pop("picard_witnesses"))}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        return cls(d["n"], d["d"], d["g"], d["lambda"], d["case"], d["exists"], tuple(d["exceptions"]),
                   d["quadrics"], d["picard"]["rank"], tuple(d["picard"]["witnesses"]), d["birational_only"],
                   d["mode"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_row(self) -> list:
        return [self.n, self.d, self.g, self.lam, self.case, _b(self.exists), ",".join(self.exceptions),
                self.quadrics, "" if self.picard_rank is None else self.picard_rank, _b(self.birational_only)]

    def to_text(self) -> str:
        lines = [
            f"n: {self.n}",
            f"d: {self.d}",
            f"g: {self.g}",
            f"mode: {self.mode}",
            f"lambda: {self.lam}",
            f"case: {self.case}",
            f"exists: {_b(self.exists)}",
            f"exceptions: {','.join(self.exceptions) or '-'}",
            f"quadrics: {self.quadrics}",
            f"picard: rank {self.picard_rank if self.picard_rank is not None else '-'} "
            f"[{' '.join(self.picard_witnesses)}]",
            f"birational_only: {_b(self.birational_only)}",
        ]
        return "\n".join(lines)


def _b(v: bool) -> str:
    return "true" if v else "false"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_classify(args) -> int:
    mode = Mode.BIRATIONAL if args.birational else Mode.EMBEDDED
    rec = OutputRecord.from_result(classify_triple(args.n, args.d, args.g, mode))
    print(rec.to_json() if args.format == "json" else rec.to_text())
    return EXIT_OK if rec.exists else EXIT_MISSING


def _box_guard(d_max: int, g_max: int, force: bool) -> None:
    count = max(d_max, 0) * max(g_max + 1, 0)
    if count > MAX_RECORDS and not force:
        raise DomainError(f"box has {count} records (> {MAX_RECORDS}); pass --force to run it anyway")


def cmd_table(args) -> int:
    _box_guard(args.d_max, args.g_max, args.force)
    if args.d_max >= 1:
        classify_triple(args.n, 1, 0)  # domain check on n
    mode = Mode(args.mode)
    records = []
    for d in range(1, args.d_max + 1):
        for g in range(0, args.g_max + 1):
            rec = OutputRecord.from_result(classify_triple(args.n, d, g, mode))
            if args.only_exists and not rec.exists:
                continue
            records.append(rec)
    if args.format == "csv":
        sys.stdout.write(_csv((r.csv_row() for r in records), CSV_HEADER))
    else:
        sys.stdout.write("".join(r.to_json() + "\n" for r in records))
    return EXIT_OK


def cmd_nonspecial(args) -> int:
    n, d, g, k = args.n, args.d, args.g, args.k
    if k < 1:
        raise DomainError("k must be >= 1")
    classify_triple(n, d, g)  # domain check
    value = bool(nonspecial(n, d, g, k))
    print(f"nonspecial: {_b(value)}")
    print(f"d <= 2nk: {d} <= {2 * n * k}: {_b(d <= 2 * n * k)}")
    print(f"dk > nk^2 + g: {d * k} > {n * k * k + g}: {_b(d * k > n * k * k + g)}")
    return EXIT_OK


def cmd_ci(args) -> int:
    fam = CiFamily.from_label(args.family)
    _box_guard(args.d_max, args.g_max, args.force)
    rows, objs = [], []
    for d in range(1, args.d_max + 1):
        for g in range(0, args.g_max + 1):
            ci = ci_classify(fam, d, g)
            if args.only_exists and not ci.exists:
                continue
            rec = OutputRecord.from_result(ci.classification)
            hyp = ci.hypersurface_degree
            rows.append([fam.label, rec.n, d, g, rec.lam, rec.case, _b(ci.exists), _b(rec.exists),
                         ",".join(rec.exceptions), rec.quadrics, rec.picard_rank, "" if hyp is None else hyp])
            if args.format != "csv":
                obj = rec.to_dict()
                obj.update(family=fam.label, exists=ci.exists, general_exists=rec.exists, hypersurface_degree=hyp)
                objs.append(obj)
    if args.format == "csv":
        sys.stdout.write(_csv(rows, CI_HEADER))
    else:
        sys.stdout.write("".join(json.dumps(o, sort_keys=True) + "\n" for o in objs))
    return EXIT_OK


def cmd_selftest(args) -> int:
    reports = run_selftest(args.n_max, args.d_max)
    for rep in reports:
        if args.format == "json":
            print(rep.to_json())
        else:
            print(rep.summary())
            for mm in rep.mismatches[:20]:
                print(f"  {mm.query} {mm.check}: expected {mm.expected}, got {mm.actual} {mm.witness}".rstrip())
    return EXIT_OK if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k3curves", description="Smooth curves on projective K3 surfaces of degree 2n.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="decide a single triple (n, d, g)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--birational", action="store_true", help="allow birational models with rational double points")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("table", help="classify every (d, g) with 1 <= d <= d-max, 0 <= g <= g-max")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--d-max", type=int, required=True)
    t.add_argument("--g-max", type=int, required=True)
    t.add_argument("--format", choices=["csv", "json-lines"], default="csv")
    t.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.EMBEDDED.value)
    t.add_argument("--only-exists", action="store_true")
    t.add_argument("--force", action="store_true")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("nonspecial", help="is O_C(k) non-special")
    for flag in ("--n", "--d", "--g", "--k"):
        s.add_argument(flag, type=int, required=True)
    s.set_defaults(func=cmd_nonspecial)

    ci = sub.add_parser("ci", help="table for complete-intersection K3 surfaces")
    ci.add_argument("--family", choices=[f.label for f in CiFamily], required=True)
    ci.add_argument("--d-max", type=int, required=True)
    ci.add_argument("--g-max", type=int, required=True)
    ci.add_argument("--format", choices=["csv", "json-lines"], default="csv")
    ci.add_argument("--only-exists", action="store_true")
    ci.add_argument("--force", action="store_true")
    ci.set_defaults(func=cmd_ci)

    st = sub.add_parser("selftest", help="run the brute-force consistency sweeps")
    st.add_argument("--n-max", type=int, default=12)
    st.add_argument("--d-max", type=int, default=40)
    st.add_argument("--format", choices=["text", "json"], default="text")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
