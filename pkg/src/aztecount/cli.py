"""Command-line interface: ``compute``, ``sweep``, and ``verify``.

Counts are emitted as exact decimal strings (they outgrow fixed-width
integers quickly).  CSV output always carries the fixed header
``p,q,n,count,method,elapsed_ms``; JSON-lines output carries the same
fields per line.  Exit codes: 0 success, 1 usage error, 2 capacity
error, 3 verification failure.
"""

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass

from . import counter, verify
from .caps import CapacityError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_VERIFY = 3

CSV_FIELDS = ("p", "q", "n", "count", "method", "elapsed_ms")

METHODS = ("dense", "vector", "oracle")


@dataclass
class OutputRecord:
    p: int
    q: int
    n: int
    count: str | None  # exact decimal string; None when the cell errored
    method: str
    elapsed_ms: int
    error: str | None = None


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this CLI reserves 2 for capacity
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aztecount", description="Exact domino tiling counts of expanded Aztec diamonds.")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="count tilings of one region")
    compute.add_argument("--p", type=_nonnegative, required=True, help="extra columns")
    compute.add_argument("--q", type=_nonnegative, required=True, help="extra middle rows")
    compute.add_argument("--n", type=_nonnegative, required=True, help="order")
    compute.add_argument("--method", choices=METHODS, default="vector")
    compute.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    sweep = sub.add_parser("sweep", help="count tilings for all triples up to the given maxima")
    sweep.add_argument("--p-max", type=_nonnegative, required=True)
    sweep.add_argument("--q-max", type=_nonnegative, required=True)
    sweep.add_argument("--n-max", type=_nonnegative, required=True)
    sweep.add_argument("--method", choices=METHODS, default="vector")
    sweep.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    ver = sub.add_parser("verify", help="run the self-check suites")
    ver.add_argument("--max-squares", type=_nonnegative, default=28,
                     help="square-count bound for the enumeration sweeps (default 28)")
    return parser


def _record(p: int, q: int, n: int, method: str) -> OutputRecord:
    try:
        value, elapsed = counter.timed_count(p, q, n, method)
    except CapacityError as exc:
        return OutputRecord(p, q, n, None, method, 0, error=str(exc))
    return OutputRecord(p, q, n, str(value), method, elapsed)


def _emit(records: list[OutputRecord], fmt: str, stream) -> None:
    if fmt == "jsonl":
        for rec in records:
            payload = asdict(rec)
            if payload["error"] is None:
                del payload["error"]
            stream.write(json.dumps(payload) + "\n")
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in records:
        count = rec.count if rec.count is not None else ""
        writer.writerow([rec.p, rec.q, rec.n, count, rec.method, rec.elapsed_ms])


def _cmd_compute(args) -> int:
    rec = _record(args.p, args.q, args.n, args.method)
    if rec.error is not None:
        print(json.dumps({"error": "capacity", "detail": rec.error}), file=sys.stderr)
        return EXIT_CAPACITY
    _emit([rec], args.format, sys.stdout)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    records = []
    for p in range(args.p_max + 1):
        for q in range(args.q_max + 1):
            for n in range(args.n_max + 1):
                rec = _record(p, q, n, args.method)
                if rec.error is not None:
                    print(json.dumps({"error": "capacity", "cell": [p, q, n], "detail": rec.error}),
                          file=sys.stderr)
                records.append(rec)
    _emit(records, args.format, sys.stdout)
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = verify.run_all(max_squares=args.max_squares)
    broken = False
    for name, failures in results.items():
        if failures:
            broken = True
            print(f"{name}: FAIL ({len(failures)} case(s))")
            for line in failures:
                print(f"  {line}")
        else:
            print(f"{name}: ok")
    print("verification failed" if broken else "all suites pass")
    return EXIT_VERIFY if broken else EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "compute":
        return _cmd_compute(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    return _cmd_verify(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
