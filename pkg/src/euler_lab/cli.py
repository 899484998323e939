"""Command-line surface: census, classify, enumerate, verify, witness, sstest.

Every successful invocation prints exactly one JSON envelope on stdout
(schema_version "1", snake_case fields); CSV mode streams records instead.
Timings, progress and diagnostics go to stderr only, so stdout is
byte-identical across repeated runs with the same arguments and seed.

Exit codes: 0 success, 1 usage error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import ClassificationReport, WitnessCertificate, classify, find_euler_witness
from .errors import DomainError, FactorizationTimeout, UsageError
from .liars import census
from .sstest import solovay_strassen
from .sweeps import (
    SweepMode,
    SweepReport,
    enumerate_carmichael,
    enumerate_special_carmichael,
    verify_characterization,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad arguments; the contract here is 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="euler-lab",
        description="Census, classification and verification tools for Euler pseudoprimes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", parents=[], help="exhaustive liar census of one odd composite")
    p.add_argument("n", type=int)

    p = sub.add_parser("classify", help="prime / composite / carmichael / special verdict")
    p.add_argument("n", type=int)

    p = sub.add_parser("enumerate", help="list (special) Carmichael numbers up to a limit")
    p.add_argument("--kind", choices=["carmichael", "special-carmichael"], required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("verify", help="machine-check the half-liars characterization on a range")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in SweepMode], default=SweepMode.BRUTE_FORCE.value)
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")

    p = sub.add_parser("witness", help="smallest base disproving primality of an odd composite")
    p.add_argument("n", type=int)

    p = sub.add_parser("sstest", help="seeded Solovay-Strassen primality test")
    p.add_argument("n", type=int)
    p.add_argument("--rounds", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _emit(command: str, result: dict, started: float) -> None:
    envelope = {"schema_version": SCHEMA_VERSION, "command": command, "result": result}
    sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    elapsed_ms = (time.monotonic() - started) * 1000.0
    print(f"{command}: done in {elapsed_ms:.1f} ms", file=sys.stderr)


def _witness_payload(cert: WitnessCertificate) -> dict:
    return {
        "n": cert.n,
        "base": cert.base,
        "kind": cert.kind.value,
        "evidence": dict(cert.evidence),
    }


def _classification_payload(report: ClassificationReport) -> dict:
    return {
        "n": report.n,
        "verdict": report.verdict.value,
        "factors": [[p, k] for p, k in report.factors.factors] if report.factors else None,
        "korselt_evidence": [
            {
                "p": fact.p,
                "divides_n_minus_1": fact.divides_n_minus_1,
                "divides_half_n_minus_1": fact.divides_half_n_minus_1,
            }
            for fact in report.korselt_evidence
        ],
    }


def _sweep_payload(report: SweepReport) -> dict:
    return {
        "lo": report.lo,
        "hi": report.hi,
        "mode": report.mode.value,
        "checked": report.checked,
        "violations": [
            {"n": v.n, "expected": v.expected, "observed": v.observed}
            for v in report.violations
        ],
    }


def _run(args: argparse.Namespace, started: float) -> None:
    if args.command == "census":
        c = census(args.n)
        _emit("census", {
            "n": c.n,
            "phi": c.phi,
            "fermat_liars": c.fermat_liars,
            "euler_liars": c.euler_liars,
            "b_count": c.b_count,
            "b_plus_count": c.b_plus_count,
            "p_count": c.p_count,
            "n_count": c.n_count,
        }, started)
    elif args.command == "classify":
        _emit("classify", _classification_payload(classify(args.n)), started)
    elif args.command == "enumerate":
        values = (
            enumerate_carmichael(args.limit)
            if args.kind == "carmichael"
            else enumerate_special_carmichael(args.limit)
        )
        if args.format == "csv":
            sys.stdout.write("n\n")
            for v in values:
                sys.stdout.write(f"{v}\n")
            print(f"enumerate: {len(values)} rows", file=sys.stderr)
        else:
            _emit("enumerate", {
                "kind": args.kind,
                "limit": args.limit,
                "count": len(values),
                "values": values,
            }, started)
    elif args.command == "verify":
        def progress(done: int, total: int) -> None:
            print(f"verify: block {done}/{total}", file=sys.stderr)

        report = verify_characterization(
            args.lo, args.hi, SweepMode(args.mode), workers=args.workers, on_block=progress
        )
        _emit("verify", _sweep_payload(report), started)
    elif args.command == "witness":
        _emit("witness", _witness_payload(find_euler_witness(args.n)), started)
    elif args.command == "sstest":
        outcome = solovay_strassen(args.n, args.rounds, args.seed)
        _emit("sstest", {
            "n": outcome.n,
            "verdict": outcome.verdict.value,
            "rounds_run": outcome.rounds_run,
            "seed": outcome.seed,
            "witness": _witness_payload(outcome.witness) if outcome.witness else None,
        }, started)
    else:  # pragma: no cover - argparse enforces the choices
        raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    started = time.monotonic()
    args = build_parser().parse_args(argv)
    try:
        _run(args, started)
    except UsageError as exc:
        print(f"euler-lab {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, FactorizationTimeout) as exc:
        print(f"euler-lab {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
