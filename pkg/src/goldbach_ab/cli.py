"""Command line front end: per-target reports, range verification, comet export.

Exit codes: 0 when every selected claim holds (boundary cases permitted),
1 when a counterexample was found, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .claims import (
    ALL_CLAIMS,
    ClaimId,
    ClaimOutcome,
    comet_rows,
    companions,
    evaluate_claims,
    midpoint_report,
    pairing_report,
    range_verify,
)
from .classify import EvenTarget, factorize_even, split_primes
from .errors import CounterexampleFound, UsageError
from .partition import census
from .sieve import DEFAULT_SEGMENT_SIZE, build_table

ENV_WORKERS = "GOLDBACH_AB_WORKERS"
ENV_SEGMENT_SIZE = "GOLDBACH_AB_SEGMENT_SIZE"

COMET_HEADER = "two_n,r,s,a_count,b_count"

_CLAIM_TOKENS = {
    "sametype": ClaimId.SAME_TYPE_LEMMA,
    "sametypelemma": ClaimId.SAME_TYPE_LEMMA,
    "sbound": ClaimId.S_BOUND,
    "sbounds": ClaimId.S_BOUND,
    "primepower": ClaimId.PRIME_POWER_EXCLUSION,
    "primepowerexclusion": ClaimId.PRIME_POWER_EXCLUSION,
    "midpointcoprime": ClaimId.MIDPOINT_COPRIME,
    "midpointdecomposes": ClaimId.MIDPOINT_DECOMPOSES,
    "pairing": ClaimId.PAIRING_NON_EMPTY,
    "pairingnonempty": ClaimId.PAIRING_NON_EMPTY,
    "witness": ClaimId.GOLDBACH_WITNESS,
    "goldbach": ClaimId.GOLDBACH_WITNESS,
    "goldbachwitness": ClaimId.GOLDBACH_WITNESS,
    "companions": ClaimId.COMPANION_DECOMPOSES,
    "companion": ClaimId.COMPANION_DECOMPOSES,
    "companiondecomposes": ClaimId.COMPANION_DECOMPOSES,
}


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: command, target range, selection and output."""

    command: str
    lo: int
    hi: int
    claims: tuple[ClaimId, ...]
    workers: int
    segment_size: int
    fmt: str
    out: str | None


def parse_claims(text: str) -> tuple[ClaimId, ...]:
    """Comma-separated claim names (hyphens/underscores ignored) or 'all'."""
    picked: list[ClaimId] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        norm = token.lower().replace("-", "").replace("_", "")
        if norm == "all":
            return ALL_CLAIMS
        cid = _CLAIM_TOKENS.get(norm)
        if cid is None:
            raise UsageError(f"unknown claim {token!r}")
        if cid not in picked:
            picked.append(cid)
    if not picked:
        raise UsageError(f"no claims selected from {text!r}")
    return tuple(c for c in ALL_CLAIMS if c in picked)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from exc


def _resolve_range(positional: list[int], range_flag: str | None) -> tuple[int, int]:
    if positional and range_flag:
        raise UsageError("give either positional LO HI or --range, not both")
    if range_flag:
        parts = range_flag.split("..")
        if len(parts) != 2:
            raise UsageError(f"--range expects LO..HI, got {range_flag!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise UsageError(f"--range expects integers, got {range_flag!r}") from exc
    if len(positional) == 2:
        return positional[0], positional[1]
    raise UsageError("a range is required: positional LO HI or --range LO..HI")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _flat_csv(report: dict) -> str:
    """field,value rows; nested keys joined with dots, lists JSON-encoded."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["field", "value"])

    def walk(prefix: str, node) -> None:
        if isinstance(node, dict):
            for key, val in node.items():
                walk(f"{prefix}.{key}" if prefix else str(key), val)
        elif isinstance(node, (list, tuple)):
            writer.writerow([prefix, json.dumps(node, separators=(",", ":"))])
        else:
            writer.writerow([prefix, node])

    walk("", report)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# analyze / census report assembly
# ---------------------------------------------------------------------------


def build_analyze_report(t: EvenTarget, table) -> dict:
    fac = factorize_even(t, table)
    split = split_primes(t, table)
    cen = census(t, table)
    report: dict = {
        "two_n": t.two_n,
        "n": t.n,
        "factorization": {
            "m": fac.m,
            "odd_factors": {str(p): e for p, e in fac.b_factors},
        },
        "prime_split": {
            "s": split.s,
            "a_primes": list(split.a_primes),
            "b_primes": list(split.b_primes),
        },
        "census": _census_dict(cen),
    }
    try:
        recs = companions(t, split, table)
        report["companions"] = [
            {
                "p": r.p,
                "companion": r.companion,
                "companion_is_prime": r.companion_is_prime,
                "exponents": {str(p): e for p, e in r.exps.as_prime_dict().items()},
            }
            for r in recs
        ]
    except CounterexampleFound as exc:
        report["companions"] = {"error": str(exc), "witness": exc.witness}
    try:
        pairing = pairing_report(t, split, table)
        report["pairing"] = {
            "pairs": [list(p) for p in pairing.pairs],
            "unpaired": list(pairing.unpaired),
        }
    except CounterexampleFound as exc:
        report["pairing"] = {"error": str(exc), "witness": exc.witness}
    if t.two_n >= 8:
        mid = midpoint_report(t, split, table)
        report["midpoints"] = {
            "parity": mid.parity,
            "values": [
                {
                    "value": v.value,
                    "is_prime": v.is_prime,
                    "exponents": {str(p): e for p, e in v.exps.as_prime_dict().items()}
                    if v.exps is not None
                    else None,
                }
                for v in mid.values
            ],
            "both_prime_pair": list(mid.both_prime_pair)
            if mid.both_prime_pair
            else None,
        }
    else:
        report["midpoints"] = None
    report["claims"] = [o.as_dict() for o in evaluate_claims(t, table)]
    return report


def _census_dict(cen) -> dict:
    return {
        "total": cen.total,
        "a_count": cen.a_count,
        "b_count": cen.b_count,
        "mixed_count": cen.mixed_count,
        "goldbach_count": cen.goldbach_count,
        "goldbach_pairs": [list(p) for p in cen.goldbach_pairs],
    }


def cmd_analyze(cfg: RunConfig) -> int:
    t = EvenTarget(cfg.lo)
    table = build_table(t.two_n + 1, cfg.segment_size)
    report = build_analyze_report(t, table)
    if cfg.fmt == "csv":
        _emit(_flat_csv(report), cfg.out)
    else:
        _emit(json.dumps(report, indent=2) + "\n", cfg.out)
    failed = any(o["status"] == "fail" for o in report["claims"])
    return 1 if failed else 0


def cmd_census(cfg: RunConfig) -> int:
    t = EvenTarget(cfg.lo)
    table = build_table(t.two_n + 1, cfg.segment_size)
    cen = census(t, table)
    split = split_primes(t, table)
    if cfg.fmt == "csv":
        row = f"{t.two_n},{cen.goldbach_count},{split.s},{cen.a_count},{cen.b_count}"
        _emit(f"{COMET_HEADER}\n{row}\n", cfg.out)
    else:
        report = {"two_n": t.two_n, "s": split.s, **_census_dict(cen)}
        _emit(json.dumps(report, indent=2) + "\n", cfg.out)
    return 1 if cen.mixed_count else 0


# ---------------------------------------------------------------------------
# verify / comet
# ---------------------------------------------------------------------------


def _outcome_line(o: ClaimOutcome) -> str:
    bits = [f"claim {o.claim_id.value}: {o.status}"]
    p = o.payload
    if "evens_checked" in p:
        bits.append(f"checked {p['evens_checked']} evens")
    if o.status == "fail":
        bits.append(f"counterexample {p.get('counterexample')}")
    if "min_s" in p:
        bits.append(f"min s={p['min_s']['s']} at 2N={p['min_s']['two_n']}")
    if "max_s" in p:
        bits.append(f"max s={p['max_s']['s']} at 2N={p['max_s']['two_n']}")
    if "boundary_cases" in p:
        bits.append(f"boundary at {[b['two_n'] for b in p['boundary_cases']]}")
    return "; ".join(bits)


def cmd_verify(cfg: RunConfig) -> int:
    table = build_table(cfg.hi + 1, cfg.segment_size)
    run_set = tuple(c for c in ALL_CLAIMS if c in {*cfg.claims, ClaimId.S_BOUND})
    outcomes = range_verify(
        cfg.lo, cfg.hi, claims=run_set, workers=cfg.workers, table=table
    )
    by_id = {o.claim_id: o for o in outcomes}
    selected = [by_id[c] for c in cfg.claims]
    exit_code = 0 if all(o.ok for o in selected) else 1
    if cfg.fmt == "json":
        doc = {
            "lo": cfg.lo,
            "hi": cfg.hi,
            "workers": cfg.workers,
            "outcomes": [o.as_dict() for o in selected],
            "s_stats": {
                k: by_id[ClaimId.S_BOUND].payload.get(k) for k in ("min_s", "max_s")
            },
            "exit_code": exit_code,
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
        return exit_code
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["claim", "status", "evens_checked", "payload"])
        for o in selected:
            writer.writerow(
                [
                    o.claim_id.value,
                    o.status,
                    o.payload.get("evens_checked", 1),
                    json.dumps(o.payload, separators=(",", ":")),
                ]
            )
        _emit(buf.getvalue(), cfg.out)
        return exit_code
    lines = [f"verify [{cfg.lo}, {cfg.hi}] with {cfg.workers} worker(s)"]
    lines += [_outcome_line(o) for o in selected]
    sp = by_id[ClaimId.S_BOUND].payload
    passed = sum(1 for o in selected if o.ok)
    summary = f"summary: {passed}/{len(selected)} claims hold"
    if sp.get("min_s"):
        summary += (
            f"; min s={sp['min_s']['s']} at 2N={sp['min_s']['two_n']}"
            f"; max s={sp['max_s']['s']} at 2N={sp['max_s']['two_n']}"
        )
    lines.append(summary)
    _emit("\n".join(lines) + "\n", cfg.out)
    return exit_code


def comet_csv(rows) -> str:
    out = [COMET_HEADER]
    out.extend(f"{t},{r},{s},{a},{b}" for t, r, s, a, b in rows)
    return "\n".join(out) + "\n"


def cmd_comet(cfg: RunConfig) -> int:
    table = build_table(cfg.hi + 1, cfg.segment_size)
    rows = comet_rows(cfg.lo, cfg.hi, workers=cfg.workers, table=table)
    if cfg.fmt == "json":
        doc = [
            {"two_n": t, "r": r, "s": s, "a_count": a, "b_count": b}
            for t, r, s, a, b in rows
        ]
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    else:
        _emit(comet_csv(rows), cfg.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldbach-ab",
        description="Classify, census and verify Goldbach partitions of even "
        "numbers by coprimality type.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_workers: bool):
        p.add_argument("--segment-size", type=int, default=None,
                       help="sieve segment width (odd numbers per segment)")
        p.add_argument("--out", default=None, help="write output to this path")
        if with_workers:
            p.add_argument("--workers", type=int, default=None,
                           help="parallel workers for the range run")

    p_an = sub.add_parser("analyze", help="full structural report for one 2N")
    p_an.add_argument("two_n", type=int)
    p_an.add_argument("--format", choices=("json", "csv"), default="json")
    add_common(p_an, with_workers=False)

    p_ce = sub.add_parser("census", help="partition census for one 2N")
    p_ce.add_argument("two_n", type=int)
    p_ce.add_argument("--format", choices=("json", "csv"), default="json")
    add_common(p_ce, with_workers=False)

    p_ve = sub.add_parser("verify", help="verify claims over an even range")
    p_ve.add_argument("bounds", type=int, nargs="*", metavar="LO HI")
    p_ve.add_argument("--range", dest="range_flag", default=None,
                      metavar="LO..HI")
    p_ve.add_argument("--claims", default=None,
                      help="comma-separated claim names, or 'all'")
    p_ve.add_argument("--all", action="store_true", help="run every claim")
    p_ve.add_argument("--format", choices=("text", "json", "csv"), default="text")
    add_common(p_ve, with_workers=True)

    p_co = sub.add_parser("comet", help="export two_n,r,s,a_count,b_count rows")
    p_co.add_argument("bounds", type=int, nargs="*", metavar="LO HI")
    p_co.add_argument("--range", dest="range_flag", default=None,
                      metavar="LO..HI")
    p_co.add_argument("--format", choices=("csv", "json"), default="csv")
    add_common(p_co, with_workers=True)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    workers = getattr(args, "workers", None)
    if workers is None:
        workers = _env_int(ENV_WORKERS, 1)
    segment = args.segment_size
    if segment is None:
        segment = _env_int(ENV_SEGMENT_SIZE, DEFAULT_SEGMENT_SIZE)
    if args.command in ("analyze", "census"):
        lo = hi = args.two_n
        claims = ALL_CLAIMS
    else:
        lo, hi = _resolve_range(args.bounds, args.range_flag)
        if args.command == "verify":
            if args.claims and args.all:
                raise UsageError("give either --claims or --all, not both")
            claims = parse_claims(args.claims) if args.claims else ALL_CLAIMS
        else:
            claims = ALL_CLAIMS
    return RunConfig(
        command=args.command,
        lo=lo,
        hi=hi,
        claims=claims,
        workers=workers,
        segment_size=segment,
        fmt=args.format,
        out=args.out,
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if cfg.command == "analyze":
            return cmd_analyze(cfg)
        if cfg.command == "census":
            return cmd_census(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        return cmd_comet(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
