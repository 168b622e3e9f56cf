"""Command-line interface.

Structured results go to stdout as single-line JSON (JSON-lines for
scans); progress and diagnostics go to stderr.  Exit codes: 0 for a
completed computation (including holds=false and NotCoverable answers),
2 for invalid designs or invalid mathematical input, 3 for I/O and parse
problems, 4 when a resource cap stopped the run (after emitting a
partial report).  Repeated runs on the same input emit byte-identical
output except for the elapsed_ms timing fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import claims as claims_mod
from .containment import (
    ContainmentEngine,
    check_els,
    chudnovsky_check,
    demailly_check,
    harbourne_huneke_scan,
    resurgence_region,
    stable_harbourne_scan,
)
from .designs import (
    chromatic_number,
    complement_blocks,
    is_colourable,
    is_coverable,
    load_hypergraph,
    resolve_design,
)
from .errors import (
    DegenerateRegion,
    DesignError,
    FormatError,
    ResourceLimit,
    SteinerIdealsError,
    TSubsetMultiplyCovered,
    TSubsetUncovered,
    Uncolourable,
)
from .monomials import dump_monomials
from .symbolic import (
    DEFAULT_GENERATOR_CAP,
    alpha_table,
    complement_ideal,
    cover_ideal,
    symbolic_power,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_RESOURCE = 4


@dataclass(frozen=True)
class RunConfig:
    """Resolved resource settings shared by the long-running commands."""

    generator_cap: int
    time_cap: float | None
    threads: int
    progress_interval: float

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        cap = args.generator_cap
        if cap is None:
            cap = int(os.environ.get("STEINERIDEALS_GENERATOR_CAP", DEFAULT_GENERATOR_CAP))
        tcap = args.time_cap
        if tcap is None:
            env = os.environ.get("STEINERIDEALS_TIME_CAP")
            tcap = float(env) if env else None
        if cap < 1:
            raise ValueError("generator cap must be positive")
        if tcap is not None and tcap <= 0:
            raise ValueError("time cap must be positive")
        threads = getattr(args, "threads", 1)
        if threads < 1:
            raise ValueError("threads must be positive")
        return cls(cap, tcap, threads, getattr(args, "progress_interval", 0.0))

    def deadline(self) -> float | None:
        return None if self.time_cap is None else time.monotonic() + self.time_cap

    def progress_fn(self):
        if self.progress_interval <= 0:
            return None
        state = {"last": 0.0}

        def fn(step: int, total: int, kept: int) -> None:
            now = time.monotonic()
            if now - state["last"] >= self.progress_interval:
                state["last"] = now
                print(
                    f"progress: folded {step}/{total} supports, {kept} generators",
                    file=sys.stderr,
                    flush=True,
                )

        return fn


def _emit(doc: dict, output: str | None = None) -> None:
    line = json.dumps(doc, separators=(",", ":"))
    if output:
        with open(output, "w") as fh:
            fh.write(line + "\n")
    else:
        print(line)


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _load_design_or_hypergraph(spec_str: str):
    """Resolve input to (design or None, hypergraph)."""
    if spec_str.startswith("builtin:"):
        S = resolve_design(spec_str)
        return S, S.hypergraph()
    # try design schema first, fall back to hypergraph schema
    try:
        S = resolve_design(spec_str)
        return S, S.hypergraph()
    except FormatError:
        return None, load_hypergraph(spec_str)


def _decomposition(args):
    """Build the requested PrimeDecomposition from CLI input."""
    S, H = _load_design_or_hypergraph(args.input)
    if args.source == "complement":
        if S is None:
            raise FormatError("--source complement needs a Steiner design input")
        return complement_ideal(S)
    return cover_ideal(H)


def cmd_validate(args) -> int:
    try:
        S = resolve_design(args.design)
    except (TSubsetUncovered, TSubsetMultiplyCovered) as exc:
        _emit(
            {
                "valid": False,
                "error": type(exc).__name__,
                "t_subset": list(exc.tsubset),
            }
        )
        return EXIT_INVALID
    except DesignError as exc:
        _emit({"valid": False, "error": type(exc).__name__, "detail": str(exc)})
        return EXIT_INVALID
    except ValueError as exc:
        _emit({"valid": False, "error": "ValueError", "detail": str(exc)})
        return EXIT_INVALID
    _emit(
        {
            "valid": True,
            "v": S.v,
            "n": S.n,
            "t": S.t,
            "block_count": S.block_count,
        }
    )
    return EXIT_OK


def cmd_complement(args) -> int:
    S = resolve_design(args.design)
    comp = complement_blocks(S)
    doc = {
        "vertices": S.v,
        "edges": [list(c) for c in comp],
        "count": len(comp),
    }
    _emit(doc, args.output)
    return EXIT_OK


def cmd_coverability(args) -> int:
    _, H = _load_design_or_hypergraph(args.input)
    if args.chromatic:
        try:
            chi = chromatic_number(H)
        except Uncolourable as exc:
            _emit({"query": "chromatic", "error": "Uncolourable", "detail": str(exc)})
            return EXIT_INVALID
        _emit({"query": "chromatic", "chromatic_number": chi})
        return EXIT_OK
    if args.cover is not None:
        part = is_coverable(H, args.cover)
        doc = {"query": "cover", "c": args.cover, "coverable": part is not None}
        if part is not None:
            doc["classes"] = [list(c) for c in part.classes]
        else:
            doc["exhaustive"] = True
        _emit(doc)
        return EXIT_OK
    part = is_colourable(H, args.colour)
    doc = {"query": "colour", "m": args.colour, "colourable": part is not None}
    if part is not None:
        doc["classes"] = [list(c) for c in part.classes]
    else:
        doc["exhaustive"] = True
    _emit(doc)
    return EXIT_OK


def cmd_symbolic(args) -> int:
    config = RunConfig.from_args(args)
    P = _decomposition(args)
    ideal = symbolic_power(
        P,
        args.m,
        generator_cap=config.generator_cap,
        deadline=config.deadline(),
        progress=config.progress_fn(),
    )
    out_path = args.generators_out
    if out_path:
        dump_monomials(out_path, ideal)
    _emit(
        {
            "m": args.m,
            "alpha": ideal.min_degree(),
            "generator_count": ideal.generator_count,
            "generators": out_path or None,
        }
    )
    return EXIT_OK


def cmd_alpha(args) -> int:
    config = RunConfig.from_args(args)
    P = _decomposition(args)
    table = alpha_table(P, args.max_m)
    _emit(table.to_dict())
    return EXIT_OK


def cmd_containment(args) -> int:
    config = RunConfig.from_args(args)
    P = _decomposition(args)
    engine = ContainmentEngine(
        P,
        generator_cap=config.generator_cap,
        time_budget=config.time_cap,
        progress=config.progress_fn(),
    )
    report = engine.check(args.m, args.r, args.slack, audit=args.audit)
    _emit(report.to_dict())
    return EXIT_OK


def cmd_scan(args) -> int:
    config = RunConfig.from_args(args)
    P = _decomposition(args)
    engine = ContainmentEngine(
        P,
        generator_cap=config.generator_cap,
        time_budget=config.time_cap,
        progress=config.progress_fn(),
    )
    cells = [
        (m, r)
        for r in range(1, args.r_max + 1)
        for m in range(r + 1, args.m_max + 1)
    ]

    def run_cell(cell):
        m, r = cell
        return engine.check(m, r, 0)

    failures = []
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            reports = list(pool.map(run_cell, cells))
    else:
        reports = [run_cell(c) for c in cells]
    for rep in reports:
        _emit(rep.to_dict())
        if not rep.holds:
            failures.append(rep)
    best = max((Fraction(f.m, f.r) for f in failures), default=None)
    _emit(
        {
            "summary": {
                "m_max": args.m_max,
                "r_max": args.r_max,
                "cells": len(cells),
                "failures": len(failures),
                "max_ratio": _frac(best),
            }
        }
    )
    return EXIT_OK


def cmd_resurgence_region(args) -> int:
    try:
        r1 = Fraction(args.r1)
        ratio = Fraction(args.ratio)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational argument: {exc}") from exc
    try:
        region = resurgence_region(args.big_height, args.ambient_dim, r1, ratio)
    except DegenerateRegion as exc:
        _emit({"degenerate": True, "reason": str(exc)})
        return EXIT_OK
    doc = region.to_dict()
    doc["degenerate"] = False
    doc["s_max"] = {str(r): _frac(region.s_max(r)) for r in range(1, region.r_max + 1)}
    _emit(doc)
    return EXIT_OK


def cmd_conjectures(args) -> int:
    config = RunConfig.from_args(args)
    P = _decomposition(args)
    engine = ContainmentEngine(
        P,
        generator_cap=config.generator_cap,
        time_budget=config.time_cap,
        progress=config.progress_fn(),
    )
    which = args.which
    if which == "applicable":
        names = ["stable-harbourne", "harbourne-huneke-1", "harbourne-huneke-2", "els"]
        if P.steiner is not None or args.ambient_dim is not None:
            names += ["chudnovsky", "demailly"]
        else:
            print(
                "note: skipping chudnovsky/demailly (no Steiner provenance; "
                "pass --ambient-dim to include them)",
                file=sys.stderr,
            )
    else:
        names = [which]
    r_lo, r_hi = args.r_lo, args.r_hi
    for name in names:
        if name == "stable-harbourne":
            verdict = stable_harbourne_scan(P, r_lo, r_hi, engine=engine)
        elif name == "harbourne-huneke-1":
            verdict = harbourne_huneke_scan(P, r_lo, r_hi, 1, engine=engine)
        elif name == "harbourne-huneke-2":
            verdict = harbourne_huneke_scan(P, r_lo, r_hi, 2, engine=engine)
        elif name == "els":
            for r in range(r_lo, r_hi + 1):
                check_els(P, r, engine=engine)
            verdict = None
            _emit(
                {
                    "conjecture": "els",
                    "all_hold": True,
                    "instances": [
                        {"params": {"r": r, "m": P.big_height * r}, "holds": True}
                        for r in range(r_lo, r_hi + 1)
                    ],
                }
            )
        elif name == "chudnovsky":
            verdict = chudnovsky_check(P, args.h_max, args.ambient_dim, engine=engine)
        else:
            verdict = demailly_check(P, args.m, args.h_max, args.ambient_dim, engine=engine)
        if verdict is not None:
            _emit(verdict.to_dict())
    return EXIT_OK


def cmd_reproduce(args) -> int:
    if args.list:
        for cid in claims_mod.claim_ids():
            print(cid)
        return EXIT_OK
    only = args.only
    if only is not None and only not in claims_mod.claim_ids():
        print(f"unknown claim id {only!r}; use --list", file=sys.stderr)
        return EXIT_IO
    rows = []
    for cid, desc, ok, detail, seconds in claims_mod.run_claims(only):
        status = "PASS" if ok else "FAIL"
        print(f"{cid}\t{status}\t{detail}")
        rows.append(ok)
    passed = sum(rows)
    print(f"summary\t{passed}/{len(rows)} passed")
    return EXIT_OK if passed == len(rows) else 1


def _add_limits(p: argparse.ArgumentParser, threads: bool = False) -> None:
    p.add_argument(
        "--generator-cap",
        type=int,
        default=None,
        help="abort with a partial report beyond this many generators "
        "(default: STEINERIDEALS_GENERATOR_CAP or 2000000)",
    )
    p.add_argument(
        "--time-cap",
        type=float,
        default=None,
        help="wall-clock budget in seconds (default: STEINERIDEALS_TIME_CAP or none)",
    )
    p.add_argument(
        "--progress-interval",
        type=float,
        default=0.0,
        help="seconds between stderr progress lines (0 disables)",
    )
    if threads:
        p.add_argument(
            "--threads", type=int, default=1, help="worker threads for scan cells"
        )


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="builtin:<name> or a design/hypergraph JSON file")
    p.add_argument(
        "--source",
        choices=("cover", "complement"),
        required=True,
        help="cover: edge supports of the input; complement: non-blocks of a design",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="steinerideals",
        description="Exact computations on Steiner systems and their "
        "cover/complement squarefree ideals.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the S(t,n,v) axioms of a design")
    p.add_argument("design", help="builtin:<name> or a design JSON file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("complement", help="emit the non-blocks as a hypergraph document")
    p.add_argument("design")
    p.add_argument("--output", default=None, help="write JSON here instead of stdout")
    p.set_defaults(fn=cmd_complement)

    p = sub.add_parser("coverability", help="coverability, colourability, chromatic number")
    p.add_argument("input", help="builtin:<name> or a design/hypergraph JSON file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cover", type=int, metavar="C", help="partition meeting every edge")
    g.add_argument("--colour", type=int, metavar="M", help="weak colouring with M classes")
    g.add_argument("--chromatic", action="store_true", help="compute the chromatic number")
    p.set_defaults(fn=cmd_coverability)

    p = sub.add_parser("symbolic", help="minimal generators of a symbolic power")
    _add_source(p)
    p.add_argument("-m", type=int, required=True, help="symbolic power exponent")
    p.add_argument(
        "--generators-out", default=None, help="write generators to this text file"
    )
    _add_limits(p)
    p.set_defaults(fn=cmd_symbolic)

    p = sub.add_parser("alpha", help="initial degree table and Waldschmidt bounds")
    _add_source(p)
    p.add_argument("-M", "--max-m", type=int, required=True, help="table up to this m")
    _add_limits(p)
    p.set_defaults(fn=cmd_alpha)

    p = sub.add_parser("containment", help="decide I^(m) <= M^slack * I^r")
    _add_source(p)
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--slack", type=int, default=0)
    p.add_argument(
        "--audit",
        action="store_true",
        help="disable closed-form shortcuts; force the generator scan",
    )
    _add_limits(p)
    p.set_defaults(fn=cmd_containment)

    p = sub.add_parser("scan", help="containment scan over a (m, r) box, JSON-lines")
    _add_source(p)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    _add_limits(p, threads=True)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser(
        "resurgence-region", help="bound the search region for resurgence failures"
    )
    p.add_argument("big_height", type=int)
    p.add_argument("ambient_dim", type=int)
    p.add_argument("r1", help="rational like 2 or 3/2, must be > 1")
    p.add_argument("ratio", help="failing ratio s0/r0 as a rational")
    p.set_defaults(fn=cmd_resurgence_region)

    p = sub.add_parser("conjectures", help="scan the documented conjecture families")
    _add_source(p)
    p.add_argument(
        "--which",
        default="applicable",
        choices=(
            "applicable",
            "stable-harbourne",
            "harbourne-huneke-1",
            "harbourne-huneke-2",
            "els",
            "chudnovsky",
            "demailly",
        ),
    )
    p.add_argument("--r-lo", type=int, default=1)
    p.add_argument("--r-hi", type=int, default=2)
    p.add_argument("--h-max", type=int, default=6, help="chudnovsky/demailly h range")
    p.add_argument("-m", type=int, default=2, help="demailly symbolic exponent")
    p.add_argument(
        "--ambient-dim",
        type=int,
        default=None,
        help="ambient dimension when the input has no Steiner provenance",
    )
    _add_limits(p)
    p.set_defaults(fn=cmd_conjectures)

    p = sub.add_parser("reproduce", help="re-run the documented worked examples")
    p.add_argument("--only", default=None, help="run a single claim id")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    p.set_defaults(fn=cmd_reproduce)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimit as exc:
        _emit({"error": "resource-limit", "stage": exc.stage, "partial": exc.partial})
        return EXIT_RESOURCE
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DesignError, Uncolourable) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SteinerIdealsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
