"""Command-line interface: ``analyze``, ``sweep``, ``enumerate``, ``dynamics``.

Exit codes: 0 success, 2 usage error, 3 validation error, 4 internal fault
(an empty equilibrium list, or solver and closed form disagreeing where
they must agree).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import serialize as ser
from .closed_form import ClosedFormResult, closed_form_updr
from .dynamics import random_interior, simulate
from .equilibria import (
    FAMILY,
    POINT,
    EquilibriumFinding,
    InternalFault,
    ordered_map,
    support_report,
    symmetric_equilibria,
)
from .game import MixedStrategy, PdParams, SymmetricGame, ValidationError, as_rational
from .transforms import RiskLevel, add_risk, make_upd

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_FAULT = 4

MATCH = "MATCH"
BOUNDARY = "BOUNDARY"
MISMATCH = "MISMATCH"
NOT_APPLICABLE = "N/A"

SWEEP_HEADER = ["r", "q1", "q4", "ev", "n_findings", "degenerate"]
DYNAMICS_HEADER = ["run", "step", "q1", "q2", "q3", "q4", "dist_to_eq"]
RATIONAL_FLAGS = ("--Z", "--Y", "--X", "--W", "--risk")


@dataclass
class Analysis:
    params: PdParams
    risk: Fraction | None
    game: SymmetricGame
    findings: list[EquilibriumFinding]
    closed_form: ClosedFormResult | None
    verdict: str


def _verdict(params: PdParams, r: Fraction, findings, cf: ClosedFormResult | None) -> str:
    if cf is None:
        return NOT_APPLICABLE
    target = cf.point()
    hits = [f for f in findings if f.kind == POINT and f.point.probs == target and f.payoff == cf.ev]
    if r == params.X - params.Y:
        return BOUNDARY if hits else MISMATCH
    return MATCH if hits and len(findings) == 1 else MISMATCH


def analyze(params: PdParams, risk=None, unrestricted: bool = False) -> Analysis:
    """Solve UPD (or UPDR when ``risk`` is given) and compare with the closed form."""
    if risk is None:
        game = make_upd(params)
        r = Fraction(0)
    else:
        level = RiskLevel(as_rational(risk), unrestricted)
        game = add_risk(params, level)
        r = level.r
    findings = symmetric_equilibria(game)
    cf = closed_form_updr(params, r) if 0 <= r <= params.X - params.Y else None
    return Analysis(params, None if risk is None else r, game, findings, cf, _verdict(params, r, findings, cf))


def analysis_dict(a: Analysis) -> dict:
    cf = a.closed_form
    return {
        "params": ser.params_dict(a.params),
        "risk": ser.q(a.risk),
        "game": ser.game_dict(a.game),
        "findings": [ser.finding_dict(a.game, f) for f in a.findings],
        "closed_form": None if cf is None else {"q1": ser.q(cf.q1), "q4": ser.q(cf.q4), "ev": ser.q(cf.ev)},
        "verdict": a.verdict,
    }


def _rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _table(rows: Sequence[Sequence[str]], header: Sequence[str]) -> str:
    cells = [list(header)] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _params(args) -> PdParams:
    return PdParams(Z=args.Z, Y=args.Y, X=args.X, W=args.W)


def _mix_text(game: SymmetricGame, mix: MixedStrategy) -> str:
    return "(" + ", ".join(f"{lab}={p}" for lab, p in zip(game.labels, mix) if p) + ")"


def _finding_text(game: SymmetricGame, f: EquilibriumFinding) -> str:
    if f.kind == POINT:
        return f"{_mix_text(game, f.point)} payoff {f.payoff}"
    ends = ", ".join(_mix_text(game, v) for v in f.family.vertices)
    mid = _mix_text(game, f.family.representatives[-1])
    pay = f.payoff if f.payoff is not None else "/".join(str(p) for p in f.family.payoffs)
    return f"family: every mixture of {ends}; interior {mid}; payoff {pay}"


def render_analysis(a: Analysis) -> str:
    out = [f"params: Z={a.params.Z} Y={a.params.Y} X={a.params.X} W={a.params.W}"]
    out.append(f"risk: {a.risk if a.risk is not None else 'none (UPD)'}")
    out.append("")
    matrix = [[lab] + [str(v) for v in row] for lab, row in zip(a.game.labels, a.game.payoff)]
    out.append(_table(matrix, [""] + list(a.game.labels)))
    out.append("symmetric equilibria:")
    for f in a.findings:
        out.append("  {" + ", ".join(ser.support_labels(a.game, f.support)) + "}: " + _finding_text(a.game, f))
    cf = a.closed_form
    if cf is None:
        out.append("closed form: not defined for this risk")
    else:
        out.append(f"closed form: q1={cf.q1} (~{ser.decimal(cf.q1)}) q4={cf.q4} (~{ser.decimal(cf.q4)}) ev={cf.ev}")
    out.append(f"verdict: {a.verdict}")
    return "\n".join(out) + "\n"


def cmd_analyze(args) -> tuple[str, int]:
    a = analyze(_params(args), args.risk, args.allow_any_risk)
    if args.format == "json":
        text = _json(analysis_dict(a))
    elif args.format == "csv":
        rows = []
        for f in a.findings:
            for mix in f.mixes():
                rows.append(["|".join(ser.support_labels(a.game, f.support)), f.kind, *ser.vector(mix), str(f.payoff)])
        text = _csv(rows, ["support", "kind", *a.game.labels, "payoff"])
    else:
        text = render_analysis(a)
    return text, EXIT_FAULT if a.verdict == MISMATCH else EXIT_OK


def sweep(params: PdParams, steps: int, max_workers: int | None = None) -> list[dict]:
    """Closed form and solver on the closed grid ``r = k (X - Y) / (steps - 1)``."""
    if steps < 2:
        raise ValidationError(f"steps >= 2 violated: steps={steps}")
    span = params.X - params.Y
    grid = [span * k / (steps - 1) for k in range(steps)]

    def point(r: Fraction) -> dict:
        a = analyze(params, r)
        cf = a.closed_form
        return {
            "r": r,
            "q1": cf.q1,
            "q4": cf.q4,
            "ev": cf.ev,
            "n_findings": len(a.findings),
            "degenerate": any(f.kind == FAMILY for f in a.findings),
            "verdict": a.verdict,
        }

    return ordered_map(point, grid, max_workers)


def cmd_sweep(args) -> tuple[str, int]:
    records = sweep(_params(args), args.steps)
    status = EXIT_FAULT if any(rec["verdict"] == MISMATCH for rec in records) else EXIT_OK
    rows = [
        [str(rec["r"]), str(rec["q1"]), str(rec["q4"]), str(rec["ev"]), rec["n_findings"], str(rec["degenerate"]).lower()]
        for rec in records
    ]
    if args.format == "json":
        return _json([dict(zip(SWEEP_HEADER, row)) for row in rows]), status
    if args.format == "table":
        return _table(rows, SWEEP_HEADER), status
    return _csv(rows, SWEEP_HEADER), status


def _game_for(args) -> SymmetricGame:
    params = _params(args)
    if args.risk is None:
        return make_upd(params)
    return add_risk(params, RiskLevel(args.risk, args.allow_any_risk))


def cmd_enumerate(args) -> tuple[str, int]:
    game = _game_for(args)
    rows = support_report(game)
    if not any(r.finding for r in rows):
        raise InternalFault("no support carries an equilibrium")
    if args.format == "json":
        payload = {
            "params": ser.params_dict(_params(args)),
            "risk": ser.q(args.risk),
            "game": ser.game_dict(game),
            "n_supports": len(rows),
            "n_solved": sum(1 for r in rows if r.finding is not None),
            "rows": [ser.report_row_dict(game, r) for r in rows],
        }
        return _json(payload), EXIT_OK

    def detail(r):
        return _finding_text(game, r.finding) if r.finding is not None else f"fails: {r.failure_reason}"

    table_rows = [
        [str(i), "{" + ", ".join(ser.support_labels(game, r.support)) + "}", r.status, detail(r)]
        for i, r in enumerate(rows, 1)
    ]
    if args.format == "csv":
        return _csv([[r[1], r[2], r[3]] for r in table_rows], ["support", "status", "detail"]), EXIT_OK
    solved = sum(1 for r in rows if r.finding is not None)
    text = _table(table_rows, ["#", "support", "status", "detail"])
    text += f"{solved} of {len(rows)} supports carry an equilibrium\n"
    return text, EXIT_OK


def _parse_start(text: str) -> MixedStrategy:
    try:
        return MixedStrategy(tuple(as_rational(p) for p in text.split(",")))
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad --start {text!r}: {exc}") from exc


def cmd_dynamics(args) -> tuple[str, int]:
    if args.steps < 1:
        raise ValidationError(f"steps >= 1 violated: steps={args.steps}")
    if args.starts < 1:
        raise ValidationError(f"starts >= 1 violated: starts={args.starts}")
    params = _params(args)
    game = _game_for(args)
    a = analyze(params, args.risk, args.allow_any_risk)
    target = a.closed_form.point() if a.verdict == MATCH else None
    starts = [args.start] if args.start is not None else list(random_interior(game.n, args.starts, args.seed))
    rows = []
    for run, x0 in enumerate(starts):
        traj = simulate(game, x0, args.steps, args.record_every, seed=args.seed)
        dist = traj.distance_to(target) if target is not None else None
        for k, (step, state) in enumerate(zip(traj.steps, traj.states)):
            rows.append(
                [run, int(step), *(repr(float(v)) for v in state), "" if dist is None else repr(float(dist[k]))]
            )
    if args.format == "json":
        return _json([dict(zip(DYNAMICS_HEADER, row)) for row in rows]), EXIT_OK
    if args.format == "table":
        return _table(rows, DYNAMICS_HEADER), EXIT_OK
    return _csv(rows, DYNAMICS_HEADER), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="universalis",
        description="Exact equilibria of the universalized Prisoner's Dilemma, with and without risk.",
    )
    common = argparse.ArgumentParser(add_help=False)
    for name, help_text in (
        ("Z", "sucker payoff"),
        ("Y", "mutual confession"),
        ("X", "mutual silence"),
        ("W", "temptation"),
    ):
        common.add_argument(f"--{name}", type=_rational_arg, required=True, help=f"{help_text} (integer or p/q)")
    common.add_argument("--risk", type=_rational_arg, default=None, help="risk r on universalized silence (p/q)")
    common.add_argument(
        "--allow-any-risk", action="store_true", help="accept r outside [0, X - Y], e.g. negative risk"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="solve one game and compare with the closed form")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", parents=[common], help="risk sweep from 0 to X - Y inclusive")
    p.add_argument("--steps", type=int, default=11, help="grid points, >= 2 (default: %(default)s)")
    p.add_argument("--format", choices=["table", "json", "csv"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", parents=[common], help="support-by-support report")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dynamics", parents=[common], help="replicator trajectories as CSV")
    p.add_argument("--steps", type=int, default=10000, help="iterations per run (default: %(default)s)")
    p.add_argument("--seed", type=int, default=0, help="seed for random interior starts (default: %(default)s)")
    p.add_argument("--starts", type=int, default=1, help="number of random starts (default: %(default)s)")
    p.add_argument("--start", type=_parse_start, default=None, help="explicit start, e.g. 1/2,0,0,1/2")
    p.add_argument("--record-every", type=int, default=1, help="record every k-th step (default: %(default)s)")
    p.add_argument("--format", choices=["table", "json", "csv"], default="csv")
    p.set_defaults(func=cmd_dynamics)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1/2" as an option; glue it onto its flag instead
    out = []
    it = iter(argv)
    for tok in it:
        if tok in RATIONAL_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_negative_values(argv))
    try:
        text, status = args.func(args)
    except ValidationError as exc:
        print(f"universalis: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InternalFault as exc:
        print(f"universalis: internal fault: {exc}", file=sys.stderr)
        return EXIT_FAULT
    sys.stdout.write(text)
    if status == EXIT_FAULT:
        print("universalis: internal fault: solver and closed form disagree", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
