"""Plain-data views of results for the JSON and CSV emitters.

Rationals always become exact ``"p/q"`` strings (integers print without a
denominator); no decimal rendering leaves this module.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .equilibria import FAMILY, EquilibriumFinding, SupportReportRow
from .game import PdParams, SymmetricGame


def q(value: Fraction | None) -> str | None:
    return None if value is None else str(value)


def vector(values: Sequence[Fraction]) -> list[str]:
    return [str(v) for v in values]


def params_dict(params: PdParams) -> dict:
    return {"Z": q(params.Z), "Y": q(params.Y), "X": q(params.X), "W": q(params.W)}


def game_dict(game: SymmetricGame) -> dict:
    return {"labels": list(game.labels), "matrix": [vector(row) for row in game.payoff]}


def support_labels(game: SymmetricGame, support: Sequence[int]) -> list[str]:
    return [game.labels[i] for i in support]


def finding_dict(game: SymmetricGame, finding: EquilibriumFinding) -> dict:
    out = {
        "support": support_labels(game, finding.support),
        "kind": finding.kind,
        "payoff": q(finding.payoff),
        "point": vector(finding.point) if finding.point is not None else None,
        "family": None,
    }
    if finding.kind == FAMILY:
        fam = finding.family
        out["family"] = {
            "free": support_labels(game, fam.free),
            "constraints": [vector(row) for row in fam.constraints],
            "vertices": [vector(v) for v in fam.vertices],
            "representatives": [vector(v) for v in fam.representatives],
            "payoffs": vector(fam.payoffs),
        }
    return out


def report_row_dict(game: SymmetricGame, row: SupportReportRow) -> dict:
    return {
        "support": support_labels(game, row.support),
        "status": row.status,
        "finding": finding_dict(game, row.finding) if row.finding is not None else None,
        "failure_reason": row.failure_reason,
    }


def decimal(value: Fraction, digits: int = 6) -> str:
    """Rounded rendering for human-facing tables only."""
    return f"{float(value):.{digits}g}"
