"""Closed-form equilibrium rates and expected values for UPD and UPDR.

``q1`` is the probability of staying silent while universalizing (SU) and
``q4`` that of confessing without universalizing (C~U). Z never enters.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import PdParams, RationalLike, ValidationError, as_rational
from .transforms import RiskLevel, as_risk


@dataclass(frozen=True)
class ClosedFormResult:
    q1: Fraction
    q4: Fraction
    ev: Fraction

    def point(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """The mixture over ``[SU, CU, S~U, C~U]``."""
        return (self.q1, Fraction(0), Fraction(0), self.q4)


def closed_form_upd(params: PdParams) -> ClosedFormResult:
    return closed_form_updr(params, RiskLevel(Fraction(0)))


def closed_form_updr(params: PdParams, r: RiskLevel | RationalLike) -> ClosedFormResult:
    """Rates and value of the SU/C~U mixture under risk ``r``.

    Defined for ``0 <= r <= X - Y``. At ``r = X - Y`` this returns the
    limiting ``q1 = 0, q4 = 1`` even though the solver then finds three
    equilibria rather than one.
    """
    risk = as_risk(r)
    if risk.r < 0 or risk.r > params.X - params.Y:
        raise ValidationError(f"0 <= r <= X - Y violated: r={risk.r}, X - Y={params.X - params.Y}")
    X, Y, W = params.X, params.Y, params.W
    spread = W - Y
    return ClosedFormResult(
        q1=(X - Y - risk.r) / spread,
        q4=(W - X + risk.r) / spread,
        ev=X - risk.r,
    )


def ev_quadratic(params: PdParams, r: RiskLevel | RationalLike, q4: RationalLike) -> Fraction:
    """Expected value of SU/C~U as a function of the confession rate ``q4``.

    This is ``q1 * su + q4 * cnu`` expanded with ``q1 = 1 - q4``; it is not
    range-checked, so any ``r`` (including negative) may be passed.
    """
    r = r.r if isinstance(r, RiskLevel) else as_rational(r)
    q4 = as_rational(q4)
    X, Y, W = params.X, params.Y, params.W
    return -r + q4 * r + q4 * W - q4**2 * W + X - q4 * X + q4**2 * Y


def obligation_strength(params: PdParams) -> Fraction:
    """Strength of the obligation to stay silent: ``(X - Y) / (W - Y)``."""
    return closed_form_upd(params).q1
