"""The universalize transform and risk augmentation of the universalized PD."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import PdParams, RationalLike, SymmetricGame, ValidationError, as_rational, make_pd

UNIVERSALIZED = "U"
NOT_UNIVERSALIZED = "~U"


def _universalize_once(game: SymmetricGame) -> SymmetricGame:
    n = game.n
    A = game.payoff
    labels = tuple(s + UNIVERSALIZED for s in game.labels) + tuple(
        s + NOT_UNIVERSALIZED for s in game.labels
    )
    rows = []
    # a universalizer is paid as if the opponent mirrored its base strategy
    for s in range(n):
        rows.append((A[s][s],) * (2 * n))
    # otherwise only the opponent's base strategy matters, not its flag
    for s in range(n):
        rows.append(A[s] + A[s])
    return SymmetricGame(labels, tuple(rows))


def universalize(game: SymmetricGame, depth: int = 1) -> SymmetricGame:
    """Apply the universalize transform ``depth`` times.

    Each application doubles the strategy set: for every base strategy ``s``
    the new game has ``sU`` and ``s~U``, ordered with the whole U block first
    and base order kept inside each block. For the PD this yields
    ``[SU, CU, S~U, C~U]``.
    """
    if isinstance(depth, bool) or not isinstance(depth, int) or depth < 1:
        raise ValidationError(f"depth must be a positive integer, got {depth!r}")
    for _ in range(depth):
        game = _universalize_once(game)
    return game


@dataclass(frozen=True)
class RiskLevel:
    """Risk attached to silently universalizing.

    By default ``0 <= r <= X - Y`` is enforced against the PD parameters;
    ``unrestricted=True`` lifts the bound, e.g. to explore negative risk.
    """

    r: Fraction
    unrestricted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "r", as_rational(self.r))

    def check(self, params: PdParams) -> None:
        if self.unrestricted:
            return
        if self.r < 0:
            raise ValidationError(f"r >= 0 violated: r={self.r}")
        bound = params.X - params.Y
        if self.r > bound:
            raise ValidationError(f"r <= X - Y violated: r={self.r}, X - Y={bound}")


def as_risk(r: RiskLevel | RationalLike, unrestricted: bool = False) -> RiskLevel:
    if isinstance(r, RiskLevel):
        return r
    return RiskLevel(as_rational(r), unrestricted)


def add_risk(params: PdParams, r: RiskLevel | RationalLike, unrestricted: bool = False) -> SymmetricGame:
    """Universalized PD with every entry of the SU row replaced by ``X - r``.

    Only the row player's matrix changes; the column player's loss follows
    from reading the same matrix transposed.
    """
    risk = as_risk(r, unrestricted)
    risk.check(params)
    upd = universalize(make_pd(params), 1)
    su = upd.index("S" + UNIVERSALIZED)
    rows = list(upd.payoff)
    rows[su] = (params.X - risk.r,) * upd.n
    return SymmetricGame(upd.labels, tuple(rows))


def make_upd(params: PdParams) -> SymmetricGame:
    return universalize(make_pd(params), 1)
