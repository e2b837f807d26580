"""Exact symmetric games, the Prisoner's Dilemma, and payoff evaluation.

Every payoff and probability in this module is a :class:`fractions.Fraction`;
floats are rejected at construction so nothing downstream can round.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

RationalLike = Union[int, str, Fraction]


class ValidationError(ValueError):
    """Raised when an input violates a documented invariant."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a canonical Fraction.

    Accepts ints, Fractions and literals such as ``"3"``, ``"-7/2"``.
    Floats are refused: silently converting 0.1 would defeat the point.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a payoff")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
        if "." in text or "e" in text.lower():
            raise ValueError(f"use p/q instead of a decimal: {value!r}")
        return frac
    raise TypeError(f"expected int, Fraction or 'p/q' string, got {type(value).__name__}")


@dataclass(frozen=True)
class PdParams:
    """The four PD utilities, ordered ``Z < Y < X < W``.

    Z is the sucker payoff, Y mutual confession, X mutual silence and W the
    temptation to confess against a silent partner.
    """

    Z: Fraction
    Y: Fraction
    X: Fraction
    W: Fraction

    def __post_init__(self):
        for name in ("Z", "Y", "X", "W"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        for lo, hi in (("Z", "Y"), ("Y", "X"), ("X", "W")):
            if not getattr(self, lo) < getattr(self, hi):
                raise ValidationError(
                    f"{lo} < {hi} violated: {lo}={getattr(self, lo)}, {hi}={getattr(self, hi)}"
                )

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.Z, self.Y, self.X, self.W)


@dataclass(frozen=True)
class SymmetricGame:
    """A symmetric two-player game stored as the row player's payoff matrix.

    ``payoff[i][j]`` is what the row player gets playing ``i`` against ``j``;
    the column player's payoff for the same profile is ``payoff[j][i]``.
    """

    labels: tuple[str, ...]
    payoff: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        labels = tuple(str(lab) for lab in self.labels)
        rows = tuple(tuple(as_rational(v) for v in row) for row in self.payoff)
        n = len(labels)
        if n < 1:
            raise ValidationError("a game needs at least one strategy")
        if len(set(labels)) != n:
            raise ValidationError(f"strategy labels must be unique: {labels}")
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValidationError(f"payoff matrix must be {n}x{n}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "payoff", rows)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def u(self, i: int, j: int) -> Fraction:
        return self.payoff[i][j]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def shifted(self, c: RationalLike) -> "SymmetricGame":
        """Same game with ``c`` added to every payoff."""
        c = as_rational(c)
        return SymmetricGame(self.labels, tuple(tuple(v + c for v in row) for row in self.payoff))

    def to_float(self):
        import numpy as np

        return np.array([[float(v) for v in row] for row in self.payoff], dtype=float)


@dataclass(frozen=True)
class MixedStrategy:
    """Exact probability vector; ``support`` is derived from the entries."""

    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(as_rational(p) for p in self.probs)
        if not probs:
            raise ValidationError("empty mixed strategy")
        if any(p < 0 for p in probs):
            raise ValidationError(f"negative probability in {tuple(str(p) for p in probs)}")
        if sum(probs) != 1:
            raise ValidationError(f"probabilities sum to {sum(probs)}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def pure(cls, n: int, i: int) -> "MixedStrategy":
        return cls(tuple(Fraction(int(k == i)) for k in range(n)))

    @classmethod
    def uniform(cls, n: int) -> "MixedStrategy":
        return cls(tuple(Fraction(1, n) for _ in range(n)))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, p in enumerate(self.probs) if p > 0)

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, i):
        return self.probs[i]

    def __iter__(self):
        return iter(self.probs)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.probs) + ")"


def make_pd(params: PdParams) -> SymmetricGame:
    """The Prisoner's Dilemma with strategies S (silent) and C (confess)."""
    p = params
    return SymmetricGame(("S", "C"), ((p.X, p.Z), (p.W, p.Y)))


def pd_from_sentences(
    mutual_silence: RationalLike,
    sucker: RationalLike,
    temptation: RationalLike,
    mutual_confession: RationalLike,
) -> PdParams:
    """Build PD utilities from jail terms, where shorter is better.

    Each duration is negated, so the argument order follows the scenario
    (silence/silence, silent-vs-confessor, confessor-vs-silent,
    confess/confess) and the result must satisfy ``Z < Y < X < W``.
    """
    durations = [as_rational(v) for v in (mutual_silence, sucker, temptation, mutual_confession)]
    if any(d < 0 for d in durations):
        raise ValidationError("durations must be non-negative")
    silence, sucker_d, tempt, confess = durations
    return PdParams(Z=-sucker_d, Y=-confess, X=-silence, W=-tempt)


def _check_dim(game: SymmetricGame, mix: Sequence) -> None:
    if len(mix) != game.n:
        raise ValidationError(f"mix has {len(mix)} entries but the game has {game.n} strategies")


def pure_payoffs_vs(game: SymmetricGame, opponent_mix: MixedStrategy | Sequence) -> list[Fraction]:
    """Payoff of each pure strategy against ``opponent_mix``."""
    _check_dim(game, opponent_mix)
    q = [as_rational(p) for p in opponent_mix]
    return [sum((u * qj for u, qj in zip(row, q)), Fraction(0)) for row in game.payoff]


def expected_payoff(
    game: SymmetricGame,
    row_mix: MixedStrategy | Sequence,
    col_mix: MixedStrategy | Sequence,
) -> Fraction:
    """Row player's expected payoff for the profile ``(row_mix, col_mix)``."""
    _check_dim(game, row_mix)
    vs = pure_payoffs_vs(game, col_mix)
    return sum((as_rational(p) * v for p, v in zip(row_mix, vs)), Fraction(0))
