"""Discrete-time replicator dynamics on symmetric games.

Iteration runs in float64; rest-point certification stays exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .game import MixedStrategy, SymmetricGame, ValidationError, _check_dim, pure_payoffs_vs

SUM_TOL = 1e-9


def payoff_shift(game: SymmetricGame) -> float:
    """``1 + max(0, -min payoff)``, which makes every shifted payoff >= 1."""
    lowest = min(min(row) for row in game.payoff)
    return float(1 + max(0, -lowest))


def _as_state(game: SymmetricGame, mix) -> np.ndarray:
    x = np.asarray([float(p) for p in mix], dtype=float)
    if x.shape != (game.n,):
        raise ValidationError(f"state has {x.size} entries but the game has {game.n} strategies")
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise ValidationError("state entries must be finite and non-negative")
    if abs(x.sum() - 1.0) > SUM_TOL:
        raise ValidationError(f"state sums to {x.sum()!r}, not 1")
    return x


def _step(A: np.ndarray, x: np.ndarray) -> np.ndarray:
    fitness = A @ x
    mean = x @ fitness
    x = x * fitness / mean
    return x / x.sum()


def replicator_step(game: SymmetricGame, mix) -> np.ndarray:
    """One application of ``x_i <- x_i f_i / f_bar`` on shifted payoffs."""
    x = _as_state(game, mix)
    A = game.to_float() + payoff_shift(game)
    return _step(A, x)


@dataclass
class Trajectory:
    """Recorded states of one replicator run.

    ``states[k]`` is the mixture after ``steps[k]`` iterations. The initial
    state (step 0) and the final state are always recorded.
    """

    game: SymmetricGame
    states: np.ndarray
    steps: np.ndarray
    step_count: int
    shift: float
    record_every: int
    seed: int | None = None
    renormalization: str = field(default="divide-by-sum")

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    def distance_to(self, point) -> np.ndarray:
        """L1 distance of every recorded state to ``point``."""
        target = np.asarray([float(p) for p in point], dtype=float)
        return np.abs(self.states - target).sum(axis=1)


def simulate(
    game: SymmetricGame,
    initial,
    steps: int,
    record_every: int = 1,
    seed: int | None = None,
) -> Trajectory:
    """Iterate :func:`replicator_step` ``steps`` times from ``initial``.

    ``seed`` is only carried along as metadata (see :func:`random_interior`);
    the map itself is deterministic.
    """
    if steps < 0:
        raise ValidationError("steps must be >= 0")
    if record_every < 1:
        raise ValidationError("record_every must be >= 1")
    x = _as_state(game, initial)
    shift = payoff_shift(game)
    A = game.to_float() + shift
    states = [x]
    recorded = [0]
    for t in range(1, steps + 1):
        x = _step(A, x)
        if t % record_every == 0 or t == steps:
            states.append(x)
            recorded.append(t)
    return Trajectory(
        game=game,
        states=np.array(states),
        steps=np.array(recorded),
        step_count=steps,
        shift=shift,
        record_every=record_every,
        seed=seed,
    )


def random_interior(n: int, count: int, seed: int) -> np.ndarray:
    """``count`` starting points drawn uniformly from the open simplex."""
    rng = np.random.default_rng(seed)
    return rng.dirichlet(np.ones(n), size=count)


def is_rest_point(game: SymmetricGame, mix: MixedStrategy) -> bool:
    """Exact test: every supported strategy earns the same payoff against ``mix``."""
    _check_dim(game, mix)
    if not isinstance(mix, MixedStrategy):
        mix = MixedStrategy(tuple(mix))
    vs = pure_payoffs_vs(game, mix)
    return len({vs[i] for i in mix.support}) == 1
