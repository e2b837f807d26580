"""Symmetric Nash equilibria by exact support enumeration.

For every nonempty support ``T`` the solver looks for mixtures ``q`` with
``q_j = 0`` off ``T``, ``q_i > 0`` on ``T``, equal pure payoffs across ``T``
and no outside strategy doing strictly better. When the equal-payoff system
pins down a single ``q`` that is the candidate; when it leaves free
directions, the set of admissible mixtures is a polytope whose vertices are
enumerated exactly and reported as a degenerate family.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .game import MixedStrategy, SymmetricGame, _check_dim, as_rational, expected_payoff, pure_payoffs_vs

POINT = "point"
FAMILY = "family"

SOLVED = "solved"
INFEASIBLE = "infeasible"
DEGENERATE = "degenerate"

EQUAL_PAYOFF = "equal-payoff system"
POSITIVITY = "positivity"
OUTSIDE_DEVIATION = "outside-deviation"


class InternalFault(RuntimeError):
    """The enumeration produced something a finite symmetric game cannot."""


@dataclass(frozen=True)
class Family:
    """A continuum of equilibria sharing one support.

    ``constraints`` holds the equal-payoff system in reduced row echelon
    form, each row ``[a_0 .. a_{n-1}, b]`` meaning ``sum a_i q_i = b``.
    ``vertices`` are the corners of the admissible set (they may sit on the
    boundary of the support); ``representatives`` adds their average, which
    lies strictly inside.
    """

    free: tuple[int, ...]
    constraints: tuple[tuple[Fraction, ...], ...]
    vertices: tuple[MixedStrategy, ...]
    representatives: tuple[MixedStrategy, ...]
    payoffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class EquilibriumFinding:
    support: tuple[int, ...]
    kind: str
    payoff: Fraction | None
    point: MixedStrategy | None = None
    family: Family | None = None

    def mixes(self) -> tuple[MixedStrategy, ...]:
        """Every concrete mixture this finding stands for."""
        if self.kind == POINT:
            return (self.point,)
        return self.family.representatives


@dataclass(frozen=True)
class SupportReportRow:
    support: tuple[int, ...]
    status: str
    finding: EquilibriumFinding | None = None
    failure_reason: str | None = None


@dataclass(frozen=True)
class Certificate:
    pure_payoffs: tuple[Fraction, ...]
    support_payoff: Fraction | None
    valid: bool

    def __bool__(self) -> bool:
        return self.valid


@dataclass
class _SupportSet:
    """Admissible opponent mixtures for one (indifference rows, support) pair."""

    ok: bool
    reason: str | None = None
    degenerate: bool = False
    vertices: list[tuple[Fraction, ...]] = field(default_factory=list)
    interior: tuple[Fraction, ...] | None = None
    free: tuple[int, ...] = ()
    constraints: tuple[tuple[Fraction, ...], ...] = ()

    def representatives(self) -> list[tuple[Fraction, ...]]:
        if not self.degenerate:
            return [self.interior]
        return self.vertices + [self.interior]


def all_supports(n: int) -> list[tuple[int, ...]]:
    """Every nonempty subset of ``range(n)`` in lexicographic tuple order."""
    subsets = (c for k in range(1, n + 1) for c in itertools.combinations(range(n), k))
    return sorted(subsets)


def _vertices(G: list[list[Fraction]], h: list[Fraction], d: int) -> list[tuple[Fraction, ...]]:
    """Vertices of the bounded polytope ``{t : G t <= h}`` in ``d`` dimensions."""
    found = []
    for rows in itertools.combinations(range(len(G)), d):
        sol = linalg.solve([G[i] for i in rows], [h[i] for i in rows])
        if not sol.unique:
            continue
        t = sol.particular
        if all(sum((g * x for g, x in zip(G[i], t)), Fraction(0)) <= h[i] for i in range(len(G))):
            t = tuple(t)
            if t not in found:
                found.append(t)
    return found


def _support_set(A: Sequence[Sequence[Fraction]], rows: Sequence[int], cols: Sequence[int]) -> _SupportSet:
    """Mixtures ``q`` on ``cols`` that make every pure strategy in ``rows`` a best reply.

    Variables are ``q_j`` for ``j`` in ``cols``. Equalities: payoff of every
    row in ``rows`` equals that of ``rows[0]``, and the ``q_j`` sum to one.
    Inequalities: ``q_j >= 0`` (strict in the relative interior) and no
    strategy outside ``rows`` earns more than ``rows[0]``.
    """
    n = len(A)
    m = len(cols)
    base = rows[0]
    eqs = [[A[i][j] - A[base][j] for j in cols] for i in rows[1:]]
    eqs.append([Fraction(1)] * m)
    rhs = [Fraction(0)] * (len(eqs) - 1) + [Fraction(1)]
    sol = linalg.solve(eqs, rhs)
    if not sol.consistent:
        return _SupportSet(ok=False, reason=EQUAL_PAYOFF)

    outside = [k for k in range(n) if k not in rows]
    dev = [[A[k][j] - A[base][j] for j in cols] for k in outside]

    def lift(q: Sequence[Fraction]) -> tuple[Fraction, ...]:
        full = [Fraction(0)] * n
        for j, v in zip(cols, q):
            full[j] = v
        return tuple(full)

    def deviation_ok(q: Sequence[Fraction]) -> bool:
        return all(sum((c * x for c, x in zip(row, q)), Fraction(0)) <= 0 for row in dev)

    if sol.unique:
        q = sol.particular
        if any(v <= 0 for v in q):
            return _SupportSet(ok=False, reason=POSITIVITY)
        if not deviation_ok(q):
            return _SupportSet(ok=False, reason=OUTSIDE_DEVIATION)
        return _SupportSet(ok=True, interior=lift(q))

    p, N = sol.particular, sol.nullspace
    d = len(N)

    def in_t(coeffs: Sequence[Fraction]) -> tuple[list[Fraction], Fraction]:
        # coeffs . (p + N t)  ->  (coeffs . N) t + coeffs . p
        lin = [sum((c * v[j] for j, c in enumerate(coeffs)), Fraction(0)) for v in N]
        const = sum((c * pj for c, pj in zip(coeffs, p)), Fraction(0))
        return lin, const

    G, h = [], []
    for j in range(m):
        unit = [Fraction(int(i == j)) for i in range(m)]
        lin, const = in_t(unit)
        G.append([-v for v in lin])
        h.append(const)

    def positive_interior(verts):
        if not verts:
            return None
        centre = [sum(col, Fraction(0)) / len(verts) for col in zip(*verts)]
        q = [pj + sum((t * v[j] for t, v in zip(centre, N)), Fraction(0)) for j, pj in enumerate(p)]
        return q if all(v > 0 for v in q) else None

    if positive_interior(_vertices(G, h, d)) is None:
        return _SupportSet(ok=False, reason=POSITIVITY)

    for row in dev:
        lin, const = in_t(row)
        G.append(lin)
        h.append(-const)
    verts_t = _vertices(G, h, d)
    interior = positive_interior(verts_t)
    if interior is None:
        return _SupportSet(ok=False, reason=OUTSIDE_DEVIATION)

    verts = []
    for t in verts_t:
        q = [pj + sum((ti * v[j] for ti, v in zip(t, N)), Fraction(0)) for j, pj in enumerate(p)]
        verts.append(lift(q))
    verts.sort(reverse=True)
    if len(verts) == 1:
        # deviation constraints collapsed the solution set to a single mixture
        return _SupportSet(ok=True, interior=verts[0])

    constraints = []
    for eq, b in zip(eqs, rhs):
        constraints.append(list(lift(eq)) + [b])
    return _SupportSet(
        ok=True,
        degenerate=True,
        vertices=verts,
        interior=lift(interior),
        free=tuple(sorted(cols[f] for f in sol.free)),
        constraints=tuple(tuple(r) for r in linalg.rref(constraints)),
    )


def _evaluate_support(game: SymmetricGame, support: tuple[int, ...]) -> SupportReportRow:
    found = _support_set(game.payoff, support, support)
    if not found.ok:
        return SupportReportRow(support, INFEASIBLE, failure_reason=found.reason)
    if not found.degenerate:
        point = MixedStrategy(found.interior)
        finding = EquilibriumFinding(support, POINT, expected_payoff(game, point, point), point=point)
        return SupportReportRow(support, SOLVED, finding=finding)
    verts = tuple(MixedStrategy(v) for v in found.vertices)
    reps = verts + (MixedStrategy(found.interior),)
    payoffs = tuple(expected_payoff(game, q, q) for q in reps)
    family = Family(found.free, found.constraints, verts, reps, payoffs)
    common = payoffs[0] if len(set(payoffs)) == 1 else None
    finding = EquilibriumFinding(support, FAMILY, common, family=family)
    return SupportReportRow(support, DEGENERATE, finding=finding)


def thread_count(max_workers: int | None = None) -> int:
    """Worker count: explicit argument, else ``UNIVERSALIS_THREADS``, else 1."""
    if max_workers is None:
        raw = os.environ.get("UNIVERSALIS_THREADS", "").strip()
        max_workers = int(raw) if raw else 0
    return max_workers if max_workers > 0 else 1


def ordered_map(fn, items: Iterable, max_workers: int | None = None) -> list:
    """``list(map(fn, items))``, optionally on a thread pool; order is preserved."""
    workers = thread_count(max_workers)
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def support_report(game: SymmetricGame, max_workers: int | None = None) -> list[SupportReportRow]:
    """One row per nonempty support, in lexicographic order.

    For a 4-strategy game this is the 15-case table: each row says whether
    the support carries an equilibrium and, if not, which condition failed.
    """
    return ordered_map(lambda s: _evaluate_support(game, s), all_supports(game.n), max_workers)


def symmetric_equilibria(game: SymmetricGame, max_workers: int | None = None) -> list[EquilibriumFinding]:
    """All symmetric equilibria, one finding per support that carries any."""
    findings = [row.finding for row in support_report(game, max_workers) if row.finding is not None]
    if not findings:
        raise InternalFault(f"no symmetric equilibrium found for {game.labels}; enumeration is broken")
    return findings


def verify_equilibrium(game: SymmetricGame, mix: MixedStrategy | Sequence) -> Certificate:
    """Best-response check of the symmetric profile ``(mix, mix)``.

    Valid iff every supported strategy earns the same payoff against
    ``mix`` and no strategy earns strictly more. All comparisons are exact.
    """
    _check_dim(game, mix)
    if not isinstance(mix, MixedStrategy):
        mix = MixedStrategy(tuple(as_rational(p) for p in mix))
    vs = tuple(pure_payoffs_vs(game, mix))
    on_support = {vs[i] for i in mix.support}
    if len(on_support) != 1:
        return Certificate(vs, None, False)
    value = on_support.pop()
    return Certificate(vs, value, all(v <= value for v in vs))


@dataclass(frozen=True)
class TwoSidedProfile:
    row: MixedStrategy
    col: MixedStrategy
    row_payoff: Fraction
    col_payoff: Fraction
    row_support: tuple[int, ...]
    col_support: tuple[int, ...]
    degenerate: bool

    @property
    def symmetric(self) -> bool:
        return self.row == self.col


def _is_best_reply(game: SymmetricGame, mix: MixedStrategy, opponent: MixedStrategy) -> bool:
    vs = pure_payoffs_vs(game, opponent)
    best = max(vs)
    return all(vs[i] == best for i in mix.support)


def two_sided_equilibria(game: SymmetricGame, max_workers: int | None = None) -> list[TwoSidedProfile]:
    """Nash equilibria of the bimatrix game ``(A, A^T)`` by support-pair enumeration.

    Covers all ``(2^n - 1)^2`` support pairs, including unequal sizes, so
    asymmetric equilibria show up too. Degenerate pairs contribute the
    product of both sides' representative mixtures and are flagged. Each
    profile is listed once, under the first support pair that produced it.
    """
    A = game.payoff
    supports = all_supports(game.n)

    def pair(IJ):
        I, J = IJ
        # column mix on J must make the row player's strategies in I best replies
        col_set = _support_set(A, I, J)
        if not col_set.ok:
            return []
        row_set = _support_set(A, J, I)
        if not row_set.ok:
            return []
        out = []
        degenerate = row_set.degenerate or col_set.degenerate
        for x in row_set.representatives():
            for y in col_set.representatives():
                xm, ym = MixedStrategy(x), MixedStrategy(y)
                if not (_is_best_reply(game, xm, ym) and _is_best_reply(game, ym, xm)):
                    raise InternalFault(f"support pair {I}, {J} produced a non-equilibrium")
                out.append(
                    TwoSidedProfile(
                        xm, ym, expected_payoff(game, xm, ym), expected_payoff(game, ym, xm), I, J, degenerate
                    )
                )
        return out

    results = ordered_map(pair, list(itertools.product(supports, supports)), max_workers)
    # family vertices recur under several support pairs; keep the first, merging the flag
    unique: dict[tuple, TwoSidedProfile] = {}
    for prof in (p for chunk in results for p in chunk):
        key = (prof.row.probs, prof.col.probs)
        if key in unique:
            if prof.degenerate and not unique[key].degenerate:
                unique[key] = replace(unique[key], degenerate=True)
        else:
            unique[key] = prof
    return list(unique.values())
