"""Exact linear algebra over the rationals.

Systems are scaled row-wise to integers and reduced with Bareiss'
fraction-free elimination, so intermediate entries stay integral and every
division is exact. Pivoting is full: the entry of largest magnitude in the
remaining block, ties going to the lowest row and then the lowest column.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence


@dataclass
class LinearSolution:
    """Solution set ``{particular + N t}`` of ``A x = b``.

    ``consistent`` is False when no solution exists, in which case the other
    fields are empty. ``free`` lists the variables left as parameters, one
    per nullspace vector.
    """

    consistent: bool
    rank: int
    particular: list[Fraction] = field(default_factory=list)
    nullspace: list[list[Fraction]] = field(default_factory=list)
    free: list[int] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace


def _integer_rows(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[list[int]]:
    rows = []
    for row, rhs in zip(A, b):
        entries = [Fraction(v) for v in row] + [Fraction(rhs)]
        scale = lcm(*(v.denominator for v in entries))
        rows.append([int(v * scale) for v in entries])
    return rows


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> LinearSolution:
    """Solve ``A x = b`` exactly, returning the full affine solution set."""
    m = len(A)
    k = len(A[0]) if m else 0
    if len(b) != m:
        raise ValueError("right-hand side length does not match the matrix")
    M = _integer_rows(A, b)
    cols = list(range(k))  # cols[j] = original variable held in column j
    prev = 1
    rank = 0
    for step in range(min(m, k)):
        best = None
        for i in range(step, m):
            for j in range(step, k):
                mag = abs(M[i][j])
                if mag and (best is None or mag > best[0]):
                    best = (mag, i, j)
        if best is None:
            break
        _, pi, pj = best
        M[step], M[pi] = M[pi], M[step]
        if pj != step:
            for row in M:
                row[step], row[pj] = row[pj], row[step]
            cols[step], cols[pj] = cols[pj], cols[step]
        piv = M[step][step]
        for i in range(step + 1, m):
            a_ik = M[i][step]
            Mi = M[i]
            Ms = M[step]
            for j in range(step + 1, k + 1):
                Mi[j] = (piv * Mi[j] - a_ik * Ms[j]) // prev
            Mi[step] = 0
        prev = piv
        rank += 1

    if any(M[i][k] != 0 for i in range(rank, m)):
        return LinearSolution(consistent=False, rank=rank)

    def back_substitute(rhs: list[Fraction], free_values: list[Fraction]) -> list[Fraction]:
        x = [Fraction(0)] * k
        for j, val in zip(range(rank, k), free_values):
            x[cols[j]] = val
        for i in range(rank - 1, -1, -1):
            acc = rhs[i]
            for j in range(i + 1, k):
                if M[i][j]:
                    acc -= M[i][j] * x[cols[j]]
            x[cols[i]] = acc / M[i][i]
        return x

    n_free = k - rank
    rhs = [Fraction(M[i][k]) for i in range(rank)]
    particular = back_substitute(rhs, [Fraction(0)] * n_free)
    nullspace = []
    zero_rhs = [Fraction(0)] * rank
    for f in range(n_free):
        unit = [Fraction(int(g == f)) for g in range(n_free)]
        nullspace.append(back_substitute(zero_rhs, unit))
    return LinearSolution(
        consistent=True,
        rank=rank,
        particular=particular,
        nullspace=nullspace,
        free=[cols[j] for j in range(rank, k)],
    )


def rref(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form with zero rows dropped (a canonical basis)."""
    M = [[Fraction(v) for v in row] for row in rows]
    if not M:
        return []
    width = len(M[0])
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        lead = M[r][c]
        M[r] = [v / lead for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return M[:r]
