"""Exact rational linear programming: two-phase tableau simplex with Bland's rule.

Solves ``min/max c.x  s.t.  A x (<=|>=|=) b,  x >= 0`` over ``Fraction`` and
returns an optimal vertex together with optimal dual multipliers.  Bland's rule
makes it cycle-free; sizes here are a few hundred rows/columns at most.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import Infeasible, InvalidParams

LE, GE, EQ = "<=", ">=", "="


class Unbounded(InvalidParams):
    pass


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]


def _pivot(T: list[list[Fraction]], obj: list[Fraction], basis: list[int], r: int, c: int) -> None:
    row = T[r]
    piv = row[c]
    if piv != 1:
        inv = 1 / piv
        T[r] = row = [v * inv for v in row]
    nz = [(j, v) for j, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i != r and other[c]:
            f = other[c]
            for j, v in nz:
                other[j] -= f * v
    if obj[c]:
        f = obj[c]
        for j, v in nz:
            obj[j] -= f * v
    basis[r] = c


def _reduced_costs(T, basis, cost: list[Fraction]) -> list[Fraction]:
    """Row of ``cost_j - c_B B^-1 A_j`` with the rhs slot holding ``-c_B B^-1 b``."""
    obj = list(cost) + [Fraction(0)]
    for i, bi in enumerate(basis):
        cb = cost[bi]
        if cb:
            for j, v in enumerate(T[i]):
                if v:
                    obj[j] -= cb * v
    return obj


def _run(T, obj, basis, allowed: int) -> None:
    """Minimize in place; columns ``>= allowed`` never enter."""
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(T, obj, basis, best[1], enter)


def solve_lp(c: Sequence, A: Sequence[Sequence], senses: Sequence[str], b: Sequence,
             maximize: bool = False) -> LPSolution:
    m, n = len(A), len(c)
    if len(senses) != m or len(b) != m or any(len(row) != n for row in A):
        raise InvalidParams("inconsistent LP dimensions")
    cost = [Fraction(-v if maximize else v) for v in c]
    rows, rhs, sense, flip = [], [], [], []
    for row, s, bi in zip(A, senses, b):
        row = [Fraction(v) for v in row]
        bi = Fraction(bi)
        f = -1 if bi < 0 else 1
        if f < 0:
            row = [-v for v in row]
            bi = -bi
            s = {LE: GE, GE: LE, EQ: EQ}[s]
        rows.append(row)
        rhs.append(bi)
        sense.append(s)
        flip.append(f)

    # columns: x | slack/surplus | artificial
    n_slack = sum(s != EQ for s in sense)
    art_rows = [i for i, s in enumerate(sense) if s != LE]
    width = n + n_slack + len(art_rows)
    T: list[list[Fraction]] = []
    basis: list[int] = []
    unit_col = []  # column that started as e_i in row i
    k = n
    art_at = n + n_slack
    for i in range(m):
        line = rows[i] + [Fraction(0)] * (width - n) + [rhs[i]]
        if sense[i] == LE:
            line[k] = Fraction(1)
            basis.append(k)
            unit_col.append(k)
            k += 1
        else:
            if sense[i] == GE:
                line[k] = Fraction(-1)
                k += 1
            line[art_at] = Fraction(1)
            basis.append(art_at)
            unit_col.append(art_at)
            art_at += 1
        T.append(line)

    first_art = n + n_slack
    if art_rows:
        phase1 = [Fraction(0)] * first_art + [Fraction(1)] * len(art_rows)
        obj = _reduced_costs(T, basis, phase1)
        _run(T, obj, basis, width)
        if -obj[-1] != 0:
            raise Infeasible("LP has no feasible point")
        # drive remaining artificials out of the basis; an artificial stuck in a
        # row with no other nonzero entry marks a redundant equality and stays at 0
        for i in range(len(T)):
            if basis[i] >= first_art:
                j = next((j for j in range(first_art) if T[i][j] != 0), None)
                if j is not None:
                    _pivot(T, [Fraction(0)] * (width + 1), basis, i, j)

    full_cost = cost + [Fraction(0)] * (width - n)
    obj = _reduced_costs(T, basis, full_cost)
    _run(T, obj, basis, first_art)

    x = [Fraction(0)] * width
    for i, bi in enumerate(basis):
        x[bi] = T[i][-1]
    # y_i = c_B B^-1 e_i, and B^-1 e_i is the current column of row i's starting unit column
    duals = []
    for i in range(m):
        col = unit_col[i]
        y = sum((full_cost[bi] * T[r][col] for r, bi in enumerate(basis) if T[r][col]), Fraction(0))
        duals.append(y * flip[i])
    value = sum((cv * xv for cv, xv in zip(cost, x[:n])), Fraction(0))
    if maximize:
        value = -value
        duals = [-y for y in duals]
    return LPSolution(value, tuple(x[:n]), tuple(duals))
