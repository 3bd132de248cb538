"""Exact linear programming over rationals.

Dense two-phase simplex with Bland's anti-cycling rule.  Everything is a
``fractions.Fraction``; an Optimal result satisfies every constraint exactly,
with no tolerance anywhere.  Variables are implicitly nonnegative.

Pivot selection is deterministic (lowest eligible index), so identical inputs
always produce identical assignments.
"""

from __future__ import annotations

import dataclasses
from enum import Enum
from fractions import Fraction

RELATIONS = ("<=", ">=", "=")

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclasses.dataclass(frozen=True)
class LinearProgram:
    """maximize (or minimize) objective . x subject to the constraint rows.

    Each constraint is ``(coefficients, relation, rhs)`` with relation one of
    ``<=``, ``>=``, ``=``.
    """

    num_vars: int
    objective: tuple
    constraints: tuple = ()

    def __post_init__(self):
        obj = tuple(Fraction(c) for c in self.objective)
        if len(obj) != self.num_vars:
            raise ValueError(f"objective has {len(obj)} entries, expected {self.num_vars}")
        rows = []
        for coeffs, rel, rhs in self.constraints:
            row = tuple(Fraction(c) for c in coeffs)
            if len(row) != self.num_vars:
                raise ValueError(f"constraint row has {len(row)} entries, expected {self.num_vars}")
            if rel not in RELATIONS:
                raise ValueError(f"unknown relation {rel!r}")
            rows.append((row, rel, Fraction(rhs)))
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "constraints", tuple(rows))


@dataclasses.dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    value: Fraction | None = None
    assignment: tuple | None = None


def _pivot(A, b, basis, row, col):
    piv = A[row][col]
    A[row] = [a / piv for a in A[row]]
    b[row] /= piv
    for r in range(len(A)):
        if r != row and A[r][col] != 0:
            f = A[r][col]
            A[r] = [a - f * p for a, p in zip(A[r], A[row])]
            b[r] -= f * b[row]
    basis[row] = col


def _run_simplex(A, b, basis, c):
    """Maximize c.x on the tableau in place; returns 'optimal' or 'unbounded'."""
    m = len(A)
    ncols = len(c)
    while True:
        in_basis = set(basis)
        enter = -1
        for j in range(ncols):
            if j in in_basis:
                continue
            reduced = sum(c[basis[i]] * A[i][j] for i in range(m)) - c[j]
            if reduced < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(m):
            a = A[i][enter]
            if a > 0:
                t = b[i] / a
                if best is None or t < best or (t == best and basis[i] < basis[leave]):
                    best = t
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(A, b, basis, leave, enter)


def solve_lp(lp: LinearProgram, sense: str = "max") -> LpSolution:
    """Solve ``lp`` exactly.  ``sense`` is ``"max"`` or ``"min"``."""
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', got {sense!r}")
    if sense == "min":
        flipped = LinearProgram(
            lp.num_vars, tuple(-c for c in lp.objective), lp.constraints
        )
        sol = solve_lp(flipped, "max")
        if sol.status is LpStatus.OPTIMAL:
            return LpSolution(LpStatus.OPTIMAL, -sol.value, sol.assignment)
        return sol

    n = lp.num_vars
    rows = []
    for coeffs, rel, rhs in lp.constraints:
        row = list(coeffs)
        if rhs < 0:
            row = [-a for a in row]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        rows.append((row, rel, rhs))

    m = len(rows)
    A = [list(row) for row, _, _ in rows]
    b = [rhs for _, _, rhs in rows]
    basis = [-1] * m

    ncols = n
    for i, (_, rel, _) in enumerate(rows):
        if rel in ("<=", ">="):
            for r in range(m):
                A[r].append(_ZERO)
            A[i][ncols] = _ONE if rel == "<=" else -_ONE
            if rel == "<=":
                basis[i] = ncols
            ncols += 1

    art_start = ncols
    for i in range(m):
        if basis[i] == -1:
            for r in range(m):
                A[r].append(_ZERO)
            A[i][ncols] = _ONE
            basis[i] = ncols
            ncols += 1

    if ncols > art_start:
        c1 = [_ZERO] * ncols
        for j in range(art_start, ncols):
            c1[j] = -_ONE
        status = _run_simplex(A, b, basis, c1)
        assert status == "optimal"  # phase-1 objective is bounded above by 0
        if sum(b[i] for i in range(m) if basis[i] >= art_start) != 0:
            return LpSolution(LpStatus.INFEASIBLE)
        # Drive leftover artificials out of the basis; drop redundant rows.
        keep = []
        for i in range(m):
            if basis[i] >= art_start:
                col = next(
                    (j for j in range(art_start) if A[i][j] != 0),
                    None,
                )
                if col is None:
                    continue  # all-zero row: redundant constraint
                _pivot(A, b, basis, i, col)
            keep.append(i)
        A = [A[i][:art_start] for i in keep]
        b = [b[i] for i in keep]
        basis = [basis[i] for i in keep]
        ncols = art_start

    c2 = [_ZERO] * ncols
    for j in range(n):
        c2[j] = lp.objective[j]
    status = _run_simplex(A, b, basis, c2)
    if status == "unbounded":
        return LpSolution(LpStatus.UNBOUNDED)

    x = [_ZERO] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = b[i]
    value = sum((lp.objective[j] * x[j] for j in range(n)), _ZERO)
    return LpSolution(LpStatus.OPTIMAL, value, tuple(x))
