"""Greedy link-by-link interval scheduling and its sufficient conditions.

The scheduler walks the links in a given order and hands each link an
interval set of measure equal to its demand, avoiding the time slots where
some edge through the link would otherwise become fully active.  The three
condition checkers bound, per link, the resources this greedy pass can ever
need; whenever the weighted condition holds for an admissible weight matrix,
the pass succeeds for every processing order.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    EdgeRowSumTooSmall,
    EntryOutOfRange,
    InsufficientRoom,
    NonNeighborNonzero,
    NonzeroDiagonal,
    NotSymmetric,
    ScheduleStuck,
)
from .feasibility import Schedule, as_demand
from .hypergraph import Hypergraph, Permutation, neighbors
from .intervals import IntervalSet, earliest_fit, intersect_all, union_all

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclasses.dataclass(frozen=True)
class WeightMatrix:
    """Square rational matrix of pairwise interference weights."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("weight matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def validate_weight_matrix(h: Hypergraph, w: WeightMatrix) -> None:
    """Check admissibility: symmetric, entries in [0,1], zero diagonal,
    support only on neighbor pairs, and row sums >= 1 within every edge."""
    n = h.num_links
    if w.n != n:
        raise ValueError(f"matrix is {w.n}x{w.n}, hypergraph has {n} links")
    for i in range(n):
        if w.entries[i][i] != 0:
            raise NonzeroDiagonal(i, w.entries[i][i])
        for j in range(n):
            v = w.entries[i][j]
            if not (_ZERO <= v <= _ONE):
                raise EntryOutOfRange(i, j, v)
            if v != w.entries[j][i]:
                raise NotSymmetric(i, j)
    nbr = [neighbors(h, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and w.entries[i][j] != 0 and j not in nbr[i]:
                raise NonNeighborNonzero(i, j, w.entries[i][j])
    for edge in h.edges:
        for i in edge:
            total = sum((w.entries[i][j] for j in edge), _ZERO)
            if total < 1:
                raise EdgeRowSumTooSmall(edge, i, total)


def delta_matrix(h: Hypergraph) -> WeightMatrix:
    """Canonical admissible weights: for neighbors i, j the largest
    1/(|E|-1) over the edges containing both, zero elsewhere."""
    n = h.num_links
    rows = [[_ZERO] * n for _ in range(n)]
    for es in h.edge_sets:
        wt = Fraction(1, len(es) - 1)
        members = sorted(es)
        for i in members:
            for j in members:
                if i != j and wt > rows[i][j]:
                    rows[i][j] = wt
    return WeightMatrix(tuple(tuple(r) for r in rows))


class ConditionReport(NamedTuple):
    holds: bool
    per_link: tuple


def check_edge_min_condition(h: Hypergraph, tau) -> ConditionReport:
    """Per link: demand plus, for each edge through it, the smallest demand
    among the edge's other links.  Holds when every total is <= 1."""
    tau = as_demand(h, tau)
    per = []
    for i in range(h.num_links):
        total = tau[i]
        for es in h.edge_sets:
            if i in es:
                total += min(tau[j] for j in es if j != i)
        per.append(total)
    return ConditionReport(all(v <= 1 for v in per), tuple(per))


def check_weighted_condition(h: Hypergraph, w: WeightMatrix, tau) -> ConditionReport:
    """Per link i: tau[i] + sum_j W[i][j] * tau[j].  Holds when all <= 1."""
    validate_weight_matrix(h, w)
    tau = as_demand(h, tau)
    per = tuple(
        tau[i] + sum((w.entries[i][j] * tau[j] for j in range(h.num_links) if j != i), _ZERO)
        for i in range(h.num_links)
    )
    return ConditionReport(all(v <= 1 for v in per), per)


def check_delta_condition(h: Hypergraph, tau) -> ConditionReport:
    return check_weighted_condition(h, delta_matrix(h), tau)


def _normalize_order(h: Hypergraph, order) -> tuple:
    if order is None:
        return tuple(range(h.num_links))
    if isinstance(order, Permutation):
        order = order.mapping
    order = tuple(int(v) for v in order)
    if sorted(order) != list(range(h.num_links)):
        raise ValueError(f"order must be a permutation of 0..{h.num_links - 1}")
    return order


def _blocked_time(h: Hypergraph, assigned, link) -> IntervalSet:
    """Union over the edges through ``link`` whose other links are all
    scheduled of the slots those links share."""
    pieces = []
    for es in h.edge_sets:
        if link in es and all(assigned[j] is not None for j in es if j != link):
            pieces.append(intersect_all([assigned[j] for j in es if j != link]))
    return union_all(pieces)


def greedy_schedule(
    h: Hypergraph,
    w: WeightMatrix,
    tau,
    order=None,
    step_callback=None,
) -> tuple:
    """Assign each link an interval set of measure tau[i] such that no edge
    is ever fully active.

    Links are processed in ``order`` (default 0..N-1); each placement is the
    leftmost fit avoiding the currently blocked slots, so the result is
    deterministic.  ``step_callback(link, assigned)`` is invoked before each
    placement with a snapshot of the partial assignment (None = unscheduled),
    which is how the per-step accounting inequality gets instrumented.

    Raises ScheduleStuck when a link cannot be placed; that cannot happen if
    the weighted condition holds for ``w``.
    """
    validate_weight_matrix(h, w)
    tau = as_demand(h, tau)
    order = _normalize_order(h, order)
    assigned: list = [None] * h.num_links
    for link in order:
        if step_callback is not None:
            step_callback(link, tuple(assigned))
        forbidden = _blocked_time(h, assigned, link)
        try:
            assigned[link] = earliest_fit(tau[link], forbidden)
        except InsufficientRoom as e:
            raise ScheduleStuck(link, tau[link], e.available) from e
    return tuple(assigned)


class StepBound(NamedTuple):
    lhs: Fraction
    rhs: Fraction


def greedy_step_bound(h: Hypergraph, w: WeightMatrix, assigned, link) -> StepBound:
    """Both sides of the accounting inequality at the step that schedules
    ``link``: measure of the blocked slots vs. the weighted sum of the
    already-scheduled demands.  For admissible ``w``, lhs <= rhs always."""
    lhs = _blocked_time(h, assigned, link).measure
    rhs = sum(
        (
            w.entries[link][j] * assigned[j].measure
            for j in range(h.num_links)
            if j != link and assigned[j] is not None
        ),
        _ZERO,
    )
    return StepBound(lhs, rhs)


def intervals_to_schedule(assigned: Sequence[IntervalSet]) -> Schedule:
    """Convert a per-link interval assignment into a schedule over link sets
    by sweeping the interval endpoints.  Slots where no link is active are
    dropped, so the total duration can be below 1."""
    points = {_ZERO, _ONE}
    for js in assigned:
        for a, b in js.intervals:
            points.add(a)
            points.add(b)
    cuts = sorted(points)
    durations: dict = {}
    active_order: list = []
    for a, b in zip(cuts, cuts[1:]):
        active = frozenset(
            i for i, js in enumerate(assigned) if js.contains_point(a)
        )
        if not active:
            continue
        if active not in durations:
            durations[active] = _ZERO
            active_order.append(active)
        durations[active] += b - a
    return Schedule(tuple((s, durations[s]) for s in active_order))
