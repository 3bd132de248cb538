"""Feasibility of link demand vectors: schedules, the link/independent-set
incidence matrix, and the fractional chromatic number LP.

A demand vector tau assigns each link the fraction of unit time it must be
active.  tau is feasible exactly when some schedule over independent sets
satisfies it with total duration at most 1, i.e. when chi_f(H, tau) <= 1.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DemandUnmet, DurationExceedsOne, NotIndependent
from .hypergraph import (
    Hypergraph,
    enumerate_independent_sets,
    enumerate_maximal_independent_sets,
    is_independent,
)
from .lp import LinearProgram, LpStatus, solve_lp

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclasses.dataclass(frozen=True)
class DemandVector:
    """Per-link demanded fraction of unit time, each in [0, 1]."""

    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        for i, v in enumerate(vals):
            if not (_ZERO <= v <= _ONE):
                raise ValueError(f"demand for link {i} is {v}, outside [0, 1]")
        object.__setattr__(self, "values", vals)

    @classmethod
    def zeros(cls, n: int) -> "DemandVector":
        return cls((_ZERO,) * n)

    @classmethod
    def characteristic(cls, n: int, links: Iterable[int]) -> "DemandVector":
        s = set(links)
        return cls(tuple(_ONE if i in s else _ZERO for i in range(n)))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def scale(self, c) -> "DemandVector":
        return DemandVector(tuple(Fraction(c) * v for v in self.values))


def as_demand(h: Hypergraph, tau) -> DemandVector:
    """Coerce a sequence to a DemandVector and check its length against h."""
    if not isinstance(tau, DemandVector):
        tau = DemandVector(tuple(tau))
    if len(tau) != h.num_links:
        raise ValueError(f"demand vector has {len(tau)} entries, hypergraph has {h.num_links} links")
    return tau


@dataclasses.dataclass(frozen=True)
class Schedule:
    """Durations assigned to independent sets: entries of (links, duration)."""

    entries: tuple = ()

    def __post_init__(self):
        norm = []
        for links, duration in self.entries:
            d = Fraction(duration)
            if d < 0:
                raise ValueError(f"negative duration {d} for set {sorted(links)}")
            norm.append((frozenset(links), d))
        object.__setattr__(self, "entries", tuple(norm))

    @property
    def total_duration(self) -> Fraction:
        return sum((d for _, d in self.entries), _ZERO)

    def coverage(self, link: int) -> Fraction:
        return sum((d for s, d in self.entries if link in s), _ZERO)


@dataclasses.dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 matrix with one row per link and one column per maximal
    independent set (column order matches the enumeration order)."""

    num_links: int
    sets: tuple
    entries: tuple

    def column(self, j: int) -> frozenset:
        return self.sets[j]


def incidence_matrix(h: Hypergraph, limit: int | None = None) -> IncidenceMatrix:
    sets = enumerate_maximal_independent_sets(h, limit)
    entries = tuple(
        tuple(1 if i in s else 0 for s in sets) for i in range(h.num_links)
    )
    return IncidenceMatrix(h.num_links, tuple(sets), entries)


class ChiFResult(NamedTuple):
    value: Fraction
    witness: Schedule


def fractional_chromatic_number(
    h: Hypergraph,
    tau,
    limit: int | None = None,
    columns: str = "maximal",
) -> ChiFResult:
    """Minimum total duration of a schedule covering ``tau``.

    Solved as an exact LP over independent-set columns.  ``columns`` is
    ``"maximal"`` (default; restricting to maximal sets does not change the
    optimum) or ``"all"`` (every independent set, used as a cross-check).
    """
    tau = as_demand(h, tau)
    if columns == "maximal":
        sets = enumerate_maximal_independent_sets(h, limit)
    elif columns == "all":
        sets = enumerate_independent_sets(h, limit)
    else:
        raise ValueError(f"columns must be 'maximal' or 'all', got {columns!r}")
    k = len(sets)
    constraints = tuple(
        (tuple(_ONE if i in s else _ZERO for s in sets), ">=", tau[i])
        for i in range(h.num_links)
    )
    lp = LinearProgram(k, (_ONE,) * k, constraints)
    sol = solve_lp(lp, "min")
    assert sol.status is LpStatus.OPTIMAL, sol.status  # coverage LP is always feasible
    witness = Schedule(
        tuple((sets[j], t) for j, t in enumerate(sol.assignment) if t != 0)
    )
    return ChiFResult(sol.value, witness)


def is_feasible(h: Hypergraph, tau, limit: int | None = None) -> bool:
    """True iff some schedule of total duration <= 1 satisfies ``tau``."""
    tau = as_demand(h, tau)
    return fractional_chromatic_number(h, tau, limit).value <= 1


def validate_schedule(h: Hypergraph, schedule: Schedule, tau, max_total=_ONE) -> None:
    """Raise unless every entry's set is independent, the total duration is
    within ``max_total``, and each link's coverage meets its demand."""
    tau = as_demand(h, tau)
    for links, _ in schedule.entries:
        if not is_independent(h, links):
            raise NotIndependent(links)
    total = schedule.total_duration
    if total > Fraction(max_total):
        raise DurationExceedsOne(total, Fraction(max_total))
    for i in range(h.num_links):
        covered = schedule.coverage(i)
        if covered < tau[i]:
            raise DemandUnmet(i, covered, tau[i])
