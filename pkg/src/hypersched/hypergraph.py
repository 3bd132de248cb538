"""Conflict hypergraphs on a dense link set 0..N-1.

A hyperedge is a minimal set of links that cannot all be active at the same
time; a link set is independent when it contains no hyperedge.  Link ids are
0-based internally (file formats use 1-based labels).

Invariants enforced by :func:`validate_hypergraph`:
  - every edge has at least 2 links,
  - all link ids are in range,
  - the edge family is an antichain (no edge contains another).
"""

from __future__ import annotations

import dataclasses
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    EdgeTooSmall,
    LinkOutOfRange,
    NotAntichain,
    SizeLimitExceeded,
)

# Enumeration over all 2^N subsets gets out of hand quickly; operations that
# walk the independent-set lattice refuse larger inputs unless told otherwise.
DEFAULT_SIZE_LIMIT = 20
# Automorphism search is factorial in the worst case.
DEFAULT_AUTOMORPHISM_LIMIT = 10


@dataclasses.dataclass(frozen=True)
class Hypergraph:
    """Ground set of ``num_links`` links plus a family of forbidden edges.

    Edges are canonicalized to sorted tuples and deduplicated (first
    occurrence wins).  Construction does not run the semantic checks; call
    :func:`validate_hypergraph` for those.
    """

    num_links: int
    edges: tuple = ()

    def __post_init__(self):
        if not isinstance(self.num_links, int) or self.num_links < 1:
            raise ValueError(f"num_links must be a positive integer, got {self.num_links!r}")
        canon = []
        seen = set()
        for edge in self.edges:
            t = tuple(sorted({int(v) for v in edge}))
            if t not in seen:
                seen.add(t)
                canon.append(t)
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def edge_sets(self) -> tuple:
        return tuple(frozenset(e) for e in self.edges)

    @property
    def links(self) -> range:
        return range(self.num_links)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """Bijection on 0..N-1; ``mapping[i]`` is the image of link ``i``."""

    mapping: tuple

    def __post_init__(self):
        m = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", m)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"not a permutation of 0..{len(m) - 1}: {m}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.mapping)

    def apply(self, i: int) -> int:
        return self.mapping[i]

    def map_set(self, links: Iterable[int]) -> frozenset:
        return frozenset(self.mapping[v] for v in links)

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self after other: (self.compose(other))(i) = self(other(i))."""
        return Permutation(tuple(self.mapping[other.mapping[i]] for i in range(len(self))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self.mapping):
            inv[v] = i
        return Permutation(tuple(inv))


def validate_hypergraph(h: Hypergraph) -> None:
    """Raise EdgeTooSmall / LinkOutOfRange / NotAntichain if ``h`` is malformed."""
    for edge in h.edges:
        if len(edge) < 2:
            raise EdgeTooSmall(edge)
        for v in edge:
            if not 0 <= v < h.num_links:
                raise LinkOutOfRange(edge, v, h.num_links)
    sets = h.edge_sets
    for a in range(len(sets)):
        for b in range(len(sets)):
            if a != b and sets[a] <= sets[b]:
                raise NotAntichain(h.edges[a], h.edges[b])


def minimalize(num_links: int, raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Keep only the inclusion-minimal edges of ``raw_edges`` and deduplicate.

    Input order of the surviving edges is preserved.  Singleton edges and
    out-of-range ids are rejected outright rather than silently dropped.
    """
    canon = []
    seen = set()
    for edge in raw_edges:
        t = tuple(sorted({int(v) for v in edge}))
        if len(t) < 2:
            raise EdgeTooSmall(t)
        for v in t:
            if not 0 <= v < num_links:
                raise LinkOutOfRange(t, v, num_links)
        if t not in seen:
            seen.add(t)
            canon.append(t)
    sets = [frozenset(t) for t in canon]
    minimal = [
        canon[a]
        for a in range(len(canon))
        if not any(b != a and sets[b] <= sets[a] for b in range(len(canon)))
    ]
    return Hypergraph(num_links, tuple(minimal))


def neighbors(h: Hypergraph, i: int) -> frozenset:
    """Links that share at least one edge with link ``i``."""
    out = set()
    for es in h.edge_sets:
        if i in es:
            out |= es
    out.discard(i)
    return frozenset(out)


def edges_containing(h: Hypergraph, i: int) -> list:
    """Edges through link ``i``, in the hypergraph's edge order."""
    return [e for e in h.edges if i in e]


def is_independent(h: Hypergraph, links: Iterable[int]) -> bool:
    s = frozenset(links)
    return not any(es <= s for es in h.edge_sets)


def _completion_table(edge_sets):
    """For each link v, the sets C with ``C ⊆ current ⟹ current+v dependent``.

    ``edge_sets`` may be any family of forbidden sets, not only the
    hypergraph's own edges (the per-link degree searches swap in modified
    families).
    """
    table = {}
    for fs in edge_sets:
        for v in fs:
            table.setdefault(v, []).append(fs - {v})
    return table


def _independent_subsets(pool: Sequence[int], completions) -> Iterable[frozenset]:
    """Yield all subsets of ``pool`` avoiding the forbidden family, in
    lexicographic order of their sorted member tuples (pre-order DFS)."""
    pool = sorted(pool)
    current: list = []
    current_set: set = set()

    def extend(start):
        yield frozenset(current_set)
        for idx in range(start, len(pool)):
            v = pool[idx]
            blocked = any(c <= current_set for c in completions.get(v, ()))
            if blocked:
                continue
            current.append(v)
            current_set.add(v)
            yield from extend(idx + 1)
            current.pop()
            current_set.discard(v)

    yield from extend(0)


def _check_limit(h: Hypergraph, limit, default):
    lim = default if limit is None else limit
    if h.num_links > lim:
        raise SizeLimitExceeded(h.num_links, lim)


def enumerate_independent_sets(h: Hypergraph, limit: int | None = None) -> list:
    """All independent sets of ``h`` (including the empty set), each once,
    in lexicographic order.  Backtracks with edge-completion pruning instead
    of filtering all 2^N subsets."""
    _check_limit(h, limit, DEFAULT_SIZE_LIMIT)
    completions = _completion_table(h.edge_sets)
    return list(_independent_subsets(range(h.num_links), completions))


def enumerate_maximal_independent_sets(h: Hypergraph, limit: int | None = None) -> list:
    """The inclusion-maximal independent sets, in lexicographic order."""
    _check_limit(h, limit, DEFAULT_SIZE_LIMIT)
    completions = _completion_table(h.edge_sets)

    def can_add(v, s):
        return all(not c <= s for c in completions.get(v, ()))

    out = []
    for s in _independent_subsets(range(h.num_links), completions):
        if all(not can_add(v, s) for v in range(h.num_links) if v not in s):
            out.append(s)
    return out


def automorphisms(h: Hypergraph, limit: int | None = None) -> list:
    """All permutations of the links mapping the edge family onto itself.

    Exhaustive backtracking; candidate images are pruned by the multiset of
    incident-edge sizes, and partially built maps are rejected as soon as a
    fully assigned edge fails to land on an edge.  Results come out in
    lexicographic order of the mapping tuple.
    """
    lim = DEFAULT_AUTOMORPHISM_LIMIT if limit is None else limit
    if h.num_links > lim:
        raise SizeLimitExceeded(h.num_links, lim)

    n = h.num_links
    family = set(h.edge_sets)

    def signature(v):
        return tuple(sorted(len(es) for es in h.edge_sets if v in es))

    sigs = [signature(v) for v in range(n)]
    candidates = [[w for w in range(n) if sigs[w] == sigs[v]] for v in range(n)]
    # Edges checkable once link k is assigned: those whose largest member is k.
    edges_closed_at = [[] for _ in range(n)]
    for es in h.edge_sets:
        edges_closed_at[max(es)].append(es)

    image = [0] * n
    used = [False] * n
    found = []

    def assign(k):
        if k == n:
            found.append(Permutation(tuple(image)))
            return
        for w in candidates[k]:
            if used[w]:
                continue
            image[k] = w
            if all(
                frozenset(image[v] for v in es) in family for es in edges_closed_at[k]
            ):
                used[w] = True
                assign(k + 1)
                used[w] = False
        image[k] = 0

    assign(0)
    return found
