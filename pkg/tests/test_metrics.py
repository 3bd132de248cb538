"""Interference metrics: per-link degrees, sigma, beta, stars, symmetrization.

The independent oracles here recompute everything from scratch: subset scans
over neighborhoods, direct evaluation of the per-link bound over all
independent sets, and a stand-alone induced-star-number search for graphs.
"""

import random
from fractions import Fraction
from itertools import combinations

from hypersched import (
    DemandVector,
    Hypergraph,
    b_bound,
    beta_by_enumeration,
    beta_star_formula,
    delta_i_doubleprime,
    delta_i_prime,
    delta_matrix,
    enumerate_independent_sets,
    fractional_chromatic_number,
    interference_metrics,
    is_beta_star,
    is_feasible,
    is_independent,
    neighbors,
    permute_demand,
    automorphisms,
    symmetrize_demand,
    StarProfile,
)
from conftest import random_demand, random_graph, random_hypergraph

F = Fraction


def oracle_delta_prime(h, i):
    """Scan every subset of the neighborhood directly."""
    d = delta_matrix(h)
    nb = sorted(neighbors(h, i))
    best = F(0)
    for r in range(len(nb) + 1):
        for combo in combinations(nb, r):
            if is_independent(h, combo):
                best = max(best, sum((d[i, j] for j in combo), F(0)))
    return best


def oracle_delta_doubleprime(h, i):
    d = delta_matrix(h)
    nb = sorted(neighbors(h, i))
    best = F(1)
    for r in range(len(nb) + 1):
        for combo in combinations(nb, r):
            if is_independent(h, set(combo) | {i}):
                best = max(best, 1 + sum((d[i, j] for j in combo), F(0)))
    return best


def oracle_beta(h):
    """Directly evaluate the per-link bound at every 0/1 independent demand."""
    best = F(0)
    for s in enumerate_independent_sets(h):
        tau = DemandVector.characteristic(h.num_links, s)
        best = max(best, b_bound(h, tau).value)
    return best


def oracle_star_number(h):
    """Induced star number of a graph: the largest independent subset of a
    single neighborhood.  Recomputed without the Delta machinery."""
    adj = {i: set() for i in range(h.num_links)}
    for a, b in h.edges:
        adj[a].add(b)
        adj[b].add(a)
    pairs = {frozenset(e) for e in h.edges}
    best = 0
    for v in range(h.num_links):
        nb = sorted(adj[v])
        for r in range(len(nb), 0, -1):
            if r <= best:
                break
            for combo in combinations(nb, r):
                if not any(
                    frozenset((a, b)) in pairs for a, b in combinations(combo, 2)
                ):
                    best = max(best, r)
                    break
    return best


class TestBBound:
    def test_star_golden(self, star2x4, star_tau):
        value, per = b_bound(star2x4, star_tau)
        assert per[0] == F(13, 6)
        assert value == F(13, 6)
        assert per == (F(13, 6), F(5, 3), F(5, 3), F(4, 3), F(5, 3), F(5, 3), F(4, 3))

    def test_zero(self, star2x4):
        assert b_bound(star2x4, DemandVector.zeros(7)).value == 0

    def test_parametrized_uniform_demand(self, star2x4):
        # tau with center 9a and petals 6a+b gives bound 21a + 2b at the center
        rng = random.Random(79)
        for _ in range(10):
            a = F(rng.randint(0, 3), 27)
            b = F(rng.randint(0, 3), 9)
            if 9 * a > 1 or 6 * a + b > 1:
                continue
            tau = DemandVector((9 * a,) + (6 * a + b,) * 6)
            assert b_bound(star2x4, tau).per_link[0] == 21 * a + 2 * b


class TestPerLinkDegrees:
    def test_star_center_prime(self, star2x4):
        value, witness = delta_i_prime(star2x4, 0)
        assert value == 2
        assert witness == frozenset({1, 2, 3, 4, 5, 6})

    def test_star_petal_prime(self, star2x4):
        assert delta_i_prime(star2x4, 1).value == 1

    def test_star_center_doubleprime(self, star2x4):
        value, witness = delta_i_doubleprime(star2x4, 0)
        assert value == F(7, 3)
        assert value == oracle_delta_doubleprime(star2x4, 0)
        assert witness == frozenset({1, 2, 4, 5})

    def test_graph_doubleprime_is_one(self):
        rng = random.Random(83)
        for _ in range(15):
            h = random_graph(rng, max_links=8)
            for i in range(h.num_links):
                assert delta_i_doubleprime(h, i).value == 1

    def test_isolated_link(self):
        h = Hypergraph(3, ((1, 2),))
        assert delta_i_prime(h, 0) == (F(0), frozenset())
        assert delta_i_doubleprime(h, 0) == (F(1), frozenset())

    def test_graph_prime_is_neighborhood_independence(self):
        rng = random.Random(89)
        for _ in range(15):
            h = random_graph(rng, max_links=7)
            for i in range(h.num_links):
                assert delta_i_prime(h, i).value == oracle_delta_prime(h, i)

    def test_oracle_agreement_random_hypergraphs(self):
        rng = random.Random(97)
        for _ in range(15):
            h = random_hypergraph(rng, max_links=7)
            for i in range(h.num_links):
                assert delta_i_prime(h, i).value == oracle_delta_prime(h, i)
                assert delta_i_doubleprime(h, i).value == oracle_delta_doubleprime(h, i)


class TestSigma:
    def test_star_report(self, star2x4):
        rep = interference_metrics(star2x4)
        assert rep.delta_prime == 2
        assert rep.delta_doubleprime == F(7, 3)
        assert rep.sigma == F(7, 3)
        assert rep.delta == 2

    def test_claw_graph(self):
        h = Hypergraph(4, ((0, 1), (0, 2), (0, 3)))
        rep = interference_metrics(h)
        assert rep.sigma == 3
        assert rep.delta_doubleprime == 1

    def test_single_edge_sizes(self):
        for m in range(2, 6):
            h = Hypergraph(m, (tuple(range(m)),))
            rep = interference_metrics(h)
            assert rep.delta_prime == 1 == oracle_delta_prime(h, 0)
            assert rep.delta_doubleprime == 1 + F(m - 2, m - 1)
            assert rep.delta_doubleprime == oracle_delta_doubleprime(h, 0)

    def test_edgeless(self):
        rep = interference_metrics(Hypergraph(4))
        assert rep.delta_prime == 0
        assert rep.delta_doubleprime == 1
        assert rep.sigma == 1
        assert rep.delta == 1

    def test_aggregates_consistent(self):
        rng = random.Random(101)
        for _ in range(20):
            h = random_hypergraph(rng, max_links=7)
            rep = interference_metrics(h)
            assert rep.delta_prime == max(m.value for m in rep.per_link_prime)
            assert rep.delta_doubleprime == max(m.value for m in rep.per_link_doubleprime)
            assert rep.sigma == max(rep.delta_prime, rep.delta_doubleprime)
            assert rep.delta == max(F(1), rep.delta_prime)


class TestBeta:
    def test_star_golden(self, star2x4):
        wit = beta_by_enumeration(star2x4)
        assert wit.beta == F(7, 3) == oracle_beta(star2x4)
        assert wit.link == 0
        assert wit.demand.values == (1, 1, 1, 0, 1, 1, 0)

    def test_triangle(self, triangle):
        wit = beta_by_enumeration(triangle)
        assert wit.beta == F(3, 2) == oracle_beta(triangle)

    def test_edgeless(self):
        assert beta_by_enumeration(Hypergraph(3)).beta == 1

    def test_witness_demand_attains_beta(self):
        rng = random.Random(103)
        for _ in range(20):
            h = random_hypergraph(rng, max_links=7)
            wit = beta_by_enumeration(h)
            assert b_bound(h, wit.demand).per_link[wit.link] == wit.beta
            assert is_feasible(h, wit.demand)

    def test_equals_sigma_random(self):
        rng = random.Random(107)
        for _ in range(30):
            h = random_hypergraph(rng, max_links=8)
            assert beta_by_enumeration(h).beta == interference_metrics(h).sigma


class TestRatioBounds:
    def test_chi_f_within_b_and_sigma_factor(self):
        rng = random.Random(109)
        nonzero = 0
        for _ in range(25):
            h = random_hypergraph(rng, max_links=6)
            tau = random_demand(rng, h.num_links)
            chi = fractional_chromatic_number(h, tau).value
            bound = b_bound(h, tau).value
            assert chi <= bound
            if not tau.is_zero:
                nonzero += 1
                assert bound <= interference_metrics(h).sigma * chi
        assert nonzero >= 15

    def test_star_counterexample_inequality(self, star2x4, star_tau):
        # feasible demand whose bound exceeds the degree-style estimate
        rep = interference_metrics(star2x4)
        assert is_feasible(star2x4, star_tau)
        assert b_bound(star2x4, star_tau).value == F(13, 6) > rep.delta == 2


class TestSymmetrize:
    def test_star_golden(self, star2x4):
        tau = DemandVector((1, 1, 1, 0, 1, 1, 0))
        sym = symmetrize_demand(star2x4, tau)
        assert sym.values == (1, F(2, 3), F(2, 3), F(2, 3), F(2, 3), F(2, 3), F(2, 3))

    def test_constant_fixed_point(self, star2x4):
        tau = DemandVector((F(1, 3),) * 7)
        assert symmetrize_demand(star2x4, tau) == tau

    def test_triangle_unit(self, triangle):
        sym = symmetrize_demand(triangle, DemandVector((1, 0, 0)))
        assert sym.values == (F(1, 3),) * 3

    def test_preserves_center_bound_and_feasibility(self, star2x4):
        tau = DemandVector((1, 1, 1, 0, 1, 1, 0))
        sym = symmetrize_demand(star2x4, tau)
        assert b_bound(star2x4, tau).per_link[0] == b_bound(star2x4, sym).per_link[0]
        assert is_feasible(star2x4, tau) == is_feasible(star2x4, sym) is True

    def test_orbit_constant(self):
        rng = random.Random(113)
        for _ in range(10):
            h = random_hypergraph(rng, max_links=6)
            tau = random_demand(rng, h.num_links)
            sym = symmetrize_demand(h, tau)
            for perm in automorphisms(h):
                assert permute_demand(perm, sym) == sym


class TestBetaStar:
    def test_star_recognized(self, star2x4):
        prof = is_beta_star(star2x4)
        assert prof == StarProfile(center=0, size_counts=((4, 2),))
        assert beta_star_formula(prof) == F(7, 3)

    def test_disjoint_edges(self):
        assert is_beta_star(Hypergraph(6, ((0, 1, 2), (3, 4, 5)))) is None

    def test_two_link_overlap(self):
        assert is_beta_star(Hypergraph(4, ((0, 1, 2), (0, 1, 3)))) is None

    def test_no_edges(self):
        assert is_beta_star(Hypergraph(3)) is None

    def test_single_edge_vacuous_center(self):
        prof = is_beta_star(Hypergraph(4, ((1, 2, 3),)))
        assert prof.center == 1
        assert prof.vacuous_center
        assert beta_star_formula(prof) == F(3, 2)

    def test_formula_graph_star(self):
        # (k-2)/(k-1) vanishes at k = 2, so a graph star is worth its degree
        for r in range(1, 6):
            prof = StarProfile(center=0, size_counts=((2, r),))
            assert beta_star_formula(prof) == r

    def test_formula_single_triple(self):
        prof = StarProfile(center=0, size_counts=((3, 1),))
        assert beta_star_formula(prof) == F(3, 2)
        h = Hypergraph(3, ((0, 1, 2),))
        assert interference_metrics(h).sigma == F(3, 2)

    def test_formula_matches_sigma_on_built_stars(self):
        rng = random.Random(127)
        for _ in range(15):
            sizes = [rng.randint(2, 4) for _ in range(rng.randint(1, 3))]
            edges = []
            nxt = 1
            for size in sizes:
                edges.append((0,) + tuple(range(nxt, nxt + size - 1)))
                nxt += size - 1
            h = Hypergraph(nxt, tuple(edges))
            prof = is_beta_star(h)
            assert prof is not None
            assert beta_star_formula(prof) == interference_metrics(h).sigma
            assert beta_star_formula(prof) == beta_by_enumeration(h).beta

    def test_random_detection_consistency(self):
        rng = random.Random(131)
        for _ in range(40):
            h = random_hypergraph(rng, max_links=8)
            prof = is_beta_star(h)
            if prof is not None:
                assert beta_star_formula(prof) == interference_metrics(h).sigma


class TestGraphSpecialization:
    def test_sigma_is_induced_star_number(self):
        rng = random.Random(137)
        for _ in range(25):
            h = random_graph(rng, max_links=8)
            assert interference_metrics(h).sigma == oracle_star_number(h)
