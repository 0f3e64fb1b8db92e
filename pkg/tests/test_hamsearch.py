import random

import pytest

import radiolab as rl
from radiolab import (
    TIMEOUT,
    BadPermutation,
    Graph,
    PathCertificate,
    PreconditionFailed,
    antipodal,
    complement,
    components,
    dirac_hamiltonian_path,
    find_cycle_power,
    find_hamiltonian_path,
    sufficient_conditions,
    verify_certificate,
)

from conftest import (
    brute_has_ham_cycle,
    brute_has_ham_path,
    random_connected_graph,
)


def test_no_path_in_disjoint_edges():
    assert find_hamiltonian_path(Graph(6, [(0, 1), (2, 3), (4, 5)])) is None


def test_path_in_heawood_antipodal():
    a = antipodal(rl.projective_plane_incidence(2))
    cert = find_hamiltonian_path(a)
    assert isinstance(cert, PathCertificate)
    assert verify_certificate(a, cert)


def test_path_in_polarity_complement():
    g = complement(rl.erdos_renyi_polarity(2))
    cert = find_hamiltonian_path(g)
    assert isinstance(cert, PathCertificate)
    assert verify_certificate(g, cert)


def test_agreement_with_bruteforce_on_atlas(atlas6):
    for g in atlas6:
        got = find_hamiltonian_path(g)
        assert got is not TIMEOUT
        assert (got is not None) == brute_has_ham_path(g)
        if got is not None:
            assert verify_certificate(g, got)


@pytest.mark.parametrize("seed", range(20))
def test_agreement_with_bruteforce_random(seed):
    rng = random.Random(7000 + seed)
    n = rng.randint(7, 10)
    g = random_connected_graph(n, rng.uniform(0.2, 0.6), rng)
    got = find_hamiltonian_path(g)
    assert got is not TIMEOUT
    assert (got is not None) == brute_has_ham_path(g)


def test_dirac_guarantee_small(atlas7):
    for g in atlas7:
        report = sufficient_conditions(g)
        if report["dirac_path"]["holds"]:
            cert = find_hamiltonian_path(g)
            assert isinstance(cert, PathCertificate)


def test_timeout_is_distinct_from_none():
    # unbalanced complete bipartite: no Hamiltonian path exists, and with a
    # one-node budget the search cannot prove it
    g = rl.complete_bipartite(4, 6)
    assert find_hamiltonian_path(g, deadline=1) is TIMEOUT
    assert find_hamiltonian_path(g) is None
    assert bool(TIMEOUT) is False


def test_cycle_power_complete_graph():
    k5 = rl.complete(5)
    cert = find_cycle_power(k5, 2)
    assert isinstance(cert, PathCertificate)
    assert cert.kind == "cycle_power" and cert.power == 2
    assert verify_certificate(k5, cert)


def test_cycle_power_degree_obstruction():
    # a 2-regular graph cannot host the square of a Hamiltonian cycle
    assert find_cycle_power(rl.cycle(5), 2) is None


def test_cycle_power_in_gq2_antipodal_component():
    a = antipodal(rl.generalized_quadrangle_incidence(2))
    comp = components(a)[0]
    sub = a.induced_subgraph(comp)
    cert = find_cycle_power(sub, 2)
    assert isinstance(cert, PathCertificate)
    assert verify_certificate(sub, cert)


def test_cycle_power_one_is_hamiltonian_cycle(atlas6):
    for g in atlas6:
        if g.n > 8:
            continue
        got = find_cycle_power(g, 1)
        assert got is not TIMEOUT
        assert (got is not None) == brute_has_ham_cycle(g)
        if got is not None:
            assert verify_certificate(g, got)


@pytest.mark.parametrize("seed", range(6))
def test_cycle_power_one_matches_oracle_up_to_ten(seed):
    rng = random.Random(4200 + seed)
    n = rng.randint(9, 10)
    g = random_connected_graph(n, rng.uniform(0.25, 0.5), rng)
    got = find_cycle_power(g, 1)
    assert got is not TIMEOUT
    assert (got is not None) == brute_has_ham_cycle(g)


def test_cycle_power_explicit_square():
    # the square of C8 contains (by construction) the square of a
    # Hamiltonian cycle
    n = 8
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, (i + 2) % n) for i in range(n)]
    g = Graph(n, [(min(u, v), max(u, v)) for u, v in edges])
    cert = find_cycle_power(g, 2)
    assert isinstance(cert, PathCertificate)
    assert verify_certificate(g, cert)


def test_verify_certificate_reversal_and_corruption():
    g = rl.cycle(6)
    cert = PathCertificate((0, 1, 2, 3, 4, 5), "cycle_power", 1)
    assert verify_certificate(g, cert)
    rev = PathCertificate(tuple(reversed(cert.ordering)), "cycle_power", 1)
    assert verify_certificate(g, rev)
    swapped = PathCertificate((0, 2, 1, 3, 4, 5), "cycle_power", 1)
    assert not verify_certificate(g, swapped)


def test_verify_certificate_bad_permutation():
    with pytest.raises(BadPermutation):
        verify_certificate(rl.cycle(4), PathCertificate((0, 1, 2, 2), "path"))
    with pytest.raises(BadPermutation):
        verify_certificate(rl.cycle(4), PathCertificate((0, 1, 2), "path"))


def test_benchmark_sequences_on_bundled_cages():
    for cage, prefix in (("cage-3-8", "cage-3-8"), ("cage-4-8", "cage-4-8")):
        g = rl.builtin_graph(cage)
        a = antipodal(g)
        comps = components(a)
        for comp, which in zip(comps, ("points", "lines")):
            seq = rl.builtin_sequence(f"{prefix}-{which}")
            assert seq[0] == seq[-1]
            index = {v: i for i, v in enumerate(comp)}
            cert = PathCertificate(
                tuple(index[v] for v in seq[:-1]), "cycle_power", 2
            )
            assert verify_certificate(a.induced_subgraph(comp), cert)


def test_dirac_constructive_path():
    for seed in range(8):
        rng = random.Random(9000 + seed)
        n = rng.randint(4, 60)
        # random graph topped up to the Dirac path bound
        g = random_connected_graph(n, 0.5, rng)
        edges = set(g.edges())
        degs = g.degrees()
        for v in range(n):
            others = sorted(range(n), key=lambda u: (degs[u], u))
            for u in others:
                if degs[v] * 2 >= n - 1:
                    break
                if u != v and (min(u, v), max(u, v)) not in edges:
                    edges.add((min(u, v), max(u, v)))
                    degs[u] += 1
                    degs[v] += 1
        g = Graph(n, sorted(edges))
        cert = dirac_hamiltonian_path(g)
        assert verify_certificate(g, cert)


def test_dirac_constructive_rejects_sparse():
    with pytest.raises(PreconditionFailed):
        dirac_hamiltonian_path(rl.cycle(6))


def test_sufficient_conditions_polarity_complement():
    # complement of the order-3 polarity graph: minimum degree 8 on 13
    # vertices clears the (n-1)/2 bound
    report = sufficient_conditions(complement(rl.erdos_renyi_polarity(3)))
    assert report["dirac_path"]["holds"]
    assert report["dirac_path"]["min_degree"] == 8


@pytest.mark.parametrize("q,holds", [(2, False), (3, False), (4, True)])
def test_sufficient_conditions_square_cycle_threshold(q, holds):
    # antipodal components of the girth-8 cages are q^3-regular on
    # (q+1)(q^2+1) vertices; 5n/7 is cleared exactly for q > 3
    n = (q + 1) * (q * q + 1)
    d = q**3
    assert (7 * d >= 5 * n) == holds
    if q <= 3:
        g = rl.generalized_quadrangle_incidence(q)
        a = antipodal(g)
        sub = a.induced_subgraph(components(a)[0])
        assert sufficient_conditions(sub)["square_cycle"]["holds"] == holds


def test_sufficient_conditions_fourth_power_threshold():
    # hexagon antipodal components: q^5-regular on (q^3+1)(q^2+q+1)
    # vertices; the 15n/16 bound needs q > 15
    for q, holds in ((2, False), (15, False), (16, True), (17, True)):
        n = (q**3 + 1) * (q * q + q + 1)
        d = q**5
        assert (16 * d >= 15 * n) == holds


def test_sufficient_conditions_regular_bipartite():
    g = rl.projective_plane_incidence(3)
    a = antipodal(g)
    report = sufficient_conditions(a)
    assert report["regular_bipartite_path"]["applicable"]
    assert report["regular_bipartite_path"]["holds"]  # m=13 < 2*9
    assert not sufficient_conditions(rl.petersen())["regular_bipartite_path"]["applicable"]


def test_every_returned_certificate_verifies(atlas6):
    for g in atlas6[::5]:
        for result in (find_hamiltonian_path(g), find_cycle_power(g, 1)):
            if isinstance(result, PathCertificate):
                assert verify_certificate(g, result)
