"""Shared corpora and independent oracles for the test suite.

The oracles here are deliberately naive (permutation enumeration,
Floyd-Warshall, label-vector search) and never share code with the
implementations they check.
"""

import itertools

import pytest

import radiolab as rl


def atlas_connected(max_n=7):
    """All connected graphs on 1..max_n vertices, from the graph atlas."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if n < 1 or n > max_n:
            continue
        if n > 1 and not nx.is_connected(G):
            continue
        mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
        out.append(
            rl.Graph(n, [(mapping[u], mapping[v]) for u, v in G.edges()])
        )
    return out


@pytest.fixture(scope="session")
def atlas7():
    return atlas_connected(7)


@pytest.fixture(scope="session")
def atlas6():
    return atlas_connected(6)


def random_graph(n, p, rng):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return rl.Graph(n, edges)


def random_connected_graph(n, p, rng):
    """Random graph forced connected by chaining components together."""
    g = random_graph(n, p, rng)
    comps = rl.components(g)
    extra = [(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
    if extra:
        g = rl.Graph(n, list(g.edges()) + extra)
    return g


# ---------------------------------------------------------------------------
# independent oracles


def floyd_warshall(g):
    """Naive O(n^3) all-pairs distances; INF encoded as None."""
    n = g.n
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return d


def brute_has_ham_path(g):
    """Permutation enumeration with no heuristics beyond prefix pruning."""
    n = g.n
    if n == 1:
        return True

    def extend(prefix, used):
        if len(prefix) == n:
            return True
        for v in range(n):
            if v not in used and g.is_edge(prefix[-1], v):
                if extend(prefix + [v], used | {v}):
                    return True
        return False

    return any(extend([s], {s}) for s in range(n))


def brute_has_ham_cycle(g):
    n = g.n
    if n < 3:
        return False
    for perm in itertools.permutations(range(1, n)):
        order = (0,) + perm
        if all(g.is_edge(order[i], order[(i + 1) % n]) for i in range(n)):
            return True
    return False


def brute_radio_number(g):
    """Smallest span by label-vector search, completely independent of the
    branch-and-bound oracle.  Only sane for n <= 5."""
    n = g.n
    dist = floyd_warshall(g)
    diam = max(max(row) for row in dist)
    assert diam != float("inf")

    def exists_with_span(s):
        def assign(vertex, labels):
            if vertex == n:
                return True
            for f in range(1, s + 1):
                if f in labels:
                    continue
                ok = all(
                    abs(f - labels[u]) + dist[u][vertex] >= diam + 1
                    for u in range(vertex)
                )
                if ok and assign(vertex + 1, labels + [f]):
                    return True
            return False

        return assign(0, [])

    s = n
    while not exists_with_span(s):
        s += 1
    return s
