"""Exact, deadline-bounded searches for Hamiltonian paths and for l-th
powers of Hamiltonian cycles, plus arithmetic sufficient-condition checks.

The searches are complete: ``None`` is returned only after the whole
search space has been exhausted, so callers may treat it as a proof of
non-existence.  An exhausted node budget yields :data:`TIMEOUT` instead.
Results are deterministic: start vertices and neighbor candidates are
always tried in increasing (degree, index) order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import TIMEOUT, SearchBudget, as_budget
from .errors import BadPermutation, PreconditionFailed
from .graphcore import Graph, bipartition, components, regularity

__all__ = [
    "PathCertificate",
    "find_hamiltonian_path",
    "find_cycle_power",
    "dirac_hamiltonian_path",
    "verify_certificate",
    "sufficient_conditions",
]


@dataclass(frozen=True)
class PathCertificate:
    """A vertex ordering certifying a Hamiltonian path (kind ``path``) or
    the ``power``-th power of a Hamiltonian cycle (kind ``cycle_power``,
    where every two vertices at cyclic index distance <= power must be
    adjacent)."""

    ordering: tuple[int, ...]
    kind: str = "path"
    power: int = 1


class _BudgetExhausted(Exception):
    pass


def verify_certificate(g: Graph, cert: PathCertificate) -> bool:
    """Check a certificate against a graph; used verbatim on stored
    benchmark sequences as well as on freshly found ones."""
    if sorted(cert.ordering) != list(range(g.n)):
        raise BadPermutation("ordering is not a permutation of the vertex set")
    order = cert.ordering
    n = g.n
    if cert.kind == "path":
        return all(g.is_edge(order[i], order[i + 1]) for i in range(n - 1))
    if cert.kind == "cycle_power":
        if n < 3:
            return False
        pairs = set()
        for i in range(n):
            for d in range(1, cert.power + 1):
                j = (i + d) % n
                if i != j:
                    pairs.add((min(i, j), max(i, j)))
        return all(g.is_edge(order[i], order[j]) for i, j in pairs)
    raise ValueError(f"unknown certificate kind {cert.kind!r}")


# ---------------------------------------------------------------------------
# Hamiltonian path


def _rotation_extension_path(g: Graph) -> list[int] | None:
    """Cheap deterministic constructive attempt (greedy growth plus
    rotations).  Any returned list is a genuine Hamiltonian path; None just
    means the heuristic gave up."""
    n = g.n
    if n == 0:
        return []
    key = lambda v: (g.degree(v), v)
    start = min(range(n), key=key)
    path = [start]
    on_path = [False] * n
    on_path[start] = True
    while len(path) < n:
        extended = False
        for _ in range(2):
            head = path[-1]
            fresh = [w for w in g.neighbors(head) if not on_path[w]]
            if fresh:
                w = min(fresh, key=key)
                path.append(w)
                on_path[w] = True
                extended = True
                break
            path.reverse()
        if extended:
            continue
        # both endpoints stuck: breadth-first search over rotation-reachable
        # endpoints, in both orientations
        improved = False
        for _ in range(2):
            seen = {path[-1]}
            queue = [path]
            while queue and not improved:
                cur = queue.pop(0)
                pos = {v: i for i, v in enumerate(cur)}
                head = cur[-1]
                for x in sorted(g.neighbors(head)):
                    i = pos[x]
                    if i + 1 >= len(cur):
                        continue
                    rotated = cur[: i + 1] + cur[i + 1 :][::-1]
                    new_head = rotated[-1]
                    if any(not on_path[w] for w in g.neighbors(new_head)):
                        path = rotated
                        improved = True
                        break
                    if new_head not in seen:
                        seen.add(new_head)
                        queue.append(rotated)
            if improved:
                break
            path.reverse()
        if not improved:
            return None
    return path


def find_hamiltonian_path(g: Graph, deadline: int | SearchBudget | None = None):
    """A Hamiltonian path certificate, None (proof of non-existence), or
    TIMEOUT when the node budget runs out first."""
    n = g.n
    if n == 0:
        return PathCertificate((), "path")
    if n == 1:
        return PathCertificate((0,), "path")
    if len(components(g)) > 1:
        return None
    degree_one = [v for v in range(n) if g.degree(v) == 1]
    if len(degree_one) > 2:
        return None

    constructed = _rotation_extension_path(g)
    if constructed is not None:
        return PathCertificate(tuple(constructed), "path")

    budget = as_budget(deadline)
    key = lambda v: (g.degree(v), v)
    neighbor_order = {v: sorted(g.neighbors(v), key=key) for v in range(n)}
    # a path endpoint must be a degree-1 vertex whenever one exists
    starts = [min(degree_one)] if degree_one else sorted(range(n), key=key)

    on_path = [False] * n
    sequence: list[int] = []

    def reachable_all(head: int) -> bool:
        # every unvisited vertex must stay reachable from the current head
        # through unvisited vertices only
        target = n - len(sequence)
        if target == 0:
            return True
        seen = {head}
        stack = [head]
        found = 0
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen and not on_path[w]:
                    seen.add(w)
                    found += 1
                    if found == target:
                        return True
                    stack.append(w)
        return False

    def dfs(v: int) -> bool:
        if not budget.charge():
            raise _BudgetExhausted
        sequence.append(v)
        on_path[v] = True
        if len(sequence) == n:
            return True
        if reachable_all(v):
            for w in neighbor_order[v]:
                if not on_path[w] and dfs(w):
                    return True
        sequence.pop()
        on_path[v] = False
        return False

    try:
        for s in starts:
            if dfs(s):
                return PathCertificate(tuple(sequence), "path")
    except _BudgetExhausted:
        return TIMEOUT
    return None


def dirac_hamiltonian_path(g: Graph) -> PathCertificate:
    """Constructive Hamiltonian path for min degree >= (n-1)/2.

    Adds a virtual universal vertex (making every non-adjacent pair satisfy
    the Ore degree-sum bound), repairs an arbitrary closed tour by the
    classic crossover exchange until it is a genuine Hamiltonian cycle,
    then removes the virtual vertex.  O(n^2), no search tree, total.
    """
    n = g.n
    if n == 0:
        return PathCertificate((), "path")
    if n == 1:
        return PathCertificate((0,), "path")
    if 2 * min(g.degrees()) < n - 1:
        raise PreconditionFailed("minimum degree below (n-1)/2")
    univ = n
    size = n + 1

    def adj(a: int, b: int) -> bool:
        return a == univ or b == univ or g.is_edge(a, b)

    tour = list(range(size))
    while True:
        bad = next(
            (i for i in range(size) if not adj(tour[i], tour[(i + 1) % size])), None
        )
        if bad is None:
            break
        # re-root so the non-edge is the closing pair of the list
        t = tour[bad + 1 :] + tour[: bad + 1]
        first, last = t[0], t[-1]
        for j in range(size - 1):
            if adj(t[j], last) and adj(t[j + 1], first):
                tour = t[: j + 1] + t[j + 1 :][::-1]
                break
        else:
            raise AssertionError("crossover pair must exist under the degree bound")
    k = tour.index(univ)
    ordering = tuple(tour[k + 1 :] + tour[:k])
    return PathCertificate(ordering, "path")


# ---------------------------------------------------------------------------
# powers of Hamiltonian cycles


def find_cycle_power(
    g: Graph, power: int, deadline: int | SearchBudget | None = None
):
    """The power-th power of a Hamiltonian cycle, None, or TIMEOUT.

    Candidates must be adjacent to the previous min(power, placed) vertices;
    the wrap-around constraints against the first ``power`` positions are
    checked on completion.  Position 0 is pinned to the minimum-degree
    vertex, which loses no generality for a cycle.
    """
    if power < 1:
        raise ValueError("power must be >= 1")
    n = g.n
    if n < 3:
        return None
    needed = min(2 * power, n - 1)
    if min(g.degrees()) < needed:
        return None
    if len(components(g)) > 1:
        return None

    budget = as_budget(deadline)
    key = lambda v: (g.degree(v), v)
    start = min(range(n), key=key)
    placed = [start]
    used = [False] * n
    used[start] = True

    wrap_pairs = []
    for a in range(1, power + 1):
        for b in range(power + 1 - a):
            if (n - a) % n != b:
                wrap_pairs.append((n - a, b))

    def wrap_ok() -> bool:
        return all(g.is_edge(placed[i], placed[j]) for i, j in wrap_pairs)

    def dfs() -> bool:
        if not budget.charge():
            raise _BudgetExhausted
        if len(placed) == n:
            return wrap_ok()
        recent = placed[-min(power, len(placed)) :]
        candidates = set(g.neighbors(recent[0]))
        for r in recent[1:]:
            candidates &= g.neighbors(r)
        for w in sorted(candidates, key=key):
            if used[w]:
                continue
            placed.append(w)
            used[w] = True
            if dfs():
                return True
            placed.pop()
            used[w] = False
        return False

    try:
        if dfs():
            return PathCertificate(tuple(placed), "cycle_power", power)
    except _BudgetExhausted:
        return TIMEOUT
    return None


# ---------------------------------------------------------------------------
# arithmetic sufficient conditions


def sufficient_conditions(g: Graph, powers: tuple[int, ...] = (2, 3, 4)) -> dict:
    """Degree/part arithmetic for the classic traceability guarantees.

    A holding condition implies the corresponding structure exists but the
    report never replaces a search: searches produce the certificates.
    Comparisons are exact integer cross-multiplications.
    """
    n = g.n
    degs = g.degrees()
    dmin = min(degs) if degs else 0
    report: dict = {
        # Dirac: min degree >= (n-1)/2 forces a Hamiltonian path
        "dirac_path": {
            "holds": n >= 1 and 2 * dmin >= n - 1,
            "min_degree": dmin,
            "vertices": n,
        },
        # Fan-Haggkvist: min degree >= 5n/7 forces the square of a
        # Hamiltonian cycle
        "square_cycle": {
            "holds": n >= 3 and 7 * dmin >= 5 * n,
            "min_degree": dmin,
            "vertices": n,
        },
    }
    # Moon-Moser corollary: an r-regular bipartite graph with equal part
    # size m < 2r has a Hamiltonian path
    r = regularity(g)
    parts = bipartition(g)
    applicable = r is not None and parts is not None and n > 0
    m = sum(parts) if parts else 0
    applicable = applicable and 2 * m == n
    report["regular_bipartite_path"] = {
        "applicable": applicable,
        "holds": bool(applicable and m < 2 * r),
        "degree": r if applicable else None,
        "part_size": m if applicable else None,
    }
    # min degree >= (4l-1)n/4l forces the l-th power of a Hamiltonian cycle
    report["cycle_power"] = {
        ell: {
            "holds": n >= 3 and 4 * ell * dmin >= (4 * ell - 1) * n,
            "min_degree": dmin,
            "vertices": n,
        }
        for ell in powers
    }
    return report
