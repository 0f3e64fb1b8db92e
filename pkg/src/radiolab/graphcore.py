"""Simple undirected graphs and the metric machinery built on them.

Vertices are dense integers ``0..n-1``.  Graphs are immutable after
construction, so they are safe to share between concurrent searches.
Distance matrices are numpy int arrays using :data:`UNREACHABLE` (= -1)
for cross-component pairs; disconnected inputs are not an error for
distance queries because antipodal-component analysis needs them.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .budget import TIMEOUT, SearchBudget, as_budget
from .errors import Disconnected

__all__ = [
    "UNREACHABLE",
    "Graph",
    "all_pairs_distances",
    "diameter",
    "girth",
    "antipodal",
    "complement",
    "bipartition",
    "components",
    "regularity",
    "moore_bound",
    "bipartite_moore_bound",
    "are_isomorphic",
]

UNREACHABLE = -1


class Graph:
    """Simple undirected graph with optional bipartition labels.

    ``parts``, when given, is a 0/1 label per vertex and every edge must
    join the two sides; constructors of incidence graphs use it to keep
    the point/line split around.
    """

    __slots__ = ("n", "parts", "num_edges", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        parts: Optional[Sequence[int]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self.n = n
        self.num_edges = m
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        if parts is not None:
            parts = tuple(int(x) for x in parts)
            if len(parts) != n or any(x not in (0, 1) for x in parts):
                raise ValueError("parts must be one 0/1 label per vertex")
            for u in range(n):
                for v in self._adj[u]:
                    if parts[u] == parts[v]:
                        raise ValueError(f"edge ({u},{v}) does not cross parts")
        self.parts = parts

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def is_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            mat[u, v] = mat[v, u] = True
        return mat

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``; new vertex i is old vertices[i]."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("vertex list for induced subgraph has repeats")
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self._adj[u]
            if u < v and v in index
        ]
        parts = None
        if self.parts is not None:
            parts = tuple(self.parts[v] for v in vertices)
        return Graph(len(vertices), edges, parts=parts)

    def with_parts(self, parts: Sequence[int]) -> "Graph":
        return Graph(self.n, list(self.edges()), parts=parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._adj == other._adj
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.n, self._adj, self.parts))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


# ---------------------------------------------------------------------------
# metrics


def all_pairs_distances(g: Graph) -> np.ndarray:
    """BFS-exact all-pairs distances; UNREACHABLE marks cross-component pairs."""
    n = g.n
    if n == 0:
        return np.zeros((0, 0), dtype=np.int32)
    rows, cols = [], []
    for u, v in g.edges():
        rows.extend((u, v))
        cols.extend((v, u))
    sparse = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    dist = shortest_path(sparse, method="D", directed=False, unweighted=True)
    out = np.where(np.isinf(dist), UNREACHABLE, dist).astype(np.int32)
    return out


def diameter(g: Graph, dist: Optional[np.ndarray] = None) -> int:
    if g.n == 0:
        raise Disconnected("diameter of the empty graph is undefined")
    if dist is None:
        dist = all_pairs_distances(g)
    if (dist == UNREACHABLE).any():
        raise Disconnected("graph is disconnected")
    return int(dist.max())


def girth(g: Graph) -> Optional[int]:
    """Length of the shortest cycle, or None for acyclic graphs.

    BFS from every root; the first non-tree edge seen from root r closes a
    cycle of length d(r,u)+d(r,v)+1, and minimizing over all roots is exact
    because every vertex of a shortest cycle is such a root.
    """
    best: Optional[int] = None
    for root in range(g.n):
        depth = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and depth[u] * 2 >= best:
                break
            for v in g.neighbors(u):
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle = depth[u] + depth[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


def antipodal(g: Graph, dist: Optional[np.ndarray] = None) -> Graph:
    """Graph joining exactly the vertex pairs at distance diam(g)."""
    if dist is None:
        dist = all_pairs_distances(g)
    diam = diameter(g, dist)
    edges = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if dist[u, v] == diam
    ]
    return Graph(g.n, edges)


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.is_edge(u, v)
    ]
    return Graph(g.n, edges)


def bipartition(g: Graph) -> Optional[tuple[int, ...]]:
    """A 0/1 two-coloring, or None when an odd cycle exists.

    Deterministic: component roots are taken in increasing vertex order
    and always colored 0.
    """
    color: list[Optional[int]] = [None] * g.n
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return tuple(color)  # type: ignore[arg-type]


def regularity(g: Graph) -> Optional[int]:
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None


def moore_bound(delta: int, diam: int) -> int:
    """Largest possible order of a graph with max degree delta and diameter diam."""
    if delta < 1 or diam < 1:
        raise ValueError("need delta >= 1 and diameter >= 1")
    return 1 + delta * sum((delta - 1) ** i for i in range(diam))


def bipartite_moore_bound(delta: int, diam: int) -> int:
    """Largest possible order of a bipartite graph with max degree delta and diameter diam."""
    if delta < 1 or diam < 1:
        raise ValueError("need delta >= 1 and diameter >= 1")
    return 2 * sum((delta - 1) ** i for i in range(diam))


# ---------------------------------------------------------------------------
# isomorphism


def _initial_colors(g: Graph) -> list[tuple]:
    dist = all_pairs_distances(g)
    return [
        (g.degree(v), tuple(sorted(int(x) for x in dist[v]))) for v in range(g.n)
    ]


def _refine_colors_jointly(g: Graph, h: Graph) -> tuple[list[tuple], list[tuple]]:
    """Neighborhood-color refinement run in lockstep on both graphs so the
    resulting color tuples are directly comparable across them."""
    cg, ch = _initial_colors(g), _initial_colors(h)
    while True:
        rg = [
            (cg[v], tuple(sorted(cg[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        rh = [
            (ch[v], tuple(sorted(ch[u] for u in h.neighbors(v))))
            for v in range(h.n)
        ]
        if len(set(rg) | set(rh)) == len(set(cg) | set(ch)):
            return cg, ch
        cg, ch = rg, rh


def are_isomorphic(
    g: Graph, h: Graph, deadline: int | SearchBudget | None = None
):
    """A vertex bijection g -> h preserving adjacency, None, or TIMEOUT.

    Backtracking over color classes from degree/distance-profile refinement;
    None is returned only from an invariant mismatch or an exhausted search,
    so it is a proof of non-isomorphism.  The deadline counts search nodes.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    budget = as_budget(deadline)
    n = g.n
    if n == 0:
        return ()
    cg, ch = _refine_colors_jointly(g, h)
    if sorted(cg) != sorted(ch):
        return None

    by_color: dict[tuple, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)
    # most-constrained-first: smallest candidate class, then highest degree
    order = sorted(range(n), key=lambda v: (len(by_color[cg[v]]), -g.degree(v), v))
    mapping: list[int] = [-1] * n
    used = [False] * n

    def extend(pos: int):
        if pos == n:
            return True
        x = order[pos]
        if not budget.charge():
            return TIMEOUT
        for y in by_color[cg[x]]:
            if used[y]:
                continue
            ok = True
            for x2 in g.neighbors(x):
                y2 = mapping[x2]
                if y2 >= 0 and not h.is_edge(y, y2):
                    ok = False
                    break
            if ok:
                # non-adjacency must be preserved as well
                for q in range(pos):
                    x2 = order[q]
                    if not g.is_edge(x, x2) and h.is_edge(y, mapping[x2]):
                        ok = False
                        break
            if not ok:
                continue
            mapping[x] = y
            used[y] = True
            result = extend(pos + 1)
            if result is True or result is TIMEOUT:
                return result
            mapping[x] = -1
            used[y] = False
        return False

    result = extend(0)
    if result is TIMEOUT:
        return TIMEOUT
    if result is True:
        return tuple(mapping)
    return None
