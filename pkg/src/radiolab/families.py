"""Constructors for the graph families under study.

Every constructor documents its vertex numbering, because downstream
labelings and stored benchmark sequences refer to vertices by index.
Incidence graphs carry ``parts`` labels (0 = points, 1 = lines).
"""

from __future__ import annotations

from importlib import resources
from typing import Iterable

from .errors import BadParams, LoopError, NotPrimePower, ParseError, UnsupportedOrder
from .field import (
    field_add,
    field_inv,
    field_mul,
    field_neg,
    make_field,
    primitive_element,
    singer_difference_set,
)
from .graphcore import Graph, diameter, girth, regularity

__all__ = [
    "complete",
    "cycle",
    "path",
    "complete_bipartite",
    "tadpole",
    "petersen",
    "hoffman_singleton",
    "projective_plane_incidence",
    "generalized_quadrangle_incidence",
    "erdos_renyi_polarity",
    "singer_graph",
    "mms_graph",
    "load_edge_list",
    "read_edge_list",
    "write_edge_list",
    "builtin_graph",
    "builtin_sequence",
    "BUILTIN_GRAPHS",
    "BUILTIN_SEQUENCES",
]


# ---------------------------------------------------------------------------
# classic families


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParams("complete bipartite graph needs both sides >= 1")
    return Graph(
        a + b,
        [(i, a + j) for i in range(a) for j in range(b)],
        parts=[0] * a + [1] * b,
    )


def tadpole(m: int, n: int) -> Graph:
    """Cycle C_m (vertices 0..m-1) plus path P_n (vertices m..m+n-1),
    joined by the edge (0, m)."""
    if m < 3 or n < 1:
        raise BadParams("tadpole needs cycle size >= 3 and path size >= 1")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + i + 1) for i in range(n - 1)]
    edges.append((0, m))
    return Graph(m + n, edges)


def petersen() -> Graph:
    """Kneser graph K(5,2): vertices are the 2-subsets of {0..4} in
    lexicographic order, adjacent iff disjoint."""
    pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return Graph(10, edges)


def hoffman_singleton() -> Graph:
    """Pentagon/pentagram model on 50 vertices.

    Vertex 5h+j is vertex j of pentagon h; vertex 25+5i+j is vertex j of
    pentagram i.  Pentagon h joins j ~ j+-1 (mod 5), pentagram i joins
    j ~ j+-2 (mod 5), and pentagon vertex (h, j) joins pentagram vertex
    (i, h*i + j mod 5).
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph(50, edges)


# ---------------------------------------------------------------------------
# projective geometry machinery


class _FieldOps:
    """FieldSpec plus cached arithmetic tables for the small orders used here."""

    def __init__(self, q: int):
        self.f = make_field(q)
        self.q = q
        self.add = [[field_add(self.f, a, b) for b in range(q)] for a in range(q)]
        self.mul = [[field_mul(self.f, a, b) for b in range(q)] for a in range(q)]
        self.neg = [field_neg(self.f, a) for a in range(q)]
        self.inv = [0] + [field_inv(self.f, a) for a in range(1, q)]

    def dot(self, u: tuple[int, ...], v: tuple[int, ...]) -> int:
        total = 0
        for a, b in zip(u, v):
            total = self.add[total][self.mul[a][b]]
        return total

    def normalize(self, vec: list[int]) -> tuple[int, ...]:
        """Scale a nonzero vector so its leftmost nonzero coordinate is 1."""
        for c in vec:
            if c:
                s = self.inv[c]
                return tuple(self.mul[s][x] for x in vec)
        raise ValueError("zero vector has no projective class")


def _pg_points(ops: _FieldOps, ncoords: int) -> list[tuple[int, ...]]:
    """Canonical points of PG(ncoords-1, q): leftmost nonzero coordinate 1,
    sorted lexicographically by coordinate encodings."""
    q = ops.q
    pts = []
    for lead in range(ncoords):
        tail = ncoords - lead - 1
        for rest in range(q**tail):
            coords = [0] * lead + [1]
            r = rest
            suffix = []
            for _ in range(tail):
                suffix.append(r % q)
                r //= q
            coords += reversed(suffix)
            pts.append(tuple(coords))
    return sorted(pts)


def projective_plane_incidence(q: int) -> Graph:
    """Incidence graph of PG(2,q).

    Vertices 0..q^2+q are the canonical points, vertices q^2+q+1..2(q^2+q)+1
    are lines with line j having the same coordinate triple as point j;
    point i lies on line j iff the triples are orthogonal.
    """
    ops = _FieldOps(q)
    pts = _pg_points(ops, 3)
    n = len(pts)
    edges = [
        (i, n + j)
        for i in range(n)
        for j in range(n)
        if ops.dot(pts[i], pts[j]) == 0
    ]
    return Graph(2 * n, edges, parts=[0] * n + [1] * n)


def generalized_quadrangle_incidence(q: int) -> Graph:
    """Incidence graph of the symplectic quadrangle W(q).

    Points are the canonical points of PG(3,q) (vertices 0..N-1, N =
    (q+1)(q^2+1)); lines are the totally isotropic lines of the form
    x0*y1 - x1*y0 + x2*y3 - x3*y2, numbered N..2N-1 sorted by their point
    index tuples.  The construction is validated against the expected
    regularity, diameter 4 and girth 8 before returning.
    """
    ops = _FieldOps(q)
    pts = _pg_points(ops, 4)
    n = len(pts)
    index = {p: i for i, p in enumerate(pts)}

    def symplectic(u, v) -> int:
        a = ops.mul[u[0]][v[1]]
        b = ops.mul[u[1]][v[0]]
        c = ops.mul[u[2]][v[3]]
        d = ops.mul[u[3]][v[2]]
        return ops.add[ops.add[a][ops.neg[b]]][ops.add[c][ops.neg[d]]]

    lines = set()
    for i in range(n):
        u = pts[i]
        for j in range(i + 1, n):
            v = pts[j]
            if symplectic(u, v):
                continue
            members = [j]
            for t in range(q):
                w = [ops.add[u[c]][ops.mul[t][v[c]]] for c in range(4)]
                members.append(index[ops.normalize(w)])
            lines.add(tuple(sorted(members)))
    lines = sorted(lines)
    if len(lines) != n:
        raise AssertionError(f"W({q}): found {len(lines)} isotropic lines, wanted {n}")
    edges = [(p, n + li) for li, line in enumerate(lines) for p in line]
    g = Graph(2 * n, edges, parts=[0] * n + [1] * n)
    if regularity(g) != q + 1:
        raise AssertionError(f"W({q}) incidence graph is not {q + 1}-regular")
    if diameter(g) != 4 or girth(g) != 8:
        raise AssertionError(f"W({q}) incidence graph failed diameter/girth checks")
    return g


def erdos_renyi_polarity(q: int) -> Graph:
    """Polarity graph on the canonical points of PG(2,q): distinct points
    adjacent iff orthogonal; self-orthogonal (quadric) points carry no loop."""
    ops = _FieldOps(q)
    pts = _pg_points(ops, 3)
    n = len(pts)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if ops.dot(pts[i], pts[j]) == 0
    ]
    return Graph(n, edges)


def singer_graph(q: int) -> Graph:
    """Graph on Z_{q^2+q+1} with i ~ j (i != j) iff i+j mod q^2+q+1 lies in
    the canonical Singer difference set; the q+1 loop positions are dropped."""
    ds = singer_difference_set(q)
    n = ds.modulus
    member = ds.member_set()
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i + j) % n in member
    ]
    return Graph(n, edges)


def mms_graph(q: int) -> Graph:
    """McKay-Miller-Siran graph on Z_2 x F_q x F_q for prime powers
    q = 1 (mod 4).

    Vertex (s, a, b) is numbered s*q^2 + a*q + b.  Within part 0, (0,x,y) ~
    (0,x,y') iff y-y' is a nonzero square (an even power of the primitive
    element); within part 1 the difference must be a non-square; across
    parts, (0,x,y) ~ (1,m,c) iff y = m*x + c.  The restriction to
    q = 1 (mod 4) makes -1 a square, so both within-part rules are
    symmetric.
    """
    try:
        f = make_field(q)
    except NotPrimePower as exc:
        raise UnsupportedOrder(str(exc)) from exc
    if q % 4 != 1:
        raise UnsupportedOrder(f"need q = 1 (mod 4), got q = {q}")
    xi = primitive_element(f)
    powers = [1]
    for _ in range(q - 2):
        powers.append(field_mul(f, powers[-1], xi))
    even = frozenset(powers[0::2])
    odd = frozenset(powers[1::2])

    def vid(s: int, a: int, b: int) -> int:
        return s * q * q + a * q + b

    edges = []
    for a in range(q):
        for b in range(q):
            for b2 in range(b + 1, q):
                delta = field_add(f, b, field_neg(f, b2))
                if delta in even:
                    edges.append((vid(0, a, b), vid(0, a, b2)))
                if delta in odd:
                    edges.append((vid(1, a, b), vid(1, a, b2)))
    for x in range(q):
        for y in range(q):
            for m in range(q):
                c = field_add(f, y, field_neg(f, field_mul(f, m, x)))
                edges.append((vid(0, x, y), vid(1, m, c)))
    g = Graph(2 * q * q, edges)
    if regularity(g) != (3 * q - 1) // 2:
        raise AssertionError(f"MMS graph for q={q} is not {(3 * q - 1) // 2}-regular")
    return g


# ---------------------------------------------------------------------------
# edge-list files


def load_edge_list(text: str) -> Graph:
    """Parse an edge list: one ``u v`` pair per line, 0-indexed, ``#``
    comments and blank lines allowed, duplicate edges collapsed."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex indices, got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex index in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex index in {line!r}", lineno)
        if u == v:
            raise LoopError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    return Graph(top + 1, edges)


def read_edge_list(filename) -> Graph:
    with open(filename, "r", encoding="ascii") as fh:
        return load_edge_list(fh.read())


def write_edge_list(g: Graph, header: Iterable[str] = ()) -> str:
    """Render a graph in the edge-list format, one sorted ``u v`` pair per
    line, preceded by ``#`` header comments."""
    lines = [f"# {h}" for h in header]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bundled cage data

BUILTIN_GRAPHS = ("cage-3-8", "cage-4-8", "cage-3-12")
BUILTIN_SEQUENCES = (
    "cage-3-8-points",
    "cage-3-8-lines",
    "cage-4-8-points",
    "cage-4-8-lines",
)


def _data_text(name: str) -> str:
    return resources.files("radiolab.data").joinpath(name).read_text(encoding="ascii")


def builtin_graph(name: str) -> Graph:
    """One of the bundled cage edge lists (``cage-3-8``, ``cage-4-8``,
    ``cage-3-12``)."""
    if name not in BUILTIN_GRAPHS:
        raise BadParams(f"unknown builtin graph {name!r}; have {BUILTIN_GRAPHS}")
    return load_edge_list(_data_text(name.replace("-", "_") + ".el"))


def builtin_sequence(name: str) -> list[int]:
    """One of the bundled benchmark vertex sequences for the girth-8 cages."""
    if name not in BUILTIN_SEQUENCES:
        raise BadParams(f"unknown builtin sequence {name!r}; have {BUILTIN_SEQUENCES}")
    return [int(tok) for tok in _data_text(name.replace("-", "_") + ".txt").split()]
