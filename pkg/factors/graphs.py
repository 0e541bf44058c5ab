"""
Graph core: immutable simple graphs over bitset adjacency rows.

Vertices are labeled 0..n-1 and adjacency row v is an int whose bit u is set
iff uv is an edge. Family generators label deterministically: in a join the
left operand comes first, so in remark1_graph and remark2_graph the clique is
always {0, ..., c-1} followed by the K2 blocks in order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import networkx as nx

from .exceptions import GraphError

logger = logging.getLogger(__name__)

# One machine word per vertex set.
VERTEX_CAP = 64


def bit(v: int) -> int:
    return 1 << v


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of mask in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True, order=True)
class EdgeRef:
    """An unordered vertex pair, normalized so that u < v"""
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise GraphError(f"Self-loop ({self.u}, {self.v}) is not allowed in a simple graph")
        if self.u < 0 or self.v < 0:
            raise GraphError(f"Negative vertex in edge ({self.u}, {self.v})")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, 'u', u)
            object.__setattr__(self, 'v', v)

    def __iter__(self):
        yield self.u
        yield self.v

    @property
    def mask(self) -> int:
        return bit(self.u) | bit(self.v)

    def __str__(self):
        return f"{self.u}-{self.v}"


@dataclass(frozen=True)
class VertexSet:
    """
    A subset of V(G) for a graph on n vertices.

    Iteration is in ascending vertex order. Set algebra is only defined
    between sets over the same n.
    """
    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError(f"Vertex set mask {self.mask:#x} lies outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> 'VertexSet':
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"Vertex {v} out of range 0..{n - 1}")
            mask |= bit(v)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> 'VertexSet':
        return cls(n, bit(n) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def _check_peer(self, other: 'VertexSet'):
        if self.n != other.n:
            raise GraphError(f"Vertex sets over different orders ({self.n} vs {other.n})")

    def __or__(self, other: 'VertexSet') -> 'VertexSet':
        self._check_peer(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: 'VertexSet') -> 'VertexSet':
        self._check_peer(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: 'VertexSet') -> 'VertexSet':
        self._check_peer(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> 'VertexSet':
        return VertexSet(self.n, (bit(self.n) - 1) & ~self.mask)

    def issubset(self, other: 'VertexSet') -> bool:
        self._check_peer(other)
        return self.mask & ~other.mask == 0

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"VertexSet({{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Graph:
    """
    Immutable finite simple undirected graph.

    Use graph_from_edges() or the family generators rather than building
    adjacency rows by hand.
    """
    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= VERTEX_CAP:
            raise GraphError(f"Graph order {self.n} outside supported range 1..{VERTEX_CAP}")
        if len(self.adjacency) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.adjacency)}")
        for v, row in enumerate(self.adjacency):
            if row < 0 or row >> self.n:
                raise GraphError(f"Adjacency row of vertex {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"Self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise GraphError(f"Adjacency is not symmetric at ({v}, {u})")

    @property
    def full_mask(self) -> int:
        return bit(self.n) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise GraphError(f"Vertex {v} out of range 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adjacency[v])

    def degree_within(self, v: int, mask: int) -> int:
        return popcount(self.adjacency[v] & mask)

    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(row) for row in self.adjacency)

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.n, self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[EdgeRef]:
        """All edges in ascending (u, v) order"""
        return [
            EdgeRef(u, v)
            for u, row in enumerate(self.adjacency)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adjacency) // 2

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of G[within], ascending by smallest vertex"""
        remaining = self.full_mask if within is None else within
        found = []
        while remaining:
            component = frontier = remaining & -remaining
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adjacency[v]
                frontier = reach & remaining & ~component
                component |= frontier
            found.append(component)
            remaining &= ~component
        return found

    def is_connected(self, within: int | None = None) -> bool:
        return len(self.component_masks(within)) == 1

    def is_independent(self, mask: int) -> bool:
        return all(self.adjacency[v] & mask == 0 for v in iter_bits(mask))

    def induced(self, mask: int) -> 'Graph':
        """G[mask], relabeled to 0..|mask|-1 preserving vertex order"""
        labels = list(iter_bits(mask))
        if not labels:
            raise GraphError("Induced subgraph on the empty vertex set is not a graph")
        index = {v: i for i, v in enumerate(labels)}
        rows = []
        for v in labels:
            row = 0
            for u in iter_bits(self.adjacency[v] & mask):
                row |= bit(index[u])
            rows.append(row)
        return Graph(len(labels), tuple(rows))

    def to_networkx(self, within: int | None = None) -> nx.Graph:
        """networkx view of G[within], keeping the original labels"""
        mask = self.full_mask if within is None else within
        G = nx.Graph()
        G.add_nodes_from(iter_bits(mask))
        for u in iter_bits(mask):
            for v in iter_bits(self.adjacency[u] & mask):
                if u < v:
                    G.add_edge(u, v)
        return G

    def __str__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def graph_from_edges(n: int, edges: Iterable) -> Graph:
    """Build a graph on 0..n-1; duplicate pairs collapse"""
    if not isinstance(n, int) or not 1 <= n <= VERTEX_CAP:
        raise GraphError(f"Graph order {n} outside supported range 1..{VERTEX_CAP}")
    rows = [0] * n
    for pair in edges:
        a, b = pair
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"Edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise GraphError(f"Self-loop ({a}, {b}) is not allowed in a simple graph")
        rows[a] |= bit(b)
        rows[b] |= bit(a)
    return Graph(n, tuple(rows))


# ===== Interchange formats =====

def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line (no '>>graph6<<' header).

    Only the canonical encoding is accepted: nonzero padding bits, a
    long-form length for a short graph, or trailing characters are errors.
    """
    line = text[:-1] if text.endswith('\n') else text
    if not line:
        raise GraphError("Malformed graph6: empty input")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"Malformed graph6 {line!r}: character {ch!r} outside '?'..'~'")
    try:
        G = nx.from_graph6_bytes(line.encode('ascii'))
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise GraphError(f"Malformed graph6 {line!r}: {exc}") from exc

    if G.number_of_nodes() == 0:
        raise GraphError(f"Malformed graph6 {line!r}: encodes a graph with no vertices")
    graph = graph_from_edges(G.number_of_nodes(), G.edges())
    if to_graph6(graph) != line:
        raise GraphError(f"Malformed graph6 {line!r}: nonzero padding bits or non-canonical length")
    return graph


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()


def parse_edge_list(text: str) -> Graph:
    """Decode the 'n m' header plus m lines of 0-based 'u v' pairs"""
    rows = [line.split('#', 1)[0].split() for line in text.splitlines()]
    rows = [row for row in rows if row]
    if not rows:
        raise GraphError("Malformed edge list: empty input")
    try:
        numbers = [[int(token) for token in row] for row in rows]
    except ValueError as exc:
        raise GraphError(f"Malformed edge list: {exc}") from exc
    if any(len(row) != 2 for row in numbers):
        raise GraphError("Malformed edge list: every line must hold exactly two integers")

    (n, m), pairs = numbers[0], numbers[1:]
    if len(pairs) != m:
        raise GraphError(f"Malformed edge list: header announces {m} edges, found {len(pairs)}")
    return graph_from_edges(n, pairs)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{e.u} {e.v}" for e in g.edges())
    return '\n'.join(lines) + '\n'


def _is_file(source: str) -> bool:
    try:
        return Path(source).is_file()
    except OSError:
        # e.g. a long graph6 literal exceeds the file name limit
        return False


def read_graph(source: str) -> Graph:
    """
    Load one graph from a graph6 or edge-list file, or from a literal graph6
    string when source is not an existing path.
    """
    if not _is_file(source):
        return parse_graph6(source.strip())

    path = Path(source)
    text = path.read_text(encoding='ascii')
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphError(f"{source}: file holds no graph")
    if len(lines[0].split()) > 1:
        logger.debug(f"[GRAPH] Reading {source} as an edge list")
        return parse_edge_list(text)
    if len(lines) > 1:
        raise GraphError(f"{source}: expected one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


# ===== Constructions =====

def _check_order(n: int, what: str):
    if n > VERTEX_CAP:
        raise GraphError(f"{what} has order {n}, above the vertex cap {VERTEX_CAP}")


def join(g1: Graph, g2: Graph) -> Graph:
    """g1 ∨ g2: disjoint copies (g1 first) plus every cross edge"""
    _check_order(g1.n + g2.n, "join")
    shift = g1.n
    rows = [row | (g2.full_mask << shift) for row in g1.adjacency]
    rows += [(row << shift) | g1.full_mask for row in g2.adjacency]
    return Graph(g1.n + g2.n, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 ∪ g2 with g1's vertices first and no cross edges"""
    _check_order(g1.n + g2.n, "disjoint union")
    shift = g1.n
    rows = list(g1.adjacency) + [row << shift for row in g2.adjacency]
    return Graph(g1.n + g2.n, tuple(rows))


def _positive(value, name: str) -> int:
    if not isinstance(value, int) or value < 1:
        raise GraphError(f"{name} must be a positive integer, got {value!r}")
    return value


def complete(n: int) -> Graph:
    _positive(n, "complete graph order")
    _check_order(n, "complete graph")
    full = bit(n) - 1
    return Graph(n, tuple(full & ~bit(v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side labeled first"""
    _positive(a, "bipartition side")
    _positive(b, "bipartition side")
    return join(empty(a), empty(b))


def path(n: int) -> Graph:
    _positive(n, "path order")
    return graph_from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    _positive(n, "cycle order")
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def empty(n: int) -> Graph:
    """nK1"""
    _positive(n, "order")
    _check_order(n, "edgeless graph")
    return Graph(n, (0,) * n)


def copies(m: int, g: Graph) -> Graph:
    """m disjoint copies of g, block by block"""
    _positive(m, "copy count")
    _check_order(m * g.n, f"{m} copies")
    result = g
    for _ in range(m - 1):
        result = disjoint_union(result, g)
    return result


FAMILIES = {
    'complete': complete,
    'complete_bipartite': complete_bipartite,
    'path': path,
    'cycle': cycle,
    'copies': copies,
    'empty': empty,
}


def family(kind: str, *params) -> Graph:
    """Named standard graph, e.g. family('cycle', 4) or family('copies', 4, K2)"""
    builder = FAMILIES.get(kind)
    if builder is None:
        raise GraphError(f"Unknown family {kind!r}; expected one of {sorted(FAMILIES)}")
    try:
        return builder(*params)
    except TypeError as exc:
        raise GraphError(f"Bad parameters for family {kind!r}: {exc}") from exc


def remark1_graph(t: int) -> Graph:
    """K_{3+t} ∨ (4+2t)K2; clique vertices are 0..2+t"""
    if not isinstance(t, int) or t < 0:
        raise GraphError(f"t must be a nonnegative integer, got {t!r}")
    _check_order(11 + 4 * t, f"remark1_graph(t={t})")
    return join(complete(3 + t), copies(4 + 2 * t, complete(2)))


def remark2_graph(k: int) -> Graph:
    """K_{k+1} ∨ (2k+1)K2; clique vertices are 0..k"""
    _positive(k, "k")
    _check_order(5 * k + 3, f"remark2_graph(k={k})")
    return join(complete(k + 1), copies(2 * k + 1, complete(2)))


# ===== Deletion and structure =====

def delete_vertices(g: Graph, x) -> Graph:
    """G - X, relabeled to 0..n-|X|-1 in original order"""
    if not isinstance(x, VertexSet):
        x = VertexSet.of(g.n, x)
    if x.n != g.n:
        raise GraphError(f"Vertex set over {x.n} vertices used with a graph on {g.n}")
    if x.mask == g.full_mask:
        raise GraphError("Cannot delete every vertex of a graph")
    return g.induced(g.full_mask & ~x.mask)


def _as_edge(e) -> EdgeRef:
    return e if isinstance(e, EdgeRef) else EdgeRef(*e)


def delete_edge(g: Graph, e) -> Graph:
    e = _as_edge(e)
    if e.v >= g.n or not g.has_edge(e.u, e.v):
        raise GraphError(f"{e} is not an edge of {g}")
    rows = list(g.adjacency)
    rows[e.u] &= ~bit(e.v)
    rows[e.v] &= ~bit(e.u)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, e) -> Graph:
    e = _as_edge(e)
    if e.v >= g.n:
        raise GraphError(f"Edge {e} has an endpoint outside 0..{g.n - 1}")
    if g.has_edge(e.u, e.v):
        raise GraphError(f"{e} is already an edge of {g}")
    rows = list(g.adjacency)
    rows[e.u] |= bit(e.v)
    rows[e.v] |= bit(e.u)
    return Graph(g.n, tuple(rows))


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ascending by smallest vertex"""
    return [VertexSet(g.n, mask) for mask in g.component_masks()]
