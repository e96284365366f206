"""Immutable simple graphs, connectivity, and breadth-first level structure.

Vertices are integers 0..n-1. Edges are stored canonically as (min, max)
pairs sorted lexicographically, so two graphs with the same edge set are
equal as values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    DuplicateEdge,
    EndpointOutOfRange,
    LevelOutOfRange,
    LoopEdge,
    ParseError,
    RootOutOfRange,
)

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, ascending. Built fresh on each call."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def incident(self) -> list[list[int]]:
        """For each vertex, the indices into `edges` of its incident edges."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in set(self.edges)

    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}


def build_graph(n: int, edges) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Rejects loops, repeated vertex pairs (in either order), and endpoints
    outside [0, n).
    """
    if n < 0:
        raise EndpointOutOfRange(f"vertex count {n} is negative")
    canon: list[Edge] = []
    seen: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"edge ({u}, {v}) is a loop")
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u}, {v}) leaves vertex range [0, {n})")
        e = canonical_edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"edge {e} appears more than once")
        seen.add(e)
        canon.append(e)
    canon.sort()
    return Graph(n, tuple(canon))


@dataclass(frozen=True)
class Component:
    """A connected component re-indexed to 0..k-1.

    `vertices[new_id]` is the original vertex id, so labelings computed on
    the component can be mapped back onto the parent graph.
    """

    graph: Graph
    vertices: tuple[int, ...]

    def parent_edge(self, e: Edge) -> Edge:
        return canonical_edge(self.vertices[e[0]], self.vertices[e[1]])


def components(g: Graph) -> list[Component]:
    """Connected components, ordered by their smallest original vertex id."""
    adj = g.adjacency()
    unseen = set(range(g.n))
    out: list[Component] = []
    for start in range(g.n):
        if start not in unseen:
            continue
        verts = [start]
        unseen.discard(start)
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for nb in adj[w]:
                if nb in unseen:
                    unseen.discard(nb)
                    verts.append(nb)
                    queue.append(nb)
        verts.sort()
        back = {orig: new for new, orig in enumerate(verts)}
        vset = set(verts)
        sub_edges = [
            (back[u], back[v]) for u, v in g.edges if u in vset and v in vset
        ]
        out.append(Component(build_graph(len(verts), sub_edges), tuple(verts)))
    return out


@dataclass(frozen=True)
class LevelPartition:
    """Breadth-first layers from a root: levels[i] holds distance-i vertices."""

    root: int
    levels: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.levels) - 1

    def level_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.levels) for v in layer}


def default_root(g: Graph) -> int:
    """Lowest-id vertex of maximum degree."""
    deg = g.degrees()
    best = max(deg)
    return deg.index(best)


def level_partition(g: Graph, root: int | None = None) -> LevelPartition:
    """Distance layers from `root` within the root's component.

    Layer tuples are ascending; callers normally pass connected graphs.
    """
    if root is None:
        root = default_root(g)
    if not (0 <= root < g.n):
        raise RootOutOfRange(f"root {root} is not a vertex of a {g.n}-vertex graph")
    adj = g.adjacency()
    dist = {root: 0}
    queue = deque([root])
    while queue:
        w = queue.popleft()
        for nb in adj[w]:
            if nb not in dist:
                dist[nb] = dist[w] + 1
                queue.append(nb)
    depth = max(dist.values())
    layers = [sorted(v for v, dv in dist.items() if dv == i) for i in range(depth + 1)]
    return LevelPartition(root, tuple(tuple(layer) for layer in layers))


def layer_subgraphs(g: Graph, p: LevelPartition, i: int) -> tuple[Graph, Graph]:
    """The level-i edge blocks: (edges within level i, edges to level i-1).

    Both are returned on the full vertex range of g so ids stay stable.
    """
    if not (1 <= i <= p.d):
        raise LevelOutOfRange(f"layer {i} out of range 1..{p.d}")
    here = set(p.levels[i])
    above = set(p.levels[i - 1])
    intra = [e for e in g.edges if e[0] in here and e[1] in here]
    cross = [
        e
        for e in g.edges
        if (e[0] in here and e[1] in above) or (e[0] in above and e[1] in here)
    ]
    return build_graph(g.n, intra), build_graph(g.n, cross)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: a header line "n m" and then m lines "u v".

    Vertex ids are 0-based. Malformed input raises ParseError naming the
    offending 1-based line number.
    """
    lines = text.splitlines()
    body = [(no, line.strip()) for no, line in enumerate(lines, start=1)]
    # trailing blank lines are tolerated, interior ones are not
    while body and not body[-1][1]:
        body.pop()
    if not body:
        raise ParseError("line 1: expected header 'n m'")
    no, header = body[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {no}: expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {no}: expected two integers in header, got {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {no}: counts must be nonnegative")
    if len(body) - 1 != m:
        raise ParseError(
            f"line {body[-1][0] if len(body) > 1 else no}: "
            f"expected {m} edge lines, found {len(body) - 1}"
        )
    edges: list[Edge] = []
    for no, line in body[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: expected two integers, got {line!r}") from None
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except (LoopEdge, DuplicateEdge, EndpointOutOfRange) as exc:
        raise ParseError(f"invalid edge list: {exc}") from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
