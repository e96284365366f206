"""Trail decompositions of the cross blocks between two adjacent levels.

Given the bipartite block between level i and level i-1, the odd-degree
construction reserves one incident cross edge per level-i vertex (the sigma
choice) and needs the leftover edges to split into edge-disjoint open
trails, no two of which share an initial or terminal vertex. A leftover
component admits such a split exactly when it has odd-degree vertices:
pairing the odd vertices with virtual edges, walking one closed trail
through everything, and cutting at the virtual edges produces open trails
whose two ends are odd vertices, each used once.

Trails are classified by where their endpoints live: W has both ends on
the shallow side (level i-1), M both on the deep side (level i), N one on
each. In a bipartite block W and M trails have even length and N trails
odd length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NoValidSigma, OddWMTrail, RangeSizeMismatch
from .graph import Edge, Graph, canonical_edge


@dataclass(frozen=True)
class Trail:
    vertices: tuple[int, ...]
    kind: str  # "W" | "M" | "N"

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [canonical_edge(vs[j], vs[j + 1]) for j in range(len(vs) - 1)]

    def reversed(self) -> Trail:
        return Trail(tuple(reversed(self.vertices)), self.kind)


@dataclass(frozen=True)
class TrailDecomposition:
    """A sigma choice plus open trails covering the rest of a cross block."""

    cross: Graph
    deep: tuple[int, ...]  # the level-i vertices, ascending
    sigma: tuple[tuple[int, Edge], ...]  # (deep vertex, reserved edge)
    trails: tuple[Trail, ...]

    def sigma_map(self) -> dict[int, Edge]:
        return dict(self.sigma)

    def sigma_edges(self) -> set[Edge]:
        return {e for _, e in self.sigma}

    def validate(self) -> None:
        """Raise ValueError unless every structural invariant holds."""
        deep = set(self.deep)
        sigma_edges: list[Edge] = []
        for v, e in self.sigma:
            if v not in e:
                raise ValueError(f"sigma edge {e} is not incident to vertex {v}")
            if v not in deep:
                raise ValueError(f"sigma key {v} is not a deep-side vertex")
            sigma_edges.append(e)
        if len(set(sigma_edges)) != len(sigma_edges):
            raise ValueError("sigma is not injective")
        if sorted(v for v, _ in self.sigma) != sorted(deep):
            raise ValueError("sigma must choose exactly one edge per deep vertex")

        covered: list[Edge] = list(sigma_edges)
        ends: list[int] = []
        for t in self.trails:
            if len(t.vertices) < 2:
                raise ValueError("trail with no edges")
            for a, b in zip(t.vertices, t.vertices[1:]):
                covered.append(canonical_edge(a, b))
            first, last = t.vertices[0], t.vertices[-1]
            if first == last:
                raise ValueError(f"trail {t.vertices} is closed")
            ends.extend((first, last))
            expected = {(True, True): "M", (False, False): "W"}.get(
                (first in deep, last in deep), "N"
            )
            if t.kind != expected:
                raise ValueError(
                    f"trail {t.vertices} typed {t.kind}, endpoints say {expected}"
                )
        if len(set(ends)) != len(ends):
            raise ValueError("two trails share an initial or terminal vertex")
        if len(set(covered)) != len(covered):
            raise ValueError("an edge is covered twice")
        if set(covered) != set(self.cross.edges):
            raise ValueError("sigma plus trails do not partition the cross edges")


def _edge_components(edges: Sequence[Edge]) -> list[list[Edge]]:
    """Group edges by connected component, components ordered by least vertex."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    out: list[list[Edge]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        verts = {start}
        seen.add(start)
        while stack:
            w = stack.pop()
            for nb in adj[w]:
                if nb not in seen:
                    seen.add(nb)
                    verts.add(nb)
                    stack.append(nb)
        out.append([e for e in edges if e[0] in verts])
    return out


def _euler_steps(
    adj: dict[int, list[tuple[int, int]]], start: int, edge_count: int
) -> list[tuple[int, int, int]]:
    """Closed walk using every edge once, as (from, edge id, to) steps."""
    ptr = {v: 0 for v in adj}
    used = [False] * edge_count
    stack: list[tuple[int, int | None, int | None]] = [(start, None, None)]
    popped: list[tuple[int, int | None, int | None]] = []
    while stack:
        v = stack[-1][0]
        lst = adj[v]
        i = ptr[v]
        while i < len(lst) and used[lst[i][1]]:
            i += 1
        ptr[v] = i
        if i == len(lst):
            popped.append(stack.pop())
        else:
            nbr, eid = lst[i]
            used[eid] = True
            stack.append((nbr, eid, v))
    popped.reverse()
    return [(frm, eid, v) for v, eid, frm in popped if eid is not None]


def _open_trail_split(edges: Sequence[Edge]) -> list[list[int]] | None:
    """Split the edges into open trails ending at the odd-degree vertices.

    Returns trail vertex sequences, or None when some component has no
    odd-degree vertex (a closed component cannot be split without reusing
    an endpoint).
    """
    trails: list[list[int]] = []
    for comp in _edge_components(edges):
        deg: dict[int, int] = {}
        for u, v in comp:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        odd = sorted(v for v, dv in deg.items() if dv % 2 == 1)
        if not odd:
            return None
        n_real = len(comp)
        records: list[Edge] = list(comp)
        records += [(odd[j], odd[j + 1]) for j in range(0, len(odd), 2)]
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in deg}
        for eid, (u, v) in enumerate(records):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        for row in adj.values():
            row.sort()
        steps = _euler_steps(adj, odd[0], len(records))
        cut = next(i for i, s in enumerate(steps) if s[1] >= n_real)
        steps = steps[cut + 1 :] + steps[: cut + 1]
        current: list[tuple[int, int, int]] = []
        for frm, eid, to in steps:
            if eid >= n_real:
                if not current:
                    raise ValueError("virtual edges ended up adjacent in the walk")
                trails.append([current[0][0]] + [s[2] for s in current])
                current = []
            else:
                current.append((frm, eid, to))
        if current:
            raise ValueError("walk did not end on a virtual edge")
    return trails


def _classify(seq: list[int], deep: set[int]) -> Trail:
    first_in = seq[0] in deep
    last_in = seq[-1] in deep
    if first_in and last_in:
        kind = "M"
    elif not first_in and not last_in:
        kind = "W"
    else:
        kind = "N"
    if kind in ("W", "M"):
        if seq[0] > seq[-1]:
            seq = list(reversed(seq))
    elif not first_in:
        seq = list(reversed(seq))  # N trails start on the deep side
    return Trail(tuple(seq), kind)


def find_sigma_and_trails(h: Graph, deep: Iterable[int]) -> TrailDecomposition:
    """Reserve one cross edge per deep vertex so the rest splits into trails.

    Searches depth-first over per-vertex incident-edge choices in canonical
    order; the first choice whose remainder decomposes wins. Raises
    NoValidSigma when no choice works (or a deep vertex has no incident
    edge, which means the input did not come from a level partition).
    """
    deep_sorted = sorted(set(deep))
    incident: dict[int, list[Edge]] = {v: [] for v in deep_sorted}
    for e in h.edges:
        for v in e:
            if v in incident:
                incident[v].append(e)
    for v in deep_sorted:
        if not incident[v]:
            raise NoValidSigma(f"deep vertex {v} has no incident cross edge")

    chosen: list[Edge] = []
    chosen_set: set[Edge] = set()

    def search(idx: int) -> list[list[int]] | None:
        if idx == len(deep_sorted):
            remainder = [e for e in h.edges if e not in chosen_set]
            return _open_trail_split(remainder)
        for e in incident[deep_sorted[idx]]:
            if e in chosen_set:
                continue
            chosen.append(e)
            chosen_set.add(e)
            found = search(idx + 1)
            if found is not None:
                return found
            chosen.pop()
            chosen_set.discard(e)
        return None

    split = search(0)
    if split is None:
        raise NoValidSigma(
            f"no edge reservation for {deep_sorted} leaves an open-trail remainder"
        )
    deep_set = set(deep_sorted)
    dec = TrailDecomposition(
        cross=h,
        deep=tuple(deep_sorted),
        sigma=tuple(zip(deep_sorted, chosen)),
        trails=tuple(_classify(seq, deep_set) for seq in split),
    )
    dec.validate()
    return dec


def label_trails(dec: TrailDecomposition, labels: Sequence[int] | range) -> dict[Edge, int]:
    """Assign a contiguous label block to the trail edges of a decomposition.

    Labels are handed out from both ends of the block: each trail
    alternates low/high picks so that consecutive edges at an internal
    shallow vertex sum to s+l or s+l+1 and at an internal deep vertex to
    s+l or s+l-1, where s and l bound the block. W trails start low from
    their smaller endpoint, M trails start high. N trails are paired
    longest-first: the first of a pair starts high from its deep endpoint,
    the second starts low from its shallow endpoint, and a leftover N
    trail is labeled like a first. Returns the edge -> label mapping for
    just the trail edges.
    """
    pool = list(labels)
    if pool != sorted(pool) or (pool and pool != list(range(pool[0], pool[-1] + 1))):
        raise RangeSizeMismatch(f"labels must form an ascending run, got {pool}")
    total = sum(t.edge_count for t in dec.trails)
    if total != len(pool):
        raise RangeSizeMismatch(f"{len(pool)} labels for {total} trail edges")
    for t in dec.trails:
        if t.kind in ("W", "M") and t.edge_count % 2 == 1:
            raise OddWMTrail(f"{t.kind} trail {t.vertices} has odd length")
    if not pool:
        return {}

    s, l = pool[0], pool[-1]
    lo_used = 0
    hi_used = 0
    deep = set(dec.deep)
    out: dict[Edge, int] = {}

    def orient(t: Trail, start_deep: bool) -> Trail:
        if (t.vertices[0] in deep) == start_deep:
            return t
        if (t.vertices[-1] in deep) == start_deep:
            return t.reversed()
        return t

    def assign(t: Trail, start_high: bool) -> None:
        nonlocal lo_used, hi_used
        for j, e in enumerate(t.edges()):
            if start_high == (j % 2 == 0):
                out[e] = l - hi_used
                hi_used += 1
            else:
                out[e] = s + lo_used
                lo_used += 1

    ws = [t for t in dec.trails if t.kind == "W"]
    ms = [t for t in dec.trails if t.kind == "M"]
    ns = sorted(
        (t for t in dec.trails if t.kind == "N"),
        key=lambda t: -t.edge_count,
    )
    labeled: list[Trail] = []
    for t in ws:
        assign(t, start_high=False)
        labeled.append(t)
    for t in ms:
        assign(t, start_high=True)
        labeled.append(t)
    for j in range(0, len(ns) - 1, 2):
        first = orient(ns[j], start_deep=True)
        second = orient(ns[j + 1], start_deep=False)
        assign(first, start_high=True)
        assign(second, start_high=False)
        labeled.extend((first, second))
    if len(ns) % 2 == 1:
        last = orient(ns[-1], start_deep=True)
        assign(last, start_high=True)
        labeled.append(last)

    if lo_used + hi_used != len(pool):
        raise RangeSizeMismatch("label block not fully consumed")
    _check_pair_sums(labeled, deep, out, s, l)
    return out


def _check_pair_sums(
    trails: list[Trail], deep: set[int], out: dict[Edge, int], s: int, l: int
) -> None:
    # the whole construction leans on these sums; fail loudly if broken
    for t in trails:
        es = t.edges()
        for j in range(len(es) - 1):
            w = t.vertices[j + 1]
            pair = out[es[j]] + out[es[j + 1]]
            allowed = (s + l, s + l - 1) if w in deep else (s + l, s + l + 1)
            if pair not in allowed:
                raise ValueError(
                    f"internal vertex {w} of trail {t.vertices} sees pair sum "
                    f"{pair}, expected one of {allowed}"
                )
