"""Edge labelings, vertex sums, and the verification predicates.

An EdgeLabeling binds integer labels to the edges of a graph, aligned with
the graph's canonical edge order. `base` records the claimed shift k when
the labels are meant to be exactly {k+1, ..., k+m}; raw labelings leave it
None. Verification never trusts `base` or any cached sums: everything is
recomputed from the labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    EmptyGraph,
    IncompleteLabeling,
    LabelsNotOneToM,
    UnlabeledIncidentEdge,
)
from .graph import Edge, Graph, canonical_edge


@dataclass(frozen=True)
class EdgeLabeling:
    graph: Graph
    labels: tuple[int, ...]
    base: int | None = None

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.m:
            raise IncompleteLabeling(
                f"{len(self.labels)} labels for {self.graph.m} edges"
            )

    @classmethod
    def from_dict(
        cls, graph: Graph, mapping: Mapping[Edge, int], base: int | None = None
    ) -> EdgeLabeling:
        """Build a labeling from an edge -> label mapping covering every edge."""
        labels = []
        for e in graph.edges:
            if e not in mapping:
                raise IncompleteLabeling(f"edge {e} has no label")
            labels.append(mapping[e])
        return cls(graph, tuple(labels), base)

    def label_of(self, u: int, v: int) -> int:
        e = canonical_edge(u, v)
        for i, other in enumerate(self.graph.edges):
            if other == e:
                return self.labels[i]
        raise KeyError(f"no edge {e} in graph")

    def as_dict(self) -> dict[Edge, int]:
        return dict(zip(self.graph.edges, self.labels))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification check.

    `code` names the first violated condition; `witness` pins down where.
    Checks run in a fixed order so the same bad input always yields the
    same verdict.
    """

    ok: bool
    code: str | None = None
    witness: tuple | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    @staticmethod
    def accept() -> Verdict:
        return Verdict(True)

    @staticmethod
    def reject(code: str, witness: tuple, detail: str) -> Verdict:
        return Verdict(False, code, witness, detail)


def vertex_sums(f: EdgeLabeling) -> tuple[int, ...]:
    """Sum of incident edge labels per vertex; isolated vertices get 0."""
    sums = [0] * f.graph.n
    for (u, v), lab in zip(f.graph.edges, f.labels):
        sums[u] += lab
        sums[v] += lab
    return tuple(sums)


def verify_shifted(f: EdgeLabeling, k: int) -> Verdict:
    """Check that f is a k-shifted antimagic labeling.

    Accepts iff the labels are exactly {k+1, ..., k+m} and all vertex sums
    are pairwise distinct. Label-set violations are reported before sum
    collisions, each with the first witness in canonical edge order.
    """
    g = f.graph
    seen: dict[int, int] = {}
    for i, lab in enumerate(f.labels):
        if lab in seen:
            first = g.edges[seen[lab]]
            return Verdict.reject(
                "duplicate-label",
                (first, g.edges[i], lab),
                f"label {lab} used on both {first} and {g.edges[i]}",
            )
        seen[lab] = i
    lo, hi = k + 1, k + g.m
    for i, lab in enumerate(f.labels):
        if not (lo <= lab <= hi):
            return Verdict.reject(
                "label-out-of-range",
                (g.edges[i], lab),
                f"label {lab} on {g.edges[i]} outside [{lo}, {hi}]",
            )
    sums = vertex_sums(f)
    first_with: dict[int, int] = {}
    for v, s in enumerate(sums):
        if s in first_with:
            u = first_with[s]
            return Verdict.reject(
                "vertex-sum-collision",
                (u, v, s),
                f"vertices {u} and {v} both sum to {s}",
            )
        first_with[s] = v
    return Verdict.accept()


def _require_one_to_m(f: EdgeLabeling) -> None:
    if sorted(f.labels) != list(range(1, f.graph.m + 1)):
        raise LabelsNotOneToM(
            f"labels must be a permutation of 1..{f.graph.m}, got {sorted(f.labels)}"
        )


def is_sdds(f: EdgeLabeling) -> Verdict:
    """Check distinct sums among same-degree vertices for a 1..m labeling."""
    _require_one_to_m(f)
    sums = vertex_sums(f)
    deg = f.graph.degrees()
    first_with: dict[tuple[int, int], int] = {}
    for v, s in enumerate(sums):
        key = (deg[v], s)
        if key in first_with:
            u = first_with[key]
            return Verdict.reject(
                "same-degree-sum-collision",
                (u, v, s),
                f"degree-{deg[v]} vertices {u} and {v} both sum to {s}",
            )
        first_with[key] = v
    return Verdict.accept()


def is_strongly_antimagic(f: EdgeLabeling) -> Verdict:
    """Check antimagic with sums ordered strictly by degree (1..m labels).

    Accepts iff all vertex sums are pairwise distinct and deg(u) > deg(v)
    implies sum(u) > sum(v).
    """
    _require_one_to_m(f)
    sums = vertex_sums(f)
    deg = f.graph.degrees()
    first_with: dict[int, int] = {}
    for v, s in enumerate(sums):
        if s in first_with:
            u = first_with[s]
            return Verdict.reject(
                "vertex-sum-collision",
                (u, v, s),
                f"vertices {u} and {v} both sum to {s}",
            )
        first_with[s] = v
    for u in range(f.graph.n):
        for v in range(u + 1, f.graph.n):
            if deg[u] > deg[v] and sums[u] < sums[v]:
                return Verdict.reject(
                    "degree-order-violation",
                    (u, v),
                    f"deg({u})={deg[u]} > deg({v})={deg[v]} "
                    f"but sum {sums[u]} < {sums[v]}",
                )
            if deg[v] > deg[u] and sums[v] < sums[u]:
                return Verdict.reject(
                    "degree-order-violation",
                    (v, u),
                    f"deg({v})={deg[v]} > deg({u})={deg[u]} "
                    f"but sum {sums[v]} < {sums[u]}",
                )
    return Verdict.accept()


def shift_labeling(f: EdgeLabeling, t: int) -> EdgeLabeling:
    """Add t to every label. Vertex sums move by t * deg(v)."""
    base = None if f.base is None else f.base + t
    return EdgeLabeling(f.graph, tuple(lab + t for lab in f.labels), base)


def negate_labeling(f: EdgeLabeling) -> EdgeLabeling:
    """Negate every label.

    A labeling onto {k+1, ..., k+m} becomes one onto {k'+1, ..., k'+m}
    with k' = -(m + k + 1), and vertex sums negate, so distinctness is
    preserved. The recorded base is updated accordingly.
    """
    base = None if f.base is None else -(f.graph.m + f.base + 1)
    return EdgeLabeling(f.graph, tuple(-lab for lab in f.labels), base)


def sdds_shift_threshold(g: Graph) -> int:
    """Smallest shift guaranteed to turn same-degree-distinct sums into
    all-distinct sums: (m - 1) * (max degree - 1)."""
    if g.m == 0:
        raise EmptyGraph("threshold undefined for a graph with no edges")
    return (g.m - 1) * (g.max_degree() - 1)


def partial_vertex_sum(
    g: Graph, labels: Mapping[Edge, int], v: int, excluded: Edge
) -> int:
    """Sum of labels on v's incident edges, skipping the one excluded edge.

    Every other incident edge must already be labeled.
    """
    excluded = canonical_edge(*excluded)
    if v not in excluded:
        raise ValueError(f"excluded edge {excluded} is not incident to vertex {v}")
    total = 0
    for e in g.edges:
        if v not in e or e == excluded:
            continue
        if e not in labels:
            raise UnlabeledIncidentEdge(f"edge {e} at vertex {v} has no label yet")
        total += labels[e]
    return total
