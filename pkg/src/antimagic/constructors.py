"""Constructive labelings for families with known shifted spectra.

Two general-purpose builders return same-degree-distinct-sum labelings
(forests and graphs whose degrees are all odd); shifting such a labeling
far enough makes every vertex sum distinct. The family-specific builders
(paths, stars, double stars, copies of the three-vertex path, and a few
small sporadic graphs) return a labeling for an exact shift k, or None
when that shift is provably infeasible for the family.
"""

from __future__ import annotations

from .errors import (
    BadParameters,
    EvenDegreeVertex,
    HasK2Component,
    IsolatedVertices,
    KBelowThreshold,
    NotForest,
    PathTooShort,
    TooFewLeaves,
)
from .families import cp3, double_star, p5prime, path, star, two_p4, two_s3
from .graph import Edge, Graph, canonical_edge, components, layer_subgraphs, level_partition
from .labeling import (
    EdgeLabeling,
    negate_labeling,
    partial_vertex_sum,
    shift_labeling,
)
from .trails import find_sigma_and_trails, label_trails


def construct_forest_sdds(g: Graph) -> EdgeLabeling:
    """Label a forest with 1..m so same-degree vertices get distinct sums.

    Works tree by tree in order of least vertex id, each tree taking the
    next block of labels. Within a tree, levels are labeled bottom-up;
    inside a level, vertices are ordered by the sum already sitting on
    their edges to the level below, and their parent edges take ascending
    labels in that order.
    """
    comps = components(g)
    for comp in comps:
        if comp.graph.n == 1:
            raise IsolatedVertices(f"vertex {comp.vertices[0]} has no edges")
        if comp.graph.n == 2:
            raise HasK2Component(f"component {comp.vertices} is a single edge")
        if comp.graph.m != comp.graph.n - 1:
            raise NotForest(f"component {comp.vertices} contains a cycle")
    mapping: dict[Edge, int] = {}
    offset = 0
    for comp in comps:
        for e, lab in _tree_sdds(comp.graph, offset).items():
            mapping[comp.parent_edge(e)] = lab
        offset += comp.graph.m
    return EdgeLabeling.from_dict(g, mapping, base=0)


def _tree_sdds(t: Graph, offset: int) -> dict[Edge, int]:
    p = level_partition(t)
    level = p.level_of()
    adj = t.adjacency()
    labels: dict[Edge, int] = {}
    nxt = offset + 1
    for depth in range(p.d, 0, -1):
        ranked = []
        for v in p.levels[depth]:
            below = sum(
                labels[canonical_edge(v, w)] for w in adj[v] if level[w] > depth
            )
            ranked.append((below, v))
        ranked.sort()
        for _, v in ranked:
            parent = next(w for w in adj[v] if level[w] == depth - 1)
            labels[canonical_edge(v, parent)] = nxt
            nxt += 1
    return labels


def construct_odd_degree(g: Graph) -> EdgeLabeling:
    """Same-degree-distinct-sum labeling for graphs whose degrees are all odd.

    Components are labeled in order of least vertex id with consecutive
    label blocks. Within a component, levels from a breadth-first root are
    handled deepest first; each level labels its internal edges, then the
    trail edges of a cross-block decomposition, then the reserved edge of
    each level vertex in ascending order of the sum already at that vertex.
    """
    for v, d in enumerate(g.degrees()):
        if d % 2 == 0:
            raise EvenDegreeVertex(f"vertex {v} has even degree {d}")
    comps = components(g)
    for comp in comps:
        if comp.graph.n == 2:
            raise HasK2Component(f"component {comp.vertices} is a single edge")
    mapping: dict[Edge, int] = {}
    offset = 0
    for comp in comps:
        for e, lab in _odd_connected(comp.graph, offset).items():
            mapping[comp.parent_edge(e)] = lab
        offset += comp.graph.m
    return EdgeLabeling.from_dict(g, mapping, base=0)


def _odd_connected(h: Graph, offset: int) -> dict[Edge, int]:
    p = level_partition(h)
    labels: dict[Edge, int] = {}
    nxt = offset + 1
    for depth in range(p.d, 0, -1):
        intra, cross = layer_subgraphs(h, p, depth)
        for e in intra.edges:
            labels[e] = nxt
            nxt += 1
        dec = find_sigma_and_trails(cross, p.levels[depth])
        block = sum(t.edge_count for t in dec.trails)
        labels.update(label_trails(dec, range(nxt, nxt + block)))
        nxt += block
        ranked = sorted(
            (partial_vertex_sum(h, labels, v, e), v, e) for v, e in dec.sigma
        )
        for _, _, e in ranked:
            labels[e] = nxt
            nxt += 1
    return labels


def _strong_path_labels(n: int) -> list[int]:
    # edge i joins path vertices i-1 and i; lists are in that edge order
    if n % 2 == 1:
        return [1] + [i + 1 for i in range(2, n - 1)] + [2]
    return [1] + [n + 1 - i for i in range(2, n)]


def construct_path_strong(n: int) -> EdgeLabeling:
    """Label a path with 1..n-1 so sums grow strictly with degree."""
    if n < 3:
        raise PathTooShort(f"need at least three vertices, got {n}")
    return EdgeLabeling(path(n), tuple(_strong_path_labels(n)), base=0)


def construct_path_shifted(n: int, k: int) -> EdgeLabeling:
    """A k-shifted labeling of the path on n >= 6 vertices, any integer k.

    Nonnegative shifts lift the strong labeling. Shifts down to -(n//2)
    either use an explicit pattern (k = -2) or split the path at the
    zero-labeled edge into a negated prefix and a strong suffix. Anything
    lower is the mirror image of one of those.
    """
    if n < 6:
        raise PathTooShort(f"the every-shift construction needs n >= 6, got {n}")
    if k >= 0:
        return shift_labeling(construct_path_strong(n), k)
    if k < -(n // 2):
        return negate_labeling(construct_path_shifted(n, -(n + k)))
    if k == -2:
        if n % 2 == 1:
            labels = [-1, 1, 0] + [i - 2 for i in range(4, n)]
        else:
            labels = [0, -1] + [n - i for i in range(3, n)]
        return EdgeLabeling(path(n), tuple(labels), base=-2)
    q = -k
    head = [-lab for lab in _strong_path_labels(q)] if q >= 3 else []
    tail = _strong_path_labels(n - q)
    return EdgeLabeling(path(n), tuple(head + [0] + tail), base=k)


def construct_star(leaves: int, k: int) -> EdgeLabeling | None:
    """k-shifted labeling of a star, or None when that k is impossible.

    Every labeling gives the center the same sum, so the shift is
    infeasible exactly when that sum lands inside the label range.
    """
    if leaves < 2:
        raise TooFewLeaves(f"need at least two leaves, got {leaves}")
    center = leaves * k + leaves * (leaves + 1) // 2
    if k + 1 <= center <= k + leaves:
        return None
    return EdgeLabeling(star(leaves), tuple(range(k + 1, k + leaves + 1)), base=k)


def _deal(labels_desc: list[int], count_a: int, count_b: int) -> tuple[list[int], list[int]]:
    """Alternate labels a, b, a, b, ... with overflow going to side a."""
    a: list[int] = []
    b: list[int] = []
    for lab in labels_desc:
        if len(a) < count_a and (len(a) <= len(b) or len(b) >= count_b):
            a.append(lab)
        else:
            b.append(lab)
    return a, b


def _double_star_plan(
    big: int, small: int, k: int, m: int, pos: int, neg: int
) -> tuple[int, list[int], list[int]] | None:
    """Label values for a double star: (bridge, big-side leaves, small-side).

    Assumes at least as many positive labels as negative ones; the caller
    mirrors the other half of the shift axis. Returns None for the shifts
    the family genuinely misses.
    """
    labels = list(range(k + 1, k + m + 1))
    diff = pos - neg
    if neg == 0:
        desc = labels[::-1]
        a_list, b_list = _deal(desc[1:], big, small)
        return desc[0], a_list, b_list
    if small == 1:
        if diff >= 2:
            rest = sorted(set(labels) - {pos, 0}, reverse=True)
            return pos, rest, [0]
        if diff == 1 and big >= 4:
            rest = sorted(set(labels) - {-(neg - 1), -neg}, reverse=True)
            return -(neg - 1), rest, [-neg]
        return None
    if diff >= 2:
        # cancel the negatives in +j/-j leaf pairs, small side first
        pu = min(neg, small // 2)
        pv = neg - pu
        b_pairs = [x for j in range(1, pu + 1) for x in (j, -j)]
        a_pairs = [x for j in range(pu + 1, neg + 1) for x in (j, -j)]
        rest = list(range(pos, neg, -1)) + [0]
        free_b = small - 2 * pu
        free_a = big - 2 * pv
        if free_b == 0:
            return rest[0], a_pairs + rest[1:], b_pairs
        assert free_a > 0, "pairs cannot exhaust the bigger side at this gap"
        a_extra, b_extra = _deal(rest[1:], free_a, free_b)
        return rest[0], a_pairs + a_extra, b_pairs + b_extra
    if diff == 1:
        pairs = neg - 2
        pu = min((small - 2) // 2, pairs)
        pv = pairs - pu
        b_pairs = [x for j in range(1, pu + 1) for x in (j, -j)]
        a_pairs = [x for j in range(pu + 1, pairs + 1) for x in (j, -j)]
        three = [pos, neg, neg - 1]
        two = [-neg, -(neg - 1)]
        if small - 2 * pu == 2:
            return 0, a_pairs + three, b_pairs + two
        return 0, a_pairs + two, b_pairs + three
    asc = [x for x in labels if x != 0]
    return 0, asc[small:], asc[:small]


def construct_double_star(a: int, b: int, k: int) -> EdgeLabeling | None:
    """k-shifted labeling of the double star with a and b leaves, or None.

    The leaf counts decide everything: with both centers holding two or
    more leaves every shift works; a single-leaf center misses one or two
    shifts near the mirror axis.
    """
    if a < 1 or b < 1:
        raise BadParameters(f"double star needs a, b >= 1, got ({a}, {b})")
    g = double_star(a, b)
    m = a + b + 1
    neg = max(0, min(k + m, -1) - k)
    pos = max(0, k + m) - max(0, k)
    if pos < neg:
        sub = construct_double_star(a, b, -(m + k + 1))
        return None if sub is None else negate_labeling(sub)
    plan = _double_star_plan(max(a, b), min(a, b), k, m, pos, neg)
    if plan is None:
        return None
    bridge, big_leaves, small_leaves = plan
    v_list, u_list = (big_leaves, small_leaves) if a >= b else (small_leaves, big_leaves)
    mapping: dict[Edge, int] = {(0, 1): bridge}
    for i, lab in enumerate(v_list):
        mapping[(0, 2 + i)] = lab
    for i, lab in enumerate(u_list):
        mapping[(1, a + 2 + i)] = lab
    return EdgeLabeling.from_dict(g, mapping, base=k)


def _cp3_pairs(c: int) -> list[tuple[int, int]]:
    # label pairs per component at the smallest directly handled shift
    half = c // 2
    out: list[tuple[int, int]] = []
    if c % 2 == 1:
        for i in range(half + 1):
            out.append((half + 2 * i + 1, 4 * half + 2 - i))
        for i in range(1, half + 1):
            out.append((half + 2 * i, 5 * half + 3 - i))
    else:
        for i in range(half):
            out.append((half + 2 * i + 1, 4 * half - i))
        for i in range(1, half + 1):
            out.append((half + 2 * i, 5 * half + 1 - i))
    return out


def construct_cp3(c: int, k: int) -> EdgeLabeling:
    """k-shifted labeling of c disjoint three-vertex paths, for k >= c//2.

    Component i gets one label pair, smaller value on its first edge, so
    endpoint sums are the labels themselves and the center sums form runs
    sitting strictly above them. Shifts below c//2 down to the other end
    of the excluded band are impossible, and anything lower is reached by
    negating this construction; both are the caller's business.
    """
    if c < 1:
        raise BadParameters(f"need at least one component, got {c}")
    if k < c // 2:
        raise KBelowThreshold(f"direct construction needs k >= {c // 2}, got {k}")
    t = k - c // 2
    mapping: dict[Edge, int] = {}
    for i, (small, large) in enumerate(_cp3_pairs(c)):
        mapping[(3 * i, 3 * i + 1)] = small + t
        mapping[(3 * i + 1, 3 * i + 2)] = large + t
    return EdgeLabeling.from_dict(cp3(c), mapping, base=k)


def construct_two_p4(k: int) -> EdgeLabeling | None:
    """k-shifted labeling of two disjoint four-vertex paths, or None."""
    if k >= -1:
        labels = (k + 1, k + 5, k + 2, k + 3, k + 6, k + 4)
    elif k == -3:
        labels = (-2, -1, 0, 2, 3, 1)
    elif k in (-2, -5):
        return None
    else:
        return negate_labeling(construct_two_p4(-(k + 7)))
    return EdgeLabeling(two_p4(), labels, base=k)


def construct_two_s3(k: int) -> EdgeLabeling | None:
    """k-shifted labeling of two disjoint three-leaf stars, or None."""
    if k >= -1:
        labels = (k + 1, k + 3, k + 6, k + 2, k + 4, k + 5)
    elif k == -3:
        labels = (-2, -1, 0, 1, 2, 3)
    elif k in (-2, -5):
        return None
    else:
        return negate_labeling(construct_two_s3(-(k + 7)))
    return EdgeLabeling(two_s3(), labels, base=k)


def construct_p5prime(k: int) -> EdgeLabeling | None:
    """k-shifted labeling of the five-vertex path with an extra middle leaf.

    Labels are in canonical edge order: the four path edges interleaved
    with the pendant edge at the middle vertex.
    """
    if k >= 0:
        labels = (k + 2, k + 4, k + 5, k + 1, k + 3)
    elif k == -1:
        labels = (1, 3, 4, 0, 2)
    elif k == -2:
        labels = (3, 2, 1, -1, 0)
    elif k == -3:
        return None
    else:
        return negate_labeling(construct_p5prime(-(k + 6)))
    return EdgeLabeling(p5prime(), labels, base=k)


def p3_threshold(m: int) -> int:
    """How many three-vertex paths force an absolutely antimagic union.

    For a graph with m edges, returns the least component count c at which
    the widest label pair spread still clears the densest packing of the
    smaller sums: the first c with (1+m+2c)(m+2c) < (1+m+5c)(c-m).
    """
    if m < 0:
        raise BadParameters(f"edge count cannot be negative, got {m}")
    c = m + 1
    while True:
        if (1 + m + 2 * c) * (m + 2 * c) < (1 + m + 5 * c) * (c - m):
            return c
        c += 1
