"""Shift spectra: which k admit a k-shifted labeling and which cannot.

The exhaustive decider works on small graphs only (the label pool grows
factorially), so spectra are computed in three rings: a provable window
from a strong or same-degree-distinct certificate, a brute-force sweep
inside the window with the negation symmetry cutting the work in half,
and lemma-backed certificates outside it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructors import construct_forest_sdds, construct_odd_degree
from .errors import (
    BadParameters,
    BudgetExceeded,
    HasK2Component,
    IsolatedVertices,
    NoSddsFound,
    NotForest,
    NoValidSigma,
)
from .graph import Graph, components
from .labeling import (
    EdgeLabeling,
    negate_labeling,
    sdds_shift_threshold,
    shift_labeling,
)

DEFAULT_BUDGET = 10


def _static_order(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Edge visit order that pins down vertex sums as early as possible.

    Greedily picks the edge completing the most vertices next (ties go to
    canonical order). Also returns, per step, the vertices whose sums
    become final at that step.
    """
    unlab = list(g.degrees())
    remaining = set(range(g.m))
    order: list[int] = []
    finalize: list[list[int]] = []
    while remaining:
        best = -1
        best_score = -1
        for ei in sorted(remaining):
            u, v = g.edges[ei]
            score = (unlab[u] == 1) + (unlab[v] == 1)
            if score > best_score:
                best, best_score = ei, score
        order.append(best)
        remaining.discard(best)
        done = []
        for w in g.edges[best]:
            unlab[w] -= 1
            if unlab[w] == 0:
                done.append(w)
        finalize.append(done)
    return order, finalize


class _DistinctRule:
    """All finalized sums must be pairwise distinct."""

    def __init__(self) -> None:
        self.seen: set[int] = set()

    def admit(self, w: int, s: int, d: int) -> bool:
        if s in self.seen:
            return False
        self.seen.add(s)
        return True

    def retract(self, w: int, s: int, d: int) -> None:
        self.seen.discard(s)


class _SddsRule:
    """Finalized sums must be distinct within each degree class."""

    def __init__(self) -> None:
        self.seen: dict[int, set[int]] = {}

    def admit(self, w: int, s: int, d: int) -> bool:
        bucket = self.seen.setdefault(d, set())
        if s in bucket:
            return False
        bucket.add(s)
        return True

    def retract(self, w: int, s: int, d: int) -> None:
        self.seen[d].discard(s)


class _StrongRule:
    """Distinct sums that respect the degree order strictly."""

    def __init__(self) -> None:
        self.done: list[tuple[int, int]] = []

    def admit(self, w: int, s: int, d: int) -> bool:
        for dx, sx in self.done:
            if s == sx:
                return False
            if (d < dx and s > sx) or (d > dx and s < sx):
                return False
        self.done.append((d, s))
        return True

    def retract(self, w: int, s: int, d: int) -> None:
        self.done.pop()


def _assign(g: Graph, pool: list[int], rule) -> tuple[int, ...] | None:
    """Backtracking injection of pool labels onto edges under a sum rule."""
    order, finalize = _static_order(g)
    edges = g.edges
    deg = g.degrees()
    sums = [0] * g.n
    out = [0] * g.m
    used = [False] * len(pool)

    for v in range(g.n):
        if deg[v] == 0 and not rule.admit(v, 0, 0):
            return None

    def rec(t: int) -> bool:
        if t == g.m:
            return True
        ei = order[t]
        u, v = edges[ei]
        for li, lab in enumerate(pool):
            if used[li]:
                continue
            used[li] = True
            out[ei] = lab
            sums[u] += lab
            sums[v] += lab
            admitted = []
            ok = True
            for w in finalize[t]:
                if rule.admit(w, sums[w], deg[w]):
                    admitted.append(w)
                else:
                    ok = False
                    break
            if ok and rec(t + 1):
                return True
            for w in reversed(admitted):
                rule.retract(w, sums[w], deg[w])
            sums[u] -= lab
            sums[v] -= lab
            used[li] = False
        return False

    return tuple(out) if rec(0) else None


def _check_budget(g: Graph, budget: int) -> None:
    if g.m > budget:
        raise BudgetExceeded(
            f"{g.m} edges exceeds the exhaustive-search budget of {budget}"
        )


def decide(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> EdgeLabeling | None:
    """Exhaustively decide shift k: a labeling, or None when none exists."""
    _check_budget(g, budget)
    found = _assign(g, list(range(k + 1, k + g.m + 1)), _DistinctRule())
    return None if found is None else EdgeLabeling(g, found, base=k)


def search_sdds(g: Graph, budget: int = DEFAULT_BUDGET) -> EdgeLabeling | None:
    """Exhaustively search for a same-degree-distinct-sum labeling."""
    _check_budget(g, budget)
    found = _assign(g, list(range(1, g.m + 1)), _SddsRule())
    return None if found is None else EdgeLabeling(g, found, base=0)


def search_strong(g: Graph, budget: int = DEFAULT_BUDGET) -> EdgeLabeling | None:
    """Exhaustively search for a degree-ordered distinct-sum labeling."""
    _check_budget(g, budget)
    found = _assign(g, list(range(1, g.m + 1)), _StrongRule())
    return None if found is None else EdgeLabeling(g, found, base=0)


@dataclass(frozen=True)
class WindowResult:
    """Closed interval of shifts not settled by a certificate argument.

    Shifts above `hi` come from shifting the certificate; shifts below
    `lo` from negating a shifted certificate.
    """

    lo: int
    hi: int
    method: str  # "strong" | "sdds"
    certificate: EdgeLabeling


def finite_window(g: Graph, budget: int = DEFAULT_BUDGET) -> WindowResult:
    """Bound the undecided shift range for a graph, with a certificate.

    A degree-ordered labeling leaves only [-m, -1] open. Otherwise a
    same-degree-distinct labeling (built for forests and all-odd-degree
    graphs, searched for anything else within budget) leaves
    [-(h+m+1), h] open where h is the shift threshold. Raises NoSddsFound
    when no such certificate exists at all.
    """
    comps = components(g)
    if any(c.graph.n == 2 for c in comps):
        raise NoSddsFound("a single-edge component forces two equal sums")
    if sum(1 for c in comps if c.graph.n == 1) >= 2:
        raise NoSddsFound("two isolated vertices share the sum 0")
    if g.m == 0:
        raise NoSddsFound("no edges to label")
    if g.m <= budget:
        cert = search_strong(g, budget)
        if cert is not None:
            return WindowResult(-g.m, -1, "strong", cert)
    cert = None
    try:
        cert = construct_forest_sdds(g)
    except (NotForest, HasK2Component, IsolatedVertices):
        pass
    if cert is None and all(d % 2 == 1 for d in g.degrees()):
        try:
            cert = construct_odd_degree(g)
        except NoValidSigma:
            pass
    if cert is None:
        cert = search_sdds(g, budget)
    if cert is None:
        raise NoSddsFound("no same-degree-distinct-sum labeling exists")
    hi = sdds_shift_threshold(g)
    return WindowResult(-(hi + g.m + 1), hi, "sdds", cert)


@dataclass(frozen=True)
class ShiftStatus:
    k: int
    status: str  # "feasible" | "infeasible" | "lemma"
    via: str  # "search" | "mirror" | "strong-shift" | "sdds-shift" | "negation-symmetry"
    certificate: EdgeLabeling | None


@dataclass(frozen=True)
class SpectrumReport:
    graph: Graph
    window: WindowResult | None
    sweep_lo: int
    sweep_hi: int
    excluded: tuple[int, ...]
    entries: tuple[ShiftStatus, ...]

    def entry(self, k: int) -> ShiftStatus:
        for row in self.entries:
            if row.k == k:
                return row
        raise KeyError(f"shift {k} is outside the swept range")

    def to_dict(self) -> dict:
        above = "unknown" if self.window is None else f"{self.window.method}-shift"
        below = "unknown" if self.window is None else "negation-symmetry"
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "edges": [list(e) for e in self.graph.edges],
            "window": None
            if self.window is None
            else {
                "lo": self.window.lo,
                "hi": self.window.hi,
                "method": self.window.method,
            },
            "sweep": {"lo": self.sweep_lo, "hi": self.sweep_hi},
            "outside_above": above,
            "outside_below": below,
            "excluded": list(self.excluded),
            "shifts": [
                {
                    "k": row.k,
                    "status": row.status,
                    "via": row.via,
                    "labels": None
                    if row.certificate is None
                    else list(row.certificate.labels),
                }
                for row in self.entries
            ],
        }


def spectrum(
    g: Graph,
    window: tuple[int, int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SpectrumReport:
    """Sweep a shift range and report feasibility per shift.

    Without an override the provable window is swept, which settles the
    spectrum completely. Shifts in the sweep that fall outside the
    provable window are certified by the shift and negation arguments
    instead of brute force. The negation symmetry k <-> -(m+1)-k halves
    the brute-force work: only the upper half is decided, mirrors reuse it.
    """
    m = g.m
    try:
        win = finite_window(g, budget)
    except NoSddsFound:
        if window is None:
            raise
        win = None
    if window is None:
        sweep_lo, sweep_hi = win.lo, win.hi
    else:
        sweep_lo, sweep_hi = window
        if sweep_lo > sweep_hi:
            raise BadParameters(f"empty sweep range {sweep_lo}..{sweep_hi}")
    cache: dict[int, EdgeLabeling | None] = {}
    entries: list[ShiftStatus] = []
    excluded: list[int] = []
    for k in range(sweep_lo, sweep_hi + 1):
        if win is not None and k > win.hi:
            lifted = shift_labeling(win.certificate, k)
            entries.append(ShiftStatus(k, "lemma", f"{win.method}-shift", lifted))
            continue
        if win is not None and k < win.lo:
            lifted = shift_labeling(win.certificate, -(m + 1) - k)
            entries.append(
                ShiftStatus(k, "lemma", "negation-symmetry", negate_labeling(lifted))
            )
            continue
        probe = k if 2 * k >= -(m + 1) else -(m + 1) - k
        if probe not in cache:
            cache[probe] = decide(g, probe, budget)
        found = cache[probe]
        via = "search" if probe == k else "mirror"
        if found is None:
            entries.append(ShiftStatus(k, "infeasible", via, None))
            excluded.append(k)
        else:
            cert = found if probe == k else negate_labeling(found)
            entries.append(ShiftStatus(k, "feasible", via, cert))
    return SpectrumReport(g, win, sweep_lo, sweep_hi, tuple(excluded), tuple(entries))


class AllShifts:
    """Exclusion set meaning every shift is infeasible."""

    def __contains__(self, k: object) -> bool:
        return True

    def __repr__(self) -> str:
        return "AllShifts()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AllShifts)

    def __hash__(self) -> int:
        return hash("AllShifts")


ALL_SHIFTS = AllShifts()


def closed_form_spectrum(
    family: str,
    n: int | None = None,
    a: int | None = None,
    b: int | None = None,
    c: int | None = None,
) -> frozenset[int] | AllShifts:
    """The known excluded-shift set for a named family.

    Returns a frozenset of infeasible shifts, or ALL_SHIFTS for the
    single-edge graph where no shift works.
    """
    if family == "path":
        if n is None or n < 2:
            raise BadParameters("path needs n >= 2")
        if n == 2:
            return ALL_SHIFTS
        return {
            3: frozenset({-2, -1}),
            4: frozenset({-2}),
            5: frozenset({-3, -2}),
        }.get(n, frozenset())
    if family == "star":
        if n is None or n < 1:
            raise BadParameters("star needs a leaf count n >= 1")
        if n == 1:
            return ALL_SHIFTS
        if n % 2 == 0:
            return frozenset({-n // 2 - 1, -n // 2})
        return frozenset({-(n + 1) // 2})
    if family == "double_star":
        if a is None or b is None or a < 1 or b < 1:
            raise BadParameters("double star needs a, b >= 1")
        big, small = max(a, b), min(a, b)
        if small >= 2:
            return frozenset()
        if big == 1:
            return frozenset({-2})
        if big == 2:
            return frozenset({-3, -2})
        if big % 2 == 1:
            return frozenset({-(big + 3) // 2})
        return frozenset()
    if family == "cp3":
        if c is None or c < 1:
            raise BadParameters("need a component count c >= 1")
        return frozenset(range(-((5 * c) // 2), c // 2))
    if family == "two_p4":
        return frozenset({-5, -2})
    if family == "two_s3":
        return frozenset({-5, -2})
    if family == "p5prime":
        return frozenset({-3})
    raise BadParameters(f"no closed form for family {family!r}")
