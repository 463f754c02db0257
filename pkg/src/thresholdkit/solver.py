"""Exact decision procedures for threshold colorability.

``solve_fixed`` answers the fixed-range question by exhaustive backtracking,
so a ``None`` answer is a proof of infeasibility at that exact ``(r, t)``.
``solve_exists`` and ``check_total`` search bounded ``(r, t)`` space; their
negative answers mean "infeasible up to the caps", never unconditional
infeasibility (no bound on the range needed for feasible instances is known).
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .coloring import EdgeLabeling, Label, ThresholdColoring, verify
from .errors import CapExceededError, ValidationError
from .graphs import Graph, build_graph

EXHAUSTIVE_EDGE_CAP = 24


@dataclass(frozen=True)
class SearchCaps:
    r_max: int
    t_max: int

    def __post_init__(self):
        if self.r_max < 1:
            raise ValidationError(f"r_max must be >= 1, got {self.r_max}")
        if self.t_max < 0:
            raise ValidationError(f"t_max must be >= 0, got {self.t_max}")


def default_caps(g: Graph, t_max: int = 4) -> SearchCaps:
    """Default search box: r_max = min(16, n*(t_max+1)).

    Covers every (r, t) pair the constructive colorers ever need
    ((2,0), (3,0), (5,1), (8,2)) while keeping exhaustive sweeps bounded.
    """
    return SearchCaps(max(1, min(16, g.n * (t_max + 1))), t_max)


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class Sampled:
    seed: int
    count: int


Mode = Union[Exhaustive, Sampled]


@dataclass(frozen=True)
class TotalReport:
    """Outcome of a total-threshold-colorability check."""

    labelings_checked: int
    failures: Tuple[EdgeLabeling, ...]
    caps: SearchCaps
    mode: Mode

    @property
    def is_total_colorable(self) -> bool:
        return not self.failures


def solve_fixed(
    g: Graph, labeling: EdgeLabeling, r: int, t: int
) -> Optional[ThresholdColoring]:
    """Find a threshold coloring with colors in [1..r], or prove none exists.

    Backtracks over vertices in descending-degree order (ties by id), colors
    ascending from 1, pruning as soon as an incident fully-assigned edge
    violates the biconditional.  Exact: ``None`` means no coloring exists at
    this (r, t).
    """
    if r < 1 or t < 0:
        raise ValidationError(f"need r >= 1 and t >= 0, got ({r}, {t})")
    labeling.check_total(g)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    constraints: List[List[Tuple[int, bool]]] = []
    for i, v in enumerate(order):
        cons = []
        for w in g.neighbors(v):
            if pos[w] < i:
                cons.append((pos[w], labeling.label(v, w) is Label.NEAR))
        constraints.append(cons)

    colors = [0] * g.n

    def backtrack(i: int) -> bool:
        if i == g.n:
            return True
        for c in range(1, r + 1):
            ok = True
            for j, near in constraints[i]:
                if (abs(c - colors[j]) <= t) != near:
                    ok = False
                    break
            if ok:
                colors[i] = c
                if backtrack(i + 1):
                    return True
        return False

    if not backtrack(0):
        return None
    col = ThresholdColoring(r, t, {order[i]: colors[i] for i in range(g.n)})
    if verify(g, labeling, col):
        raise AssertionError("solver produced an invalid coloring")
    return col


def solve_exists(
    g: Graph, labeling: EdgeLabeling, caps: SearchCaps
) -> Optional[ThresholdColoring]:
    """Search for any (r, t) coloring with r <= r_max and t <= t_max.

    Feasibility is monotone in r (a coloring within [1..r] is one within
    [1..r_max]), so only r = r_max needs solving for each threshold; t runs
    ascending so the smallest workable threshold is returned.  ``None`` means
    infeasible within the caps, not infeasible outright.
    """
    for t in range(caps.t_max + 1):
        col = solve_fixed(g, labeling, caps.r_max, t)
        if col is not None:
            return col
    return None


def _labeling_from_mask(edges: Tuple[Tuple[int, int], ...], mask: int) -> EdgeLabeling:
    labels = {}
    for i, e in enumerate(edges):
        labels[e] = Label.NEAR if (mask >> i) & 1 else Label.FAR
    return EdgeLabeling(labels)


def check_total(
    g: Graph, caps: SearchCaps, mode: Mode, threads: int = 1
) -> TotalReport:
    """Check every (or a seeded sample of) edge labelings for colorability.

    Exhaustive mode enumerates all 2^m labelings and refuses graphs with more
    than 24 edges.  Sampled mode draws ``count`` labelings from a seeded PRNG
    (each edge near with probability 1/2).  The report lists each labeling
    for which no coloring exists under ``caps``; the result is independent of
    ``threads``.
    """
    edges = g.edges
    if isinstance(mode, Exhaustive):
        if g.m > EXHAUSTIVE_EDGE_CAP:
            raise CapExceededError(
                f"exhaustive check needs 2^{g.m} labelings; "
                f"refusing graphs with more than {EXHAUSTIVE_EDGE_CAP} edges"
            )
        masks = range(1 << g.m)
    elif isinstance(mode, Sampled):
        rng = random.Random(mode.seed)
        masks = [rng.getrandbits(g.m) if g.m else 0 for _ in range(mode.count)]
    else:
        raise ValidationError(f"unknown mode {mode!r}")

    def infeasible(mask: int) -> Optional[int]:
        labeling = _labeling_from_mask(edges, mask)
        if solve_exists(g, labeling, caps) is None:
            return mask
        return None

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(infeasible, masks))
    else:
        results = [infeasible(mask) for mask in masks]

    failures = tuple(
        _labeling_from_mask(edges, mask) for mask in results if mask is not None
    )
    return TotalReport(len(list(masks)), failures, caps, mode)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def exact_instance(h: Graph) -> Tuple[Graph, EdgeLabeling]:
    """Embed h in K_n with E(h) near and all non-edges far."""
    g = complete_graph(h.n)
    labels = {}
    for e in g.edges:
        labels[e] = Label.NEAR if h.has_edge(*e) else Label.FAR
    return g, EdgeLabeling(labels)


def solve_exact(h: Graph, caps: SearchCaps) -> Optional[ThresholdColoring]:
    """Decide (up to caps) whether h is a threshold subgraph of the complete graph."""
    g, labeling = exact_instance(h)
    return solve_exists(g, labeling, caps)
