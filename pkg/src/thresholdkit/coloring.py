"""Edge labelings, threshold colorings, and the single authoritative validity check.

An edge labeling partitions the edges of a graph into *near* edges (``N``) and
*far* edges (``F``).  A coloring ``c`` with threshold ``t`` realizes a labeling
when, for every edge ``(u, v)``, the edge is near if and only if
``|c(u) - c(v)| <= t``.  ``verify`` below is the one place that biconditional
is evaluated; every other module defers to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Mapping, Tuple, TYPE_CHECKING

from .errors import ValidationError

if TYPE_CHECKING:  # pragma: no cover
    from .graphs import Graph

Edge = Tuple[int, int]


class Label(str, Enum):
    NEAR = "N"
    FAR = "F"

    def __repr__(self):
        return f"Label.{self.name}"


def _edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise ValidationError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeLabeling:
    """Total map from (undirected) edges to :class:`Label`.

    Edge keys are stored in canonical ``(min, max)`` form; lookups accept
    either endpoint order.
    """

    labels: Mapping[Edge, Label]

    def __post_init__(self):
        normalized = {}
        for (u, v), lab in self.labels.items():
            key = _edge_key(u, v)
            lab = Label(lab)
            if key in normalized and normalized[key] is not lab:
                raise ValidationError(f"edge {key} labeled both near and far")
            normalized[key] = lab
        object.__setattr__(self, "labels", normalized)

    @classmethod
    def from_sets(cls, near: Iterable[Edge], far: Iterable[Edge]) -> "EdgeLabeling":
        labels: Dict[Edge, Label] = {}
        for u, v in near:
            labels[_edge_key(u, v)] = Label.NEAR
        for u, v in far:
            key = _edge_key(u, v)
            if labels.get(key) is Label.NEAR:
                raise ValidationError(f"edge {key} labeled both near and far")
            labels[key] = Label.FAR
        return cls(labels)

    @classmethod
    def uniform(cls, graph: "Graph", label: Label) -> "EdgeLabeling":
        return cls({e: label for e in graph.edges})

    @classmethod
    def all_near(cls, graph: "Graph") -> "EdgeLabeling":
        return cls.uniform(graph, Label.NEAR)

    @classmethod
    def all_far(cls, graph: "Graph") -> "EdgeLabeling":
        return cls.uniform(graph, Label.FAR)

    def label(self, u: int, v: int) -> Label:
        return self.labels[_edge_key(u, v)]

    def near_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(e for e, lab in self.labels.items() if lab is Label.NEAR))

    def far_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(e for e, lab in self.labels.items() if lab is Label.FAR))

    def check_total(self, graph: "Graph") -> None:
        """Raise unless the labeled edge set equals the graph's edge set."""
        have = set(self.labels)
        want = set(graph.edges)
        if have != want:
            missing = sorted(want - have)
            extra = sorted(have - want)
            raise ValidationError(
                f"labeling is not total: missing={missing[:5]} extra={extra[:5]}"
            )

    def to_json_obj(self) -> dict:
        return {
            "near": [list(e) for e in self.near_edges()],
            "far": [list(e) for e in self.far_edges()],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EdgeLabeling":
        return cls.from_sets(
            [tuple(e) for e in obj.get("near", [])],
            [tuple(e) for e in obj.get("far", [])],
        )


@dataclass(frozen=True)
class ThresholdColoring:
    """A vertex coloring with a declared range ``r`` and threshold ``t``.

    Color values are plain integers.  Published colorings keep every color in
    ``[1..r]``; intermediate construction steps may use arbitrary integers
    (including negatives) and get shifted into range by :func:`normalize`.
    """

    r: int
    t: int
    colors: Mapping[int, int]

    def __post_init__(self):
        if self.r < 1:
            raise ValidationError(f"range r must be >= 1, got {self.r}")
        if self.t < 0:
            raise ValidationError(f"threshold t must be >= 0, got {self.t}")
        object.__setattr__(self, "colors", dict(self.colors))

    def color(self, v: int) -> int:
        return self.colors[v]

    def check_total(self, graph: "Graph") -> None:
        have = set(self.colors)
        want = set(range(graph.n))
        if have != want:
            raise ValidationError(
                f"coloring is not total: missing={sorted(want - have)[:5]} "
                f"extra={sorted(have - want)[:5]}"
            )

    def shifted(self, offset: int) -> "ThresholdColoring":
        return ThresholdColoring(
            self.r, self.t, {v: c + offset for v, c in self.colors.items()}
        )

    def in_range(self) -> bool:
        return all(1 <= c <= self.r for c in self.colors.values())

    def to_json_obj(self) -> dict:
        return {
            "r": self.r,
            "t": self.t,
            "colors": {str(v): c for v, c in sorted(self.colors.items())},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ThresholdColoring":
        return cls(
            int(obj["r"]),
            int(obj["t"]),
            {int(v): int(c) for v, c in obj["colors"].items()},
        )


def verify(graph: "Graph", labeling: EdgeLabeling, coloring: ThresholdColoring) -> Tuple[Edge, ...]:
    """Return the (sorted) edges violating the threshold biconditional.

    An empty result means the coloring is valid.  Violations are reported
    exhaustively rather than fail-fast so tests can see every offending edge.
    Raises :class:`ValidationError` when the labeling or coloring is partial.
    """
    labeling.check_total(graph)
    coloring.check_total(graph)
    t = coloring.t
    colors = coloring.colors
    violations = []
    for u, v in graph.edges:
        near = abs(colors[u] - colors[v]) <= t
        if near != (labeling.labels[(u, v)] is Label.NEAR):
            violations.append((u, v))
    return tuple(sorted(violations))


def is_valid(graph: "Graph", labeling: EdgeLabeling, coloring: ThresholdColoring) -> bool:
    return not verify(graph, labeling, coloring)


def normalize(coloring: ThresholdColoring) -> ThresholdColoring:
    """Shift colors so the minimum is 1 and ``r`` is the minimal covering range.

    Validity under ``verify`` is preserved for the same ``t`` because color
    differences are shift-invariant.  Idempotent.
    """
    if not coloring.colors:
        return ThresholdColoring(1, coloring.t, {})
    lo = min(coloring.colors.values())
    hi = max(coloring.colors.values())
    return ThresholdColoring(
        hi - lo + 1,
        coloring.t,
        {v: c - lo + 1 for v, c in coloring.colors.items()},
    )
