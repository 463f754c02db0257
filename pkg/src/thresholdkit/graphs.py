"""Graph representation, planar-grid generators, and the labeled gadgets.

Vertices are dense integers ``0..n-1``.  Grid generators record exact
rational plane coordinates for every vertex (``coords``); the constructive
colorers and the cube-layout module key their patterns off those coordinates,
so regenerating a grid from the same spec is bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .coloring import EdgeLabeling, Label
from .errors import ValidationError

Edge = Tuple[int, int]
Coord = Tuple[Fraction, Fraction]


def edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise ValidationError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple undirected graph with optional grid coordinates.

    ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v``; ``coords``,
    when present, maps every vertex to an exact ``(x, y)`` position.  Instances
    are immutable after construction and safe to share.
    """

    n: int
    edges: Tuple[Edge, ...]
    coords: Optional[Dict[int, Coord]] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"vertex count must be >= 0, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"edge ({u},{v}) out of range for n={self.n}")
            key = edge_key(u, v)
            if key in seen:
                raise ValidationError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.coords is not None:
            if set(self.coords) != set(range(self.n)):
                raise ValidationError("coords must be total over vertices")
            frozen = {
                v: (Fraction(x), Fraction(y)) for v, (x, y) in self.coords.items()
            }
            object.__setattr__(self, "coords", frozen)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_set

    def components(self) -> List[List[int]]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbors(v):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_json_obj(self) -> dict:
        obj = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.coords is not None:
            obj["coords"] = {
                str(v): [str(x), str(y)] for v, (x, y) in sorted(self.coords.items())
            }
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Graph":
        coords = None
        if "coords" in obj and obj["coords"] is not None:
            coords = {
                int(v): (Fraction(x), Fraction(y))
                for v, (x, y) in obj["coords"].items()
            }
        return build_graph(int(obj["n"]), [tuple(e) for e in obj["edges"]], coords)


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    coords: Optional[Dict[int, Coord]] = None,
) -> Graph:
    """Validate and deduplicate an edge list into a :class:`Graph`.

    Self-loops and out-of-range endpoints raise :class:`ValidationError`;
    duplicate edges are silently merged.
    """
    keys = sorted({edge_key(u, v) for u, v in edges})
    return Graph(n, tuple(keys), coords)


def girth(g: Graph) -> "int | float":
    """Length of the shortest cycle, or ``math.inf`` for forests.

    BFS from every start vertex; a non-tree edge seen at depths ``d(u)``,
    ``d(v)`` witnesses a cycle of length ``d(u) + d(v) + 1`` through the root.
    """
    best = math.inf
    for start in range(g.n):
        dist = {start: 0}
        parent = {start: -1}
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if dist[u] * 2 >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


class GridKind(Enum):
    TRIANGULAR = "triangular"
    SQUARE = "square"
    HEXAGONAL = "hexagonal"
    OCTAGONAL_SQUARE = "octagonal-square"
    SQUARE_TRIANGLE = "square-triangle"


@dataclass(frozen=True)
class GridSpec:
    kind: GridKind
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValidationError("grid rows and cols must be >= 1")


def _graph_from_cells(cells: Iterable[Tuple[Tuple[int, int], ...]]) -> Graph:
    """Assemble a grid graph from per-face vertex cycles in (row, col) space.

    Vertex ids are assigned in scanline order (by row, then column).  Each
    cell is a closed walk; consecutive cell corners become edges.
    """
    cells = [tuple(cell) for cell in cells]
    points = sorted({p for cell in cells for p in cell})
    index = {p: i for i, p in enumerate(points)}
    edges = set()
    for cell in cells:
        for a, b in zip(cell, cell[1:] + cell[:1]):
            edges.add(edge_key(index[a], index[b]))
    coords = {
        index[(i, x)]: (Fraction(x), Fraction(i)) for (i, x) in points
    }
    return Graph(len(points), tuple(sorted(edges)), coords)


def _triangular_cells(rows: int, cols: int):
    # Row i sits at y=i with vertices at x = j + i/2; faces alternate
    # up/down along each strip.  Positions are kept as (row, 2*x) integers.
    for i in range(rows):
        for k in range(cols):
            j = k // 2
            if k % 2 == 0:
                yield (
                    (i, 2 * j + i),
                    (i, 2 * (j + 1) + i),
                    (i + 1, 2 * j + i + 1),
                )
            else:
                yield (
                    (i, 2 * (j + 1) + i),
                    (i + 1, 2 * j + i + 1),
                    (i + 1, 2 * (j + 1) + i + 1),
                )


def _hexagonal_cells(rows: int, cols: int):
    # Brick-wall representation: hexagon (r, c) spans grid columns
    # 2c+o .. 2c+o+2 with o = r % 2, rows r and r+1.
    for r in range(rows):
        o = r % 2
        for c in range(cols):
            a = 2 * c + o
            yield (
                (r, a),
                (r, a + 1),
                (r, a + 2),
                (r + 1, a + 2),
                (r + 1, a + 1),
                (r + 1, a),
            )


def _square_grid(rows: int, cols: int) -> Graph:
    def vid(r, c):
        return r * (cols + 1) + c

    edges = []
    coords = {}
    for r in range(rows + 1):
        for c in range(cols + 1):
            coords[vid(r, c)] = (Fraction(c), Fraction(r))
            if c < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return build_graph((rows + 1) * (cols + 1), edges, coords)


def _octagonal_square_grid(rows: int, cols: int) -> Graph:
    # Truncated-square (4.8.8) tiling: a (rows+1) x (cols+1) array of small
    # diamonds (one per octagon corner junction) joined by unit connectors;
    # octagon faces are the rows x cols cells between them.
    positions: Dict[Tuple[int, int], Tuple[int, int]] = {}

    def pos(i, j, role):
        if role == "W":
            return (3 * j - 1, 3 * i)
        if role == "E":
            return (3 * j + 1, 3 * i)
        if role == "N":
            return (3 * j, 3 * i + 1)
        return (3 * j, 3 * i - 1)  # S

    raw_edges = []
    for i in range(rows + 1):
        for j in range(cols + 1):
            w, n, e, s = (pos(i, j, r) for r in "WNES")
            raw_edges += [(w, n), (n, e), (e, s), (s, w)]
            if j < cols:
                raw_edges.append((e, pos(i, j + 1, "W")))
            if i < rows:
                raw_edges.append((n, pos(i + 1, j, "S")))
    points = sorted({p for e in raw_edges for p in e}, key=lambda p: (p[1], p[0]))
    index = {p: i for i, p in enumerate(points)}
    edges = [edge_key(index[a], index[b]) for a, b in raw_edges]
    coords = {index[(x, y)]: (Fraction(x), Fraction(y)) for (x, y) in points}
    return build_graph(len(points), edges, coords)


def _square_triangle_grid(rows: int, cols: int) -> Graph:
    # Elongated triangular tiling (3.3.3.4.4): horizontal vertex rows with
    # alternating triangle bands (even) and square bands (odd) between them.
    def offset(i):
        return Fraction((i + 1) // 2, 2)

    def vid(i, j):
        return i * (cols + 1) + j

    edges = []
    coords = {}
    for i in range(rows + 1):
        for j in range(cols + 1):
            coords[vid(i, j)] = (Fraction(j) + offset(i), Fraction(i))
            if j < cols:
                edges.append((vid(i, j), vid(i, j + 1)))
    for i in range(rows):
        for j in range(cols + 1):
            if i % 2 == 0:
                edges.append((vid(i, j), vid(i + 1, j)))
                if j >= 1:
                    edges.append((vid(i, j), vid(i + 1, j - 1)))
            else:
                edges.append((vid(i, j), vid(i + 1, j)))
    return build_graph((rows + 1) * (cols + 1), edges, coords)


def generate_grid(spec: GridSpec) -> Graph:
    """Generate a connected planar grid patch with exact coordinates.

    Face counts follow the spec's ``rows``/``cols``; internal vertex degrees
    are 6 (triangular), 4 (square), 3 (hexagonal, octagonal-square) and
    5 (square-triangle).
    """
    if spec.kind is GridKind.TRIANGULAR:
        g = _graph_from_cells(_triangular_cells(spec.rows, spec.cols))
        # stored x positions are doubled to stay integral; halve them back
        coords = {v: (x / 2, y) for v, (x, y) in g.coords.items()}
        return Graph(g.n, g.edges, coords)
    if spec.kind is GridKind.HEXAGONAL:
        return _graph_from_cells(_hexagonal_cells(spec.rows, spec.cols))
    if spec.kind is GridKind.SQUARE:
        return _square_grid(spec.rows, spec.cols)
    if spec.kind is GridKind.OCTAGONAL_SQUARE:
        return _octagonal_square_grid(spec.rows, spec.cols)
    if spec.kind is GridKind.SQUARE_TRIANGLE:
        return _square_triangle_grid(spec.rows, spec.cols)
    raise ValidationError(f"unknown grid kind {spec.kind!r}")


def gadget_k4_cycle() -> Tuple[Graph, EdgeLabeling]:
    """K4 with a spanning 4-cycle labeled near and both diagonals far.

    No threshold coloring realizes this labeling for any range or threshold.
    """
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    labeling = EdgeLabeling.from_sets(
        near=[(0, 1), (1, 2), (2, 3), (0, 3)],
        far=[(0, 2), (1, 3)],
    )
    return g, labeling


def gadget_triangular() -> Tuple[Graph, EdgeLabeling]:
    """The 6-vertex triangular-grid gadget with no threshold coloring.

    Vertices 0,1,2 form a far triangle; outer vertex ``3+i`` is joined by
    near edges to triangle vertices ``(i+1) % 3`` and ``(i+2) % 3``.
    """
    far = [(0, 1), (1, 2), (0, 2)]
    near = []
    for i in range(3):
        near.append(tuple(sorted((3 + i, (i + 1) % 3))))
        near.append(tuple(sorted((3 + i, (i + 2) % 3))))
    g = build_graph(6, far + near)
    return g, EdgeLabeling.from_sets(near=near, far=far)


# Vertex ids for the square-triangle gadget, in the naming used throughout
# the docs: v0=0, v1=1, v2=2, u0=3, x=4, y=5.
SQUARE_TRIANGLE_GADGET_NEAR = ((0, 1), (0, 4), (1, 2), (2, 5), (3, 4), (3, 5))
SQUARE_TRIANGLE_GADGET_FAR = ((1, 4), (4, 5), (1, 5))


def gadget_square_triangle() -> Tuple[Graph, EdgeLabeling]:
    """The square-triangle-grid counterexample gadget.

    Vertices v1, x, y (ids 1, 4, 5) form a far triangle; each of the pairs
    (v1,x), (v1,y), (x,y) additionally has a private common neighbor joined
    to both by near edges: v0 (id 0) for (v1,x), v2 (id 2) for (v1,y) and
    u0 (id 3) for (x,y).  Whichever two of the far triple end up extreme,
    their shared near neighbor forces their colors within 2t of each other
    while the two far edges between them force a gap above 2t, so no
    coloring exists for any range or threshold.
    """
    g = build_graph(
        6, SQUARE_TRIANGLE_GADGET_NEAR + SQUARE_TRIANGLE_GADGET_FAR
    )
    labeling = EdgeLabeling.from_sets(
        near=SQUARE_TRIANGLE_GADGET_NEAR, far=SQUARE_TRIANGLE_GADGET_FAR
    )
    return g, labeling
