"""The bipartite graph of a Young diagram, its orientations and chromatic polynomial.

Row vertices are ``1..k`` and column vertices ``1'..m'``; the cell ``(i, j)``
is the edge ``(i, j')``.  A filling bit 0 orients that edge ``i -> j'`` and
a 1 orients it ``i <- j'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from ._kernels import HOLE, kernel
from .filling import Filling
from .polynomial import IntPolynomial, LaurentPolynomial
from .shape import Partition, as_partition, corner_removals, last_corner, young_shape

MAX_CHROMATIC_EDGES = 24
MAX_ORIENTATION_EDGES = 20
MAX_RECURRENCE_CELLS = 16

Edge = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    k: int
    m: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset((int(i), int(j)) for i, j in self.edges))
        for i, j in self.edges:
            if not (1 <= i <= self.k and 1 <= j <= self.m):
                raise ValueError(f"edge {(i, j)} outside {self.k} x {self.m}")

    @property
    def n_vertices(self) -> int:
        return self.k + self.m

    def with_isolated_row(self) -> BipartiteGraph:
        return BipartiteGraph(self.k + 1, self.m, self.edges)

    def grid(self) -> tuple[bytearray, int, int]:
        """Kernel grid with 0 on edges and HOLE elsewhere."""
        g = bytearray([HOLE]) * (self.k * self.m)
        for i, j in self.edges:
            g[(i - 1) * self.m + j - 1] = 0
        return g, self.k, self.m


@dataclass(frozen=True)
class Orientation:
    graph: BipartiteGraph
    direction: Mapping[Edge, int]

    def __post_init__(self):
        d = {e: int(b) for e, b in dict(self.direction).items()}
        if set(d) != set(self.graph.edges):
            raise ValueError("orientation must give a direction to every edge")
        if any(b not in (0, 1) for b in d.values()):
            raise ValueError("directions must be 0 or 1")
        object.__setattr__(self, "direction", d)

    def arcs(self) -> list[tuple[tuple[str, int], tuple[str, int]]]:
        """Directed arcs between ``("row", i)`` and ``("col", j)`` vertices."""
        out = []
        for (i, j), b in sorted(self.direction.items()):
            r, c = ("row", i), ("col", j)
            out.append((r, c) if b == 0 else (c, r))
        return out


def default_box(p: Sequence[int]) -> tuple[int, int]:
    p = as_partition(p)
    return (len(p), p[0] if p else 0)


def graph_from_shape(p: Sequence[int], box: tuple[int, int] | None = None) -> BipartiteGraph:
    p = as_partition(p)
    k, m = default_box(p) if box is None else box
    if len(p) > k or (p and p[0] > m):
        raise ValueError(f"partition {p} does not fit in a {k} x {m} box")
    return BipartiteGraph(k, m, frozenset((i, j) for i, n in enumerate(p, 1) for j in range(1, n + 1)))


def _check_young_in_box(f: Filling, box: tuple[int, int]) -> Partition:
    lengths = f.shape.row_lengths()
    p = as_partition(lengths)
    if young_shape(p) != f.shape:
        raise ValueError("filling shape is not a Young diagram")
    k, m = box
    if len(p) > k or (p and p[0] > m):
        raise ValueError(f"shape {p} does not fit in a {k} x {m} box")
    return p


def filling_to_orientation(f: Filling, box: tuple[int, int] | None = None) -> Orientation:
    if box is None:
        box = (f.shape.nrows, f.shape.ncols)
    p = _check_young_in_box(f, box)
    return Orientation(graph_from_shape(p, box), f.as_dict())


def orientation_to_filling(o: Orientation) -> Filling:
    cells = o.direction
    if not cells:
        return Filling(young_shape(()), [])
    shape = young_shape(as_partition(
        sum(1 for (i, _) in cells if i == r) for r in range(1, max(i for i, _ in cells) + 1)
    ))
    if shape.cells != frozenset(cells):
        raise ValueError("edges do not form a Young diagram")
    return Filling(shape, cells)


def is_acyclic(o: Orientation) -> bool:
    """Depth-first search for a directed cycle, over all vertices."""
    succ: dict[tuple[str, int], list] = {}
    for u, v in o.arcs():
        succ.setdefault(u, []).append(v)
    white, grey, black = 0, 1, 2
    colour: dict = {}
    for root in list(succ):
        if colour.get(root, white) != white:
            continue
        colour[root] = grey
        stack = [(root, iter(succ.get(root, ())))]
        while stack:
            u, it = stack[-1]
            for v in it:
                cv = colour.get(v, white)
                if cv == grey:
                    return False
                if cv == white:
                    colour[v] = grey
                    stack.append((v, iter(succ.get(v, ()))))
                    break
            else:
                colour[u] = black
                stack.pop()
    return True


# -- chromatic polynomial -----------------------------------------------------------

_T = IntPolynomial.variable()
_T_MINUS_1 = _T - 1


def _components(n: int, edges: frozenset) -> list[tuple[int, frozenset]]:
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        index = {v: i for i, v in enumerate(sorted(comp))}
        sub = frozenset(
            (index[a], index[b]) for a, b in edges if a in index
        )
        out.append((len(comp), sub))
    return out


def _canon(n: int, edges: frozenset) -> tuple[int, frozenset]:
    """Cheap relabelling: order vertices by degree so isomorphic-looking inputs share cache entries."""
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    return n, frozenset(tuple(sorted((pos[a], pos[b]))) for a, b in edges)


@lru_cache(maxsize=None)
def _chrom_connected(n: int, edges: frozenset) -> IntPolynomial:
    if n == 1:
        return _T
    if len(edges) == n - 1:
        return _T * _T_MINUS_1 ** (n - 1)
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    leaf = next((v for v in range(n) if deg[v] == 1), None)
    if leaf is not None:
        rest = frozenset((a - (a > leaf), b - (b > leaf)) for a, b in edges if leaf not in (a, b))
        return _T_MINUS_1 * _chrom(n - 1, rest)
    a, b = max(edges)
    deleted = edges - {(a, b)}
    # contract b into a, coalescing parallel edges
    contracted = set()
    for x, y in deleted:
        x = a if x == b else x
        y = a if y == b else y
        x -= x > b
        y -= y > b
        contracted.add((min(x, y), max(x, y)))
    return _chrom(n, frozenset(deleted)) - _chrom(n - 1, frozenset(contracted))


def _chrom(n: int, edges: frozenset) -> IntPolynomial:
    result = IntPolynomial([1])
    for size, sub in _components(n, edges):
        result = result * _chrom_connected(*_canon(size, sub))
    return result


def chromatic_polynomial(g: BipartiteGraph) -> IntPolynomial:
    """Deletion-contraction with component, tree and leaf shortcuts."""
    if len(g.edges) > MAX_CHROMATIC_EDGES:
        raise ValueError(f"{len(g.edges)} edges exceeds {MAX_CHROMATIC_EDGES}")
    edges = frozenset((i - 1, g.k + j - 1) for i, j in g.edges)
    return _chrom(g.n_vertices, edges)


def count_acyclic_orientations(g: BipartiteGraph) -> int:
    """Count by exhaustive enumeration; cross-checked against the chromatic value at -1."""
    if len(g.edges) > MAX_ORIENTATION_EDGES:
        raise ValueError(f"{len(g.edges)} edges exceeds {MAX_ORIENTATION_EDGES}")
    if not g.edges:
        n_ac = 1
    else:
        grid, k, m = g.grid()
        n_ac = kernel.orientation_sweep(grid, k, m)[2]
    stanley = (-1) ** g.n_vertices * chromatic_polynomial(g)(-1)
    if n_ac != stanley:
        raise AssertionError(f"acyclic orientations {n_ac} != (-1)^n chi(-1) = {stanley}")
    return n_ac


@dataclass(frozen=True)
class RecurrenceReport:
    """Both sides of the chromatic corner recurrence and the value bridge at t = -1."""

    partition: Partition
    box: tuple[int, int]
    convention: str
    lhs: LaurentPolynomial
    rhs: LaurentPolynomial
    f_at_1: int
    ao: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def bridge(self) -> bool:
        return self.f_at_1 == self.ao

    def __bool__(self):
        return self.holds and self.bridge


CONVENTIONS = ("fixed", "shrunk")


def chromatic_recurrence_check(
    p: Sequence[int], box: tuple[int, int] | None = None, convention: str = "fixed"
) -> RecurrenceReport:
    """Evaluate the corner recurrence for chi at the last corner.

    ``fixed`` keeps every term in the same box, so removed rows and columns
    survive as isolated vertices.  ``shrunk`` drops them from the box.
    """
    from .census import f_polynomial

    p = as_partition(p)
    if not p:
        raise ValueError("the recurrence needs a nonempty partition")
    if sum(p) > MAX_RECURRENCE_CELLS:
        raise ValueError(f"{sum(p)} cells exceeds {MAX_RECURRENCE_CELLS}")
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    k, m = default_box(p) if box is None else box
    lams = corner_removals(p, last_corner(p))
    if convention == "fixed":
        boxes = [(k, m)] * 4
    else:
        boxes = [(k, m), (k - 1, m), (k, m - 1), (k - 1, m - 1)]
    chis = [LaurentPolynomial.from_poly(chromatic_polynomial(graph_from_shape(lam, bx)))
            for lam, bx in zip(lams, boxes)]
    g = graph_from_shape(p, (k, m))
    lhs = LaurentPolynomial.from_poly(chromatic_polynomial(g))
    rhs = chis[0] - LaurentPolynomial.monomial(-1) * (chis[1] + chis[2] - chis[3])
    ao = (-1) ** g.n_vertices * chromatic_polynomial(g)(-1)
    return RecurrenceReport(p, (k, m), convention, lhs, rhs, f_polynomial(p)(1), ao)
