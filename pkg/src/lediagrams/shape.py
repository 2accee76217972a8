"""Polyomino shapes, their classification and structural decompositions.

Coordinates are 1-based ``(row, col)`` with row 1 on top, for English and
French Young diagrams alike; "bottom row" is always the largest row index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from ._kernels import HOLE

Cell = tuple[int, int]
Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and return a partition as a tuple of positive, weakly decreasing parts."""
    p = tuple(int(x) for x in parts)
    for x in p:
        if x <= 0:
            raise ValueError(f"partition parts must be positive: {p}")
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"partition must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text or text in ("()", "0"):
        return ()
    return as_partition(int(x) for x in text.strip("()").split(","))


@dataclass(frozen=True)
class Shape:
    """A finite set of cells, translated so that its minimal row and column are 1."""

    cells: frozenset

    def __init__(self, cells: Iterable[Cell] = ()):
        cs = {(int(r), int(c)) for r, c in cells}
        if cs:
            r0 = min(r for r, _ in cs)
            c0 = min(c for _, c in cs)
            cs = {(r - r0 + 1, c - c0 + 1) for r, c in cs}
        object.__setattr__(self, "cells", frozenset(cs))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells)

    @property
    def sorted_cells(self) -> list[Cell]:
        """Cells in row-major order; this order indexes filling bits."""
        return sorted(self.cells)

    @property
    def nrows(self) -> int:
        return max((r for r, _ in self.cells), default=0)

    @property
    def ncols(self) -> int:
        return max((c for _, c in self.cells), default=0)

    def row(self, r: int) -> list[int]:
        return sorted(c for rr, c in self.cells if rr == r)

    def column(self, c: int) -> list[int]:
        return sorted(r for r, cc in self.cells if cc == c)

    def row_lengths(self) -> list[int]:
        return [len(self.row(r)) for r in range(1, self.nrows + 1)]

    def template(self) -> tuple[bytearray, int, int]:
        """Kernel grid with 0 on cells and HOLE elsewhere."""
        nr, nc = self.nrows, self.ncols
        g = bytearray([HOLE]) * (nr * nc)
        for r, c in self.cells:
            g[(r - 1) * nc + c - 1] = 0
        return g, nr, nc

    def __repr__(self):
        return f"Shape({render_shape(self)!r})"


def young_shape(parts: Iterable[int], french: bool = False) -> Shape:
    """Young diagram of a partition, in English notation unless ``french``."""
    p = as_partition(parts)
    k = len(p)
    rows = range(1, k + 1)
    if french:
        return Shape((k + 1 - i, c) for i, n in zip(rows, p) for c in range(1, n + 1))
    return Shape((i, c) for i, n in zip(rows, p) for c in range(1, n + 1))


def shape_from_column_heights(heights: Sequence[int], top: bool = False) -> Shape:
    """Columns of given heights, bottom-aligned (French) or top-aligned (stalactite)."""
    if any(h <= 0 for h in heights):
        raise ValueError("column heights must be positive")
    n = max(heights, default=0)
    if top:
        return Shape((r, c) for c, h in enumerate(heights, 1) for r in range(1, h + 1))
    return Shape((r, c) for c, h in enumerate(heights, 1) for r in range(n - h + 1, n + 1))


def parse_shape(text: str) -> Shape:
    """Read a ``#``/``.`` grid, rows top to bottom."""
    if text == "":
        return Shape()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    cells = []
    for r, line in enumerate(lines, 1):
        for c, ch in enumerate(line.rstrip("\r"), 1):
            if ch == "#":
                cells.append((r, c))
            elif ch != ".":
                raise ValueError(f"invalid character {ch!r} at row {r}, column {c}")
    if not cells:
        raise ValueError("grid has no cells; use the empty string for the empty shape")
    return Shape(cells)


def render_shape(s: Shape) -> str:
    lines = []
    for r in range(1, s.nrows + 1):
        lines.append("".join("#" if (r, c) in s.cells else "." for c in range(1, s.ncols + 1)).rstrip("."))
    return "\n".join(lines)


# -- classification ----------------------------------------------------------

@dataclass(frozen=True)
class ShapeClass:
    young_english: bool
    young_french: bool
    le_complete: bool
    stalactite: bool
    columns_meet_bottom: bool


def _young(s: Shape, increasing: bool) -> bool:
    lengths = []
    for r in range(1, s.nrows + 1):
        cols = s.row(r)
        if cols != list(range(1, len(cols) + 1)) or not cols:
            return False
        lengths.append(len(cols))
    pairs = zip(lengths, lengths[1:])
    return all(a <= b for a, b in pairs) if increasing else all(a >= b for a, b in pairs)


def is_le_complete(s: Shape) -> bool:
    """(j,k), (j,l), (i,l) in S with i < j, k < l forces (i,k) in S."""
    cells = s.cells
    for (j, k) in cells:
        for l in s.row(j):
            if l <= k:
                continue
            for i in s.column(l):
                if i < j and (i, k) not in cells:
                    return False
    return True


def is_le_complete_intro(s: Shape) -> bool:
    """Mirror-image variant: (j,k), (j,l), (i,k) in S forces (i,l) in S.

    Kept for documentation only; the algorithms use ``is_le_complete``.
    """
    cells = s.cells
    for (j, k) in cells:
        for l in s.row(j):
            if l <= k:
                continue
            for i in s.column(k):
                if i < j and (i, l) not in cells:
                    return False
    return True


def is_stalactite(s: Shape) -> bool:
    for c in range(1, s.ncols + 1):
        rows = s.column(c)
        if rows and rows != list(range(1, len(rows) + 1)):
            return False
    return True


def columns_meet_bottom(s: Shape) -> bool:
    b = s.nrows
    return all((b, c) in s.cells for c in {c for _, c in s.cells})


def classify(s: Shape) -> ShapeClass:
    return ShapeClass(
        young_english=_young(s, increasing=False),
        young_french=_young(s, increasing=True),
        le_complete=is_le_complete(s),
        stalactite=is_stalactite(s),
        columns_meet_bottom=columns_meet_bottom(s),
    )


def is_permuted_french(s: Shape) -> bool:
    """Whether sorting the rows of ``s`` (cells kept per row) by length gives a French diagram.

    The bottom row stays in place; only the rows above it are reordered.
    """
    if not s.cells:
        return True
    b = s.nrows
    rows = [s.row(r) for r in range(1, b)]
    rows.sort(key=len)
    cells = [(i, c) for i, cols in enumerate(rows, 1) for c in cols]
    cells += [(b, c) for c in s.row(b)]
    return _young(Shape(cells), increasing=True) and Shape(cells).nrows == b


def is_connected(s: Shape) -> bool:
    if not s.cells:
        return True
    start = next(iter(s.cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in s.cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(s.cells)


# -- decompositions ----------------------------------------------------------

def bottom_anchored_subshape(s: Shape) -> Shape:
    """S': the cells of every column that reaches the bottom row."""
    if not s.cells:
        raise ValueError("empty shape has no bottom row")
    if not is_le_complete(s):
        raise ValueError("shape is not ⌐-complete")
    b = s.nrows
    keep = set(s.row(b))
    return Shape((r, c) for r, c in s.cells if c in keep)


@dataclass(frozen=True)
class RectangleDecomposition:
    """Anchor columns ``C_i`` (increasing) and the rectangles ``R_i`` they induce."""

    anchors: tuple[int, ...]
    rectangles: tuple[frozenset, ...]

    def band_of(self, col: int) -> int:
        """1-based index of the band (previous anchor, anchor] containing ``col``."""
        for i, a in enumerate(self.anchors, 1):
            if col <= a:
                return i
        raise ValueError(f"column {col} lies beyond the last anchor")


def rectangle_decomposition(s: Shape) -> RectangleDecomposition:
    if not s.cells:
        return RectangleDecomposition((), ())
    info = classify(s)
    if not (info.le_complete and info.columns_meet_bottom):
        raise ValueError("rectangle decomposition needs a ⌐-complete shape whose columns meet the bottom row")
    cols = sorted({c for _, c in s.cells})
    rowsets = [frozenset(s.column(c)) for c in cols]
    for a, b in zip(rowsets, rowsets[1:]):
        if not b <= a:
            raise ValueError("column row sets are not nested")
    anchors = [c for i, c in enumerate(cols) if i == len(cols) - 1 or rowsets[i] != rowsets[i + 1]]
    rects = []
    for a in anchors:
        rows = rowsets[cols.index(a)]
        rects.append(frozenset((r, c) for r in rows for c in cols if c <= a))
    return RectangleDecomposition(tuple(anchors), tuple(rects))


def corners(p: Sequence[int]) -> list[Cell]:
    p = as_partition(p)
    return [(i, n) for i, n in enumerate(p, 1) if i == len(p) or p[i] < n]


def _strip(parts: Iterable[int]) -> Partition:
    return tuple(x for x in parts if x > 0)


def corner_removals(p: Sequence[int], x: Cell) -> tuple[Partition, Partition, Partition, Partition]:
    """The four partitions obtained by deleting box ``x``, its row, its column, or both."""
    p = as_partition(p)
    r, c = x
    if x not in corners(p):
        raise ValueError(f"{x} is not a corner of {p}")
    lam1 = _strip(n - 1 if i == r else n for i, n in enumerate(p, 1))
    lam2 = tuple(n for i, n in enumerate(p, 1) if i != r)
    lam3 = _strip(n - 1 if i <= r else n for i, n in enumerate(p, 1))
    lam4 = _strip(n - 1 if i < r else n for i, n in enumerate(p, 1) if i != r)
    return lam1, lam2, lam3, lam4


def last_corner(p: Sequence[int]) -> Cell:
    """The bottom-most (hence right-most) corner, the one the recurrences use."""
    return corners(p)[-1]


# -- enumeration --------------------------------------------------------------

MAX_BOX_AREA = 20


def enumerate_le_complete(max_rows: int, max_cols: int) -> Iterator[Shape]:
    """Every normalized, connected, ⌐-complete shape inside the box.

    Subsets are visited by increasing bitmask over row-major box cells.
    """
    area = max_rows * max_cols
    if area > MAX_BOX_AREA:
        raise ValueError(f"box area {area} exceeds {MAX_BOX_AREA}")
    box = list(product(range(1, max_rows + 1), range(1, max_cols + 1)))
    for mask in range(1, 1 << area):
        cells = [box[i] for i in range(area) if mask >> i & 1]
        if min(r for r, _ in cells) != 1 or min(c for _, c in cells) != 1:
            continue
        s = Shape(cells)
        if is_connected(s) and is_le_complete(s):
            yield s


def partitions_up_to(max_cells: int, min_cells: int = 1) -> Iterator[Partition]:
    """All partitions of n for min_cells <= n <= max_cells, n increasing."""

    def parts(n: int, cap: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in parts(n - first, first):
                yield (first,) + rest

    for n in range(min_cells, max_cells + 1):
        yield from parts(n, n)


@dataclass(frozen=True)
class BorderedShape:
    """Young diagram with ``k`` rows, some possibly empty; its length is ``k + parts[0]``."""

    k: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1 or len(self.parts) != self.k:
            raise ValueError("need k >= 1 rows and exactly k parts")
        if any(x < 0 for x in self.parts) or any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing and nonnegative: {self.parts}")

    @property
    def length(self) -> int:
        return self.k + self.parts[0]

    @property
    def empty_rows(self) -> int:
        return sum(1 for x in self.parts if x == 0)

    @property
    def shape(self) -> Shape:
        return young_shape(_strip(self.parts))


def bordered_shapes(n: int) -> Iterator[BorderedShape]:
    """All bordered shapes of length n: k rows with first part n - k."""
    def tails(count: int, cap: int):
        if count == 0:
            yield ()
            return
        for x in range(cap, -1, -1):
            for rest in tails(count - 1, x):
                yield (x,) + rest

    for k in range(1, n + 1):
        first = n - k
        for rest in tails(k - 1, first):
            yield BorderedShape(k, (first,) + rest)
