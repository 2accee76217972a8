"""0/1 fillings of shapes, 2x2 pattern avoidance and diagram statistics."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple

from ._kernels import HOLE, kernel
from .polynomial import IntPolynomial
from .shape import Cell, Shape, classify

MAX_ENUM_CELLS = 22


@dataclass(frozen=True)
class Pattern:
    """The 2x2 matrix ``[[a, b], [c, d]]``; its digit string is ``"abcd"``."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def parse(cls, digits: str) -> Pattern:
        if len(digits) != 4 or set(digits) - {"0", "1"}:
            raise ValueError(f"pattern must be four binary digits, got {digits!r}")
        return cls(*(int(ch) for ch in digits))

    @classmethod
    def from_code(cls, code: int) -> Pattern:
        return cls(code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1)

    @property
    def code(self) -> int:
        return self.a << 3 | self.b << 2 | self.c << 1 | self.d

    def __str__(self):
        return f"{self.a}{self.b}{self.c}{self.d}"


class PatternClass(enum.Enum):
    LE = ("1110", "0110")
    X = ("1001", "0110")
    ALT = ("0111", "1111")

    @property
    def patterns(self) -> frozenset[Pattern]:
        return frozenset(Pattern.parse(p) for p in self.value)

    @property
    def mask(self) -> int:
        m = 0
        for p in self.patterns:
            m |= 1 << p.code
        return m

    @classmethod
    def parse(cls, name: str) -> PatternClass:
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown pattern class {name!r}; expected le, x or alt") from None


class Filling:
    """A shape together with one bit per cell.

    Bits are stored in row-major cell order, so equal fillings compare and
    hash equal.
    """

    __slots__ = ("shape", "bits", "_hash")

    def __init__(self, shape: Shape, bits: Mapping[Cell, int] | Iterable[int]):
        cells = shape.sorted_cells
        if isinstance(bits, Mapping):
            if set(bits) != shape.cells:
                raise ValueError("filling domain differs from the shape's cells")
            seq = tuple(int(bits[c]) for c in cells)
        else:
            seq = tuple(int(b) for b in bits)
            if len(seq) != len(cells):
                raise ValueError(f"expected {len(cells)} bits, got {len(seq)}")
        if any(b not in (0, 1) for b in seq):
            raise ValueError("bits must be 0 or 1")
        self.shape = shape
        self.bits = seq
        self._hash = None

    @classmethod
    def from_code(cls, shape: Shape, code: int) -> Filling:
        return cls(shape, (code >> k & 1 for k in range(len(shape))))

    @classmethod
    def from_grid(cls, shape: Shape, g, nc: int) -> Filling:
        return cls(shape, (g[(r - 1) * nc + c - 1] for r, c in shape.sorted_cells))

    @classmethod
    def zeros(cls, shape: Shape) -> Filling:
        return cls(shape, [0] * len(shape))

    @classmethod
    def ones(cls, shape: Shape) -> Filling:
        return cls(shape, [1] * len(shape))

    @property
    def code(self) -> int:
        out = 0
        for k, b in enumerate(self.bits):
            out |= b << k
        return out

    def as_dict(self) -> dict[Cell, int]:
        return dict(zip(self.shape.sorted_cells, self.bits))

    def __getitem__(self, cell: Cell) -> int:
        return self.as_dict()[cell]

    def grid(self) -> tuple[bytearray, int, int]:
        g, nr, nc = self.shape.template()
        for (r, c), b in zip(self.shape.sorted_cells, self.bits):
            g[(r - 1) * nc + c - 1] = b
        return g, nr, nc

    def rows(self) -> list[list[int | None]]:
        """Dense matrix view, ``None`` on holes."""
        g, nr, nc = self.grid()
        return [[None if g[r * nc + c] == HOLE else g[r * nc + c] for c in range(nc)] for r in range(nr)]

    def __eq__(self, other):
        if not isinstance(other, Filling):
            return NotImplemented
        return self.shape == other.shape and self.bits == other.bits

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.bits))
        return self._hash

    def __repr__(self):
        return f"Filling({render_filling(self)!r})"


def parse_filling(text: str) -> Filling:
    """Read a ``0``/``1``/``.`` grid, rows top to bottom; trailing holes may be omitted."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    bits: dict[Cell, int] = {}
    for r, line in enumerate(lines, 1):
        for c, ch in enumerate(line.rstrip("\r"), 1):
            if ch in "01":
                bits[(r, c)] = int(ch)
            elif ch != ".":
                raise ValueError(f"invalid character {ch!r} at row {r}, column {c}")
    if not bits:
        return Filling(Shape(), [])
    r0 = min(r for r, _ in bits)
    c0 = min(c for _, c in bits)
    shifted = {(r - r0 + 1, c - c0 + 1): b for (r, c), b in bits.items()}
    return Filling(Shape(shifted), shifted)


def filling_from_rows(rows: Iterable[str]) -> Filling:
    return parse_filling("\n".join(rows))


def render_filling(f: Filling) -> str:
    out = []
    for row in f.rows():
        out.append("".join("." if b is None else str(b) for b in row).rstrip("."))
    return "\n".join(out)


# -- pattern avoidance ------------------------------------------------------------

class Violation(NamedTuple):
    r1: int
    r2: int
    c1: int
    c2: int
    pattern: Pattern


def find_violation(f: Filling, pc: PatternClass) -> Violation | None:
    """Least (r1, r2, c1, c2) whose full 2x2 submatrix matches a pattern of ``pc``."""
    g, nr, nc = f.grid()
    hit = kernel.violation(g, nr, nc, pc.mask)
    if hit is None:
        return None
    r1, r2, c1, c2, code = hit
    return Violation(r1 + 1, r2 + 1, c1 + 1, c2 + 1, Pattern.from_code(code))


def avoids(f: Filling, pc: PatternClass) -> bool:
    return find_violation(f, pc) is None


def is_le_diagram(f: Filling) -> bool:
    """Every 0 has only 0s to its left in its row, or only 0s above it in its column."""
    d = f.as_dict()
    for (r, c), b in d.items():
        if b:
            continue
        left = any(d[(r, cc)] for cc in range(1, c) if (r, cc) in d)
        above = any(d[(rr, c)] for rr in range(1, r) if (rr, c) in d)
        if left and above:
            return False
    return True


@dataclass(frozen=True)
class Statistics:
    zero_rows: frozenset[int]
    zero_columns: frozenset[int]
    restricted_rows: frozenset[int]
    unrestricted_rows: frozenset[int]
    ones: int


def statistics(f: Filling, nrows: int | None = None) -> Statistics:
    """Row and column statistics; ``nrows`` adds empty trailing rows (zero and unrestricted)."""
    n = f.shape.nrows if nrows is None else nrows
    if n < f.shape.nrows:
        raise ValueError("nrows is smaller than the shape")
    d = f.as_dict()
    rows = range(1, n + 1)
    cols = range(1, f.shape.ncols + 1)
    zero_rows = frozenset(r for r in rows if not any(b for (rr, _), b in d.items() if rr == r))
    zero_cols = frozenset(c for c in cols if not any(b for (_, cc), b in d.items() if cc == c))
    restricted = set()
    for (r, c), b in d.items():
        if b == 0 and any(d.get((rr, c), 0) for rr in range(1, r)):
            restricted.add(r)
    return Statistics(
        zero_rows=zero_rows,
        zero_columns=zero_cols,
        restricted_rows=frozenset(restricted),
        unrestricted_rows=frozenset(rows) - restricted,
        ones=sum(f.bits),
    )


def is_mixed(f: Filling) -> bool:
    """Top rows avoid X, and no bottom 0 has both a 1 above it and a 1 to its left."""
    if not classify(f.shape).le_complete:
        raise ValueError("mixed diagrams are defined on ⌐-complete shapes")
    if not f.shape.cells:
        return True
    b = f.shape.nrows
    d = f.as_dict()
    if not upper_rows_avoid(f, PatternClass.X):
        return False
    for c in f.shape.row(b):
        if d[(b, c)]:
            continue
        above = any(d.get((r, c), 0) for r in range(1, b))
        left = any(d.get((b, cc), 0) for cc in range(1, c))
        if above and left:
            return False
    return True


def upper_rows_avoid(f: Filling, pc: PatternClass) -> bool:
    """Whether every row but the bottom one, taken together, avoids ``pc``."""
    b = f.shape.nrows
    if b <= 1:
        return True
    g, nr, nc = _grid_on(f.as_dict(), b - 1, f.shape.ncols)
    return kernel.violation(g, nr, nc, pc.mask) is None


def _grid_on(d: Mapping[Cell, int], nr: int, nc: int) -> tuple[bytearray, int, int]:
    g = bytearray([HOLE]) * (nr * nc)
    for (r, c), b in d.items():
        if r <= nr:
            g[(r - 1) * nc + c - 1] = b
    return g, nr, nc


# -- the four X-diagram characterizations ---------------------------------------

@dataclass(frozen=True)
class XStruct:
    avoids_x: bool
    equal_counts_equal_rows: bool
    nested_row_supports: bool
    max_row_zeros_in_zero_columns: bool

    def agree(self) -> bool:
        return len({self.avoids_x, self.equal_counts_equal_rows,
                    self.nested_row_supports, self.max_row_zeros_in_zero_columns}) == 1


def _subsets(mask: int) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def xstruct_conditions(f: Filling) -> XStruct:
    """Evaluate each characterization separately over all rectangular submatrices.

    A rectangular submatrix is any choice of rows and columns whose every
    crossing cell lies in the shape.
    """
    d = f.as_dict()
    nr, nc = f.shape.nrows, f.shape.ncols
    present = [0] * (nr + 1)
    ones = [0] * (nr + 1)
    for (r, c), b in d.items():
        present[r] |= 1 << c
        if b:
            ones[r] |= 1 << c
    rows = range(1, nr + 1)

    cond2 = True
    cond3 = True
    for i, j in combinations(rows, 2):
        common = present[i] & present[j]
        a, b = ones[i] & common, ones[j] & common
        if a & ~b and b & ~a:
            cond3 = False
        if cond2:
            for cols in _subsets(common):
                x, y = a & cols, b & cols
                if x != y and x.bit_count() == y.bit_count():
                    cond2 = False
                    break
        if not cond2 and not cond3:
            break

    cond4 = True
    all_rows = 0
    for r in rows:
        all_rows |= 1 << r
    for rs in _subsets(all_rows):
        members = [r for r in rows if rs >> r & 1]
        common = ~0
        for r in members:
            common &= present[r]
        if common <= 0:
            continue
        for cols in _subsets(common):
            counts = [(ones[r] & cols).bit_count() for r in members]
            best = max(counts)
            used = 0
            for r in members:
                used |= ones[r] & cols
            for r, k in zip(members, counts):
                if k == best and cols & ~ones[r] & used:
                    cond4 = False
                    break
            if not cond4:
                break
        if not cond4:
            break

    return XStruct(avoids(f, PatternClass.X), cond2, cond3, cond4)


# -- enumeration ---------------------------------------------------------------------

def _guard(s: Shape) -> None:
    if len(s) > MAX_ENUM_CELLS:
        raise ValueError(f"{len(s)} cells exceeds the enumeration bound {MAX_ENUM_CELLS}")


def avoiding_codes(s: Shape, pc: PatternClass) -> list[int]:
    """Codes of the avoiding fillings; bit k is the k-th cell in row-major order."""
    _guard(s)
    if not s.cells:
        return [0]
    g, nr, nc = s.template()
    return kernel.avoiding_codes(g, nr, nc, pc.mask)


def enumerate_fillings(s: Shape, pc: PatternClass, prefix: Iterable[int] = ()) -> Iterator[Filling]:
    """Avoiding fillings in a deterministic order.

    ``prefix`` fixes the bits of the first cells (row-major), which splits
    the stream into disjoint parts for parallel consumers.
    """
    pre = list(prefix)
    mask_bits = sum(b << k for k, b in enumerate(pre))
    low = (1 << len(pre)) - 1
    for code in avoiding_codes(s, pc):
        if code & low == mask_bits:
            yield Filling.from_code(s, code)


def count_by_ones(s: Shape, pc: PatternClass) -> IntPolynomial:
    """Generating polynomial of the avoiding fillings by number of 1s."""
    _guard(s)
    if not s.cells:
        return IntPolynomial([1])
    g, nr, nc = s.template()
    return IntPolynomial(kernel.count_by_ones(g, nr, nc, pc.mask))


def count(s: Shape, pc: PatternClass) -> int:
    return count_by_ones(s, pc)(1)
