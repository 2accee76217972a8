"""Counting: the Le-diagram polynomial, equinumerosity and the Stirling census."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .bijection import Phi2
from .filling import Filling, PatternClass, avoiding_codes, count_by_ones, statistics
from .polynomial import IntPolynomial
from .shape import (
    Cell,
    Partition,
    Shape,
    as_partition,
    bordered_shapes,
    classify,
    corner_removals,
    corners,
    last_corner,
)

MAX_F_CELLS = 40
MAX_REPORT_CELLS = 18
MAX_STIRLING_TABLE = 7
MAX_STIRLING = 10
MAX_CYCLE_ORACLE = 7

_Q = IntPolynomial.variable()


def _recurrence(p: Partition, corner: Cell) -> IntPolynomial:
    l1, l2, l3, l4 = corner_removals(p, corner)
    return _Q * _f(l1) + _f(l2) + _f(l3) - _f(l4)


@lru_cache(maxsize=None)
def _f(p: Partition) -> IntPolynomial:
    if not p:
        return IntPolynomial([1])
    return _recurrence(p, last_corner(p))


def f_polynomial(p: Sequence[int]) -> IntPolynomial:
    """Le-diagrams of shape ``p`` counted by number of 1s, via the corner recurrence."""
    p = as_partition(p)
    if sum(p) > MAX_F_CELLS:
        raise ValueError(f"{sum(p)} cells exceeds {MAX_F_CELLS}")
    return _f(p)


def f_polynomial_at(p: Sequence[int], corner: Cell) -> IntPolynomial:
    """One unrolling of the recurrence at an arbitrary corner (memoized below)."""
    p = as_partition(p)
    if not p:
        return IntPolynomial([1])
    return _recurrence(p, corner)


@dataclass(frozen=True)
class EquinumerosityReport:
    le: int
    x: int
    alt: int
    polynomials: dict = field(default_factory=dict)
    f_poly: IntPolynomial | None = None

    @property
    def mismatches(self) -> list[str]:
        out = []
        if not self.le == self.x == self.alt:
            out.append(f"le={self.le} x={self.x} alt={self.alt}")
        if self.f_poly is not None and self.f_poly != self.polynomials["le"]:
            out.append(f"recurrence {self.f_poly} != enumeration {self.polynomials['le']}")
        return out

    @property
    def ok(self) -> bool:
        return not self.mismatches


def equinumerosity_report(s: Shape) -> EquinumerosityReport:
    if len(s) > MAX_REPORT_CELLS:
        raise ValueError(f"{len(s)} cells exceeds {MAX_REPORT_CELLS}")
    polys = {pc.name.lower(): count_by_ones(s, pc) for pc in PatternClass}
    f_poly = None
    if classify(s).young_english:
        f_poly = f_polynomial(s.row_lengths())
    return EquinumerosityReport(polys["le"](1), polys["x"](1), polys["alt"](1), polys, f_poly)


# -- Stirling numbers -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _stirling(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return _stirling(n - 1, k - 1) + (n - 1) * _stirling(n - 1, k)


@lru_cache(maxsize=None)
def cycle_census(n: int) -> dict[int, int]:
    """Permutations of {1..n} by number of cycles, counted one by one."""
    if n > MAX_CYCLE_ORACLE:
        raise ValueError(f"cycle census limited to n <= {MAX_CYCLE_ORACLE}")
    counts: Counter = Counter()
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for s in range(n):
            if not seen[s]:
                cycles += 1
                while not seen[s]:
                    seen[s] = True
                    s = perm[s]
        counts[cycles] += 1
    return dict(sorted(counts.items()))


def stirling_first_kind(n: int, k: int) -> int:
    """Unsigned Stirling number c(n, k); checked against the cycle census for n <= 7."""
    if not 0 <= n <= MAX_STIRLING:
        raise ValueError(f"n must be in 0..{MAX_STIRLING}")
    value = _stirling(n, k)
    if n <= MAX_CYCLE_ORACLE and k >= 0:
        oracle = cycle_census(n).get(k, 0) if n else (1 if k == 0 else 0)
        if oracle != value:
            raise AssertionError(f"c({n},{k}): recurrence {value} != cycle count {oracle}")
    return value


class StirlingMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class StirlingTable:
    """X-diagrams of length n without zero columns, by number of unrestricted rows.

    ``le_rows`` counts their images under Φ₂, ``le_direct`` counts
    permutation tableaux enumerated independently, ``expected`` holds c(n, k).
    """

    n: int
    rows: dict[int, int]
    le_rows: dict[int, int]
    le_direct: dict[int, int]
    expected: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.rows.values())

    def matches(self) -> bool:
        return self.rows == self.expected == self.le_rows == self.le_direct


def _unrestricted(f: Filling, k: int) -> int:
    return len(statistics(f, nrows=k).unrestricted_rows)


def stirling_table(n: int, check: bool = True) -> StirlingTable:
    if not 1 <= n <= MAX_STIRLING_TABLE:
        raise ValueError(f"n must be in 1..{MAX_STIRLING_TABLE}")
    rows: Counter = Counter()
    le_rows: Counter = Counter()
    le_direct: Counter = Counter()
    for bs in bordered_shapes(n):
        s = bs.shape
        for code in avoiding_codes(s, PatternClass.X):
            f = Filling.from_code(s, code)
            st = statistics(f, nrows=bs.k)
            if st.zero_columns:
                continue
            k = len(st.unrestricted_rows)
            rows[k] += 1
            u = Phi2(f)
            su = statistics(u, nrows=bs.k)
            if su.zero_columns or su.restricted_rows != st.restricted_rows:
                raise StirlingMismatch(f"Phi2 changed statistics on shape {bs.parts}: {f!r} -> {u!r}")
            le_rows[len(su.unrestricted_rows)] += 1
        for code in avoiding_codes(s, PatternClass.LE):
            u = Filling.from_code(s, code)
            st = statistics(u, nrows=bs.k)
            if not st.zero_columns:
                le_direct[len(st.unrestricted_rows)] += 1
    expected = {k: stirling_first_kind(n, k) for k in range(1, n + 1)}
    table = StirlingTable(
        n,
        {k: rows.get(k, 0) for k in expected},
        {k: le_rows.get(k, 0) for k in expected},
        {k: le_direct.get(k, 0) for k in expected},
        expected,
    )
    if check:
        if table.total != factorial(n) or not table.matches():
            raise StirlingMismatch(f"length {n}: table {table}")
    return table
