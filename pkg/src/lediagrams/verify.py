"""Exhaustive invariant checks, shared by the ``verify`` command and the tests.

Each check walks its shapes smallest first and stops at the first failure,
so the reported witness is a smallest one in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Iterator

from ._kernels import kernel
from .bijection import bijection_sweep
from .census import equinumerosity_report, f_polynomial, stirling_table, StirlingMismatch
from .filling import (
    Filling,
    PatternClass,
    avoiding_codes,
    avoids,
    count,
    count_by_ones,
    is_le_diagram,
    xstruct_conditions,
)
from .graph import chromatic_recurrence_check, count_acyclic_orientations, graph_from_shape
from .shape import (
    Shape,
    enumerate_le_complete,
    partitions_up_to,
    render_shape,
    shape_from_column_heights,
    young_shape,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None


def young_shapes(max_cells: int) -> Iterator[Shape]:
    for p in partitions_up_to(max_cells):
        yield young_shape(p)


def _describe(s: Shape) -> str:
    return render_shape(s).replace("\n", "/")


def _run(name: str, shapes: Iterable[Shape], probe: Callable[[Shape], str | None]) -> CheckResult:
    n = 0
    for s in shapes:
        n += 1
        problem = probe(s)
        if problem:
            return CheckResult(name, n, f"shape {_describe(s)}: {problem}")
    return CheckResult(name, n)


def _sweep_probe(dual: bool):
    def probe(s: Shape) -> str | None:
        r = bijection_sweep(s, dual=dual)
        if r.ok:
            return None
        w = "" if r.witness is None else f" on {_describe_filling(r.witness)}"
        return f"{r.failure}{w} (X={r.n_x}, LE={r.n_le}, images={r.n_images})"
    return probe


def _describe_filling(f: Filling) -> str:
    from .filling import render_filling
    return render_filling(f).replace("\n", "/")


def check_phi(shapes: Iterable[Shape]) -> CheckResult:
    return _run("Phi bijection", shapes, _sweep_probe(False))


def check_phi2(shapes: Iterable[Shape]) -> CheckResult:
    return _run("Phi2 bijection", shapes, _sweep_probe(True))


def check_equinumerosity(shapes: Iterable[Shape]) -> CheckResult:
    def probe(s):
        r = equinumerosity_report(s)
        return "; ".join(r.mismatches) or None
    return _run("LE/X/ALT equinumerosity", shapes, probe)


def check_recurrence(max_cells: int) -> CheckResult:
    def probe(s):
        p = tuple(s.row_lengths())
        rec = f_polynomial(p)
        brute = count_by_ones(s, PatternClass.LE)
        return None if rec == brute else f"recurrence {rec} vs enumeration {brute}"
    return _run("F recurrence vs enumeration", young_shapes(max_cells), probe)


def check_corner_independence(max_cells: int) -> CheckResult:
    from .census import f_polynomial_at
    from .shape import corners

    def probe(s):
        p = tuple(s.row_lengths())
        cs = corners(p)
        if len(cs) < 2:
            return None
        values = {f_polynomial_at(p, c) for c in cs}
        return None if len(values) == 1 else f"corners give {sorted(map(str, values))}"
    return _run("recurrence corner independence", young_shapes(max_cells), probe)


def check_orientations(max_cells: int) -> CheckResult:
    def probe(s):
        g, nr, nc = s.template()
        total, n_x, n_ac, mismatch = kernel.orientation_sweep(g, nr, nc)
        if mismatch >= 0:
            return f"filling {_describe_filling(Filling.from_code(s, mismatch))}: X-avoidance != acyclicity"
        p = tuple(s.row_lengths())
        ao = count_acyclic_orientations(graph_from_shape(p))
        f1 = f_polynomial(p)(1)
        if not n_x == ao == f1:
            return f"X={n_x}, ao={ao}, F(1)={f1}"
        return None
    return _run("X-diagrams = acyclic orientations", young_shapes(max_cells), probe)


def check_chromatic_recurrence(max_cells: int, convention: str = "fixed") -> CheckResult:
    def probe(s):
        r = chromatic_recurrence_check(tuple(s.row_lengths()), convention=convention)
        if not r.holds:
            return f"lhs {r.lhs} != rhs {r.rhs}"
        if not r.bridge:
            return f"F(1)={r.f_at_1} != ao={r.ao}"
        return None
    return _run(f"chromatic recurrence ({convention} box)", young_shapes(max_cells), probe)


def check_le_definition(shapes: Iterable[Shape]) -> CheckResult:
    """Verbal definition vs pattern avoidance over every filling."""
    def probe(s):
        for code in range(1 << len(s)):
            f = Filling.from_code(s, code)
            if is_le_diagram(f) != avoids(f, PatternClass.LE):
                return f"filling {_describe_filling(f)}"
        return None
    return _run("Le definition = LE avoidance", shapes, probe)


def distinct_permutations(items: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of a multiset, in lexicographic order."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def stalactite_multisets(max_cells: int) -> Iterator[tuple[int, ...]]:
    """Column-length multisets (as partitions) of stalactite shapes."""
    yield from partitions_up_to(max_cells)


def check_stalactite(max_cells: int) -> CheckResult:
    def shapes():
        for heights in stalactite_multisets(max_cells):
            yield shape_from_column_heights(heights, top=True)

    def probe(s):
        heights = tuple(len(s.column(c)) for c in range(1, s.ncols + 1))
        ref = None
        for perm in distinct_permutations(heights):
            t = shape_from_column_heights(perm, top=True)
            counts = (count(t, PatternClass.X), count(t, PatternClass.LE))
            if ref is None:
                ref = counts
            elif counts != ref:
                return f"columns {perm} give X/LE {counts}, columns {heights} give {ref}"
        return None
    return _run("stalactite column-order invariance", shapes(), probe)


def check_stirling(max_n: int) -> CheckResult:
    checked = 0
    for n in range(1, max_n + 1):
        checked += 1
        try:
            stirling_table(n)
        except StirlingMismatch as exc:
            return CheckResult("Stirling census", checked, str(exc))
    return CheckResult("Stirling census", checked)


def _rows_of(code: int, nr: int, nc: int) -> tuple[int, ...]:
    mask = (1 << nc) - 1
    return tuple(code >> (i * nc) & mask for i in range(nr))


def _code_of(rows: Iterable[int], nc: int) -> int:
    return sum(r << (i * nc) for i, r in enumerate(rows))


def check_x_characterizations(max_rows: int = 4, max_cols: int = 4) -> CheckResult:
    """Agreement of the four X characterizations and row closure on every filling of every rectangle.

    Closure: permuting rows, or overwriting a row by a copy of another,
    keeps an X-diagram an X-diagram; X-avoidance only depends on the set
    of distinct rows.
    """
    checked = 0
    for nr in range(1, max_rows + 1):
        for nc in range(1, max_cols + 1):
            s = young_shape([nc] * nr)
            xs = set(avoiding_codes(s, PatternClass.X))
            by_row_set: dict[frozenset, bool] = {}
            for code in range(1 << (nr * nc)):
                checked += 1
                f = Filling.from_code(s, code)
                where = f"{nr}x{nc} filling {_describe_filling(f)}"
                xst = xstruct_conditions(f)
                if not xst.agree() or xst.avoids_x != (code in xs):
                    return CheckResult("X characterizations and row closure", checked, f"{where}: {xst}")
                rows = _rows_of(code, nr, nc)
                key = frozenset(rows)
                if by_row_set.setdefault(key, code in xs) != (code in xs):
                    return CheckResult("X characterizations and row closure", checked, f"{where}: distinct-row set")
                if code not in xs:
                    continue
                for perm in permutations(rows):
                    if _code_of(perm, nc) not in xs:
                        return CheckResult("X characterizations and row closure", checked, f"{where}: row permutation")
                for i in range(nr):
                    for j in range(nr):
                        copy = list(rows)
                        copy[i] = rows[j]
                        if _code_of(copy, nc) not in xs:
                            return CheckResult("X characterizations and row closure", checked, f"{where}: row copy")
    return CheckResult("X characterizations and row closure", checked)


def run_all(max_cells: int, box: tuple[int, int] | None = (4, 4)) -> list[CheckResult]:
    small = min(max_cells, 14)
    lec = list(enumerate_le_complete(*box)) if box else []
    young = list(young_shapes(max_cells))
    return [
        check_phi(young + lec),
        check_phi2(young + lec),
        check_equinumerosity(list(young_shapes(min(max_cells, 16))) + lec),
        check_recurrence(small),
        check_corner_independence(min(max_cells, 10)),
        check_orientations(small),
        check_chromatic_recurrence(min(max_cells, 12)),
        check_le_definition(young_shapes(min(max_cells, 8))),
        check_stalactite(min(max_cells, 14)),
        check_stirling(6),
        check_x_characterizations(3, 4),
    ]
