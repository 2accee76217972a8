"""Pivot columns and the maps between X-diagrams and Le-diagrams.

``phi``/``phi2`` act on the cells of the columns that reach the bottom row;
``Phi``/``Phi2`` apply them to the top ``i`` rows for ``i`` from the last row
up to 1.  Inverses run the other way.  All maps reject inputs outside their
domain with ``ValueError``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import PHI, PHI2, PHI2_INV, PHI_INV, kernel
from .filling import Filling, PatternClass, avoids, is_mixed, upper_rows_avoid
from .shape import classify


@dataclass(frozen=True)
class PivotReport:
    """Pivot of the bottom row; all indices are 1-based columns or bands.

    ``band_pivots`` holds the pivot of each rectangle (``None`` if it has
    none) and ``anchors`` the anchor column of each rectangle.
    """

    index: int | None
    band: int | None
    candidates: tuple[tuple[int, int], ...]
    band_pivots: tuple[int | None, ...]
    anchors: tuple[int, ...]


def _require_complete(f: Filling) -> None:
    if not classify(f.shape).le_complete:
        raise ValueError("shape is not ⌐-complete")


def _require(f: Filling, pc: PatternClass, what: str) -> None:
    _require_complete(f)
    if not avoids(f, pc):
        raise ValueError(f"input is not {what}")


def _report(f: Filling, dual: bool) -> PivotReport:
    _require(f, PatternClass.X, "an X-diagram")
    if not f.shape.cells:
        return PivotReport(None, None, (), (), ())
    g, nr, nc = f.grid()
    index, band, cands, piv, anchors = kernel.pivot_report(g, nr, nc, nr - 1, dual)
    return PivotReport(
        index=index + 1 if index >= 0 else None,
        band=band + 1 if band >= 0 else None,
        candidates=tuple((m + 1, c + 1) for m, c in cands),
        band_pivots=tuple(p + 1 if p >= 0 else None for p in piv),
        anchors=tuple(a + 1 for a in anchors),
    )


def pivot_column(f: Filling) -> PivotReport:
    """Pivot: bottom entry 1, most 0s on its rectangle, leftmost; the rightmost admissible band wins."""
    return _report(f, dual=False)


def pivot_column_dual(f: Filling) -> PivotReport:
    """Dual pivot: nonzero column with bottom entry 0, most 1s, leftmost."""
    return _report(f, dual=True)


def _apply_step(f: Filling, mode: int) -> Filling:
    if not f.shape.cells:
        return f
    g, nr, nc = f.grid()
    kernel.step(g, nr, nc, nr - 1, mode)
    return Filling.from_grid(f.shape, g, nc)


def _apply_all(f: Filling, mode: int) -> tuple[Filling, list[int | None]]:
    if not f.shape.cells:
        return f, []
    g, nr, nc = f.grid()
    trace = kernel.transform(g, nr, nc, mode)
    return Filling.from_grid(f.shape, g, nc), [j + 1 if j >= 0 else None for j in trace]


def phi(f: Filling) -> Filling:
    _require(f, PatternClass.X, "an X-diagram")
    return _apply_step(f, PHI)


def phi_inv(u: Filling) -> Filling:
    if not is_mixed(u):
        raise ValueError("input is not a mixed diagram")
    return _apply_step(u, PHI_INV)


def phi2(f: Filling) -> Filling:
    _require(f, PatternClass.X, "an X-diagram")
    return _apply_step(f, PHI2)


def phi2_inv(u: Filling) -> Filling:
    _require_complete(u)
    if not upper_rows_avoid(u, PatternClass.X):
        raise ValueError("top rows are not an X-diagram")
    return _apply_step(u, PHI2_INV)


def Phi_with_pivots(f: Filling) -> tuple[Filling, list[int | None]]:
    """Φ together with the pivot used at each step, last row first."""
    _require(f, PatternClass.X, "an X-diagram")
    return _apply_all(f, PHI)


def Phi(f: Filling) -> Filling:
    return Phi_with_pivots(f)[0]


def Phi_inv(u: Filling) -> Filling:
    _require(u, PatternClass.LE, "a ⌐-diagram")
    return _apply_all(u, PHI_INV)[0]


def Phi2_with_pivots(f: Filling) -> tuple[Filling, list[int | None]]:
    _require(f, PatternClass.X, "an X-diagram")
    return _apply_all(f, PHI2)


def Phi2(f: Filling) -> Filling:
    return Phi2_with_pivots(f)[0]


def Phi2_inv(u: Filling) -> Filling:
    _require(u, PatternClass.LE, "a ⌐-diagram")
    return _apply_all(u, PHI2_INV)[0]


@dataclass(frozen=True)
class SweepResult:
    """Outcome of mapping every X-filling of a shape.

    ``failure`` is empty on success; otherwise it names the first failed
    check and ``witness`` is the offending X-filling when there is one.
    """

    n_x: int
    n_le: int
    n_images: int
    failure: str
    witness: Filling | None

    @property
    def ok(self) -> bool:
        return not self.failure


def bijection_sweep(shape, dual: bool = False) -> SweepResult:
    """Exhaustively check Φ (or Φ₂ when ``dual``) on ``shape``.

    Checks: each image avoids LE, the preserved statistics agree (zero rows
    and columns, or zero columns and restricted rows), the inverse restores
    the input, images are distinct and as many as the LE-diagrams.
    """
    if not classify(shape).le_complete:
        raise ValueError("shape is not ⌐-complete")
    g, nr, nc = shape.template()
    n_x, n_le, n_img, failure, code = kernel.bijection_sweep(g, nr, nc, dual)
    witness = Filling.from_code(shape, code) if code >= 0 else None
    return SweepResult(n_x, n_le, n_img, failure, witness)
