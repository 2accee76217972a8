import pytest

from lediagrams.bijection import (
    Phi,
    Phi2,
    Phi2_inv,
    Phi2_with_pivots,
    Phi_inv,
    Phi_with_pivots,
    bijection_sweep,
    phi,
    phi2,
    phi2_inv,
    phi_inv,
    pivot_column,
    pivot_column_dual,
)
from lediagrams.filling import (
    Filling,
    PatternClass,
    avoiding_codes,
    avoids,
    filling_from_rows,
    is_mixed,
    statistics,
)
from lediagrams.shape import enumerate_le_complete, parse_shape, young_shape

STAIRCASE = ["111111", "000100", "11010", "1001", "111"]
STAIRCASE_IMAGE = ["101111", "000111", "11111", "1111", "001"]

WIDE = ["100010000000", "111111101110", "110010100100", "10000000000", "110110101"]
WIDE_PHI = ["100010000000", "111111100110", "110010100100", "10000000000", "000111101"]

FRENCH = ["11", "1000", "1111011", "10100000", "111111111", "101101001"]
FRENCH_PHI = ["11", "1000", "1111001", "10100000", "111110110", "000111111"]


def x_diagrams(s):
    return [Filling.from_code(s, c) for c in avoiding_codes(s, PatternClass.X)]


def column(f, c):
    return [b for (r, cc), b in sorted(f.as_dict().items()) if cc == c]


def test_staircase_full_map():
    f = filling_from_rows(STAIRCASE)
    out, pivots = Phi_with_pivots(f)
    assert out == filling_from_rows(STAIRCASE_IMAGE)
    assert pivots[:4] == [3, 1, 1, 4]
    assert Phi_inv(out) == f


def test_wide_example_single_step():
    f = filling_from_rows(WIDE)
    assert pivot_column(f).index == 4
    u = phi(f)
    assert u == filling_from_rows(WIDE_PHI)
    assert column(u, 9) == [0, 0, 0, 0, 1]
    assert is_mixed(u) and phi_inv(u) == f


def test_french_example_single_step():
    f = filling_from_rows(FRENCH)
    rep = pivot_column(f)
    assert rep.band_pivots == (1, 4, 4, 4, 1)
    assert {m for m, _ in rep.candidates} == {1, 2}
    assert rep.index == 4 and rep.band == 2
    u = phi(f)
    assert u == filling_from_rows(FRENCH_PHI)
    for c in (6, 9):
        col = column(u, c)
        assert col[-1] == 1 and not any(col[:-1])
    assert phi_inv(u) == f


def test_zero_bottom_row_is_fixed():
    f = filling_from_rows(["101", "000"])
    assert pivot_column(f).index is None
    assert phi(f) == f and phi_inv(f) == f


def test_single_row_is_identity():
    s = young_shape((4,))
    for f in x_diagrams(s):
        assert Phi(f) == f


def test_phi_round_trip_on_square():
    s = young_shape((3, 3, 3))
    images = set()
    for f in x_diagrams(s):
        u = phi(f)
        assert is_mixed(u) and phi_inv(u) == f
        images.add(u)
    assert len(images) == len(x_diagrams(s))


def test_pivot_survives_phi():
    # the pivot is recovered as the leftmost bottom 1 of the image
    for s in [young_shape((3, 3, 2)), young_shape((4, 4))]:
        for f in x_diagrams(s):
            j = pivot_column(f).index
            if j is None:
                continue
            u = phi(f)
            bottom = [c for c in u.shape.row(u.shape.nrows) if u[(u.shape.nrows, c)]]
            assert bottom[0] == j


def test_Phi_on_2x2():
    s = young_shape((2, 2))
    xs = x_diagrams(s)
    assert len(xs) == 14
    assert {Phi(f) for f in xs} == {Filling.from_code(s, c) for c in avoiding_codes(s, PatternClass.LE)}
    assert all(Phi_inv(Phi(f)) == f for f in xs)


def test_dual_examples():
    domino = filling_from_rows(["1", "0"])
    assert pivot_column_dual(domino).index == 1
    assert phi2(domino) == domino and Phi2(domino) == domino
    assert avoids(domino, PatternClass.LE)
    unrestricted = filling_from_rows(["101", "111"])
    assert pivot_column_dual(unrestricted).index is None
    assert phi2(unrestricted) == unrestricted


def test_Phi2_on_2x2():
    s = young_shape((2, 2))
    xs = x_diagrams(s)
    le = {Filling.from_code(s, c) for c in avoiding_codes(s, PatternClass.LE)}
    assert {Phi2(f) for f in xs} == le
    for f in xs:
        a, b = statistics(f), statistics(Phi2(f))
        assert (a.zero_columns, a.restricted_rows) == (b.zero_columns, b.restricted_rows)
        assert Phi2_inv(Phi2(f)) == f


def test_dual_pivot_copy_becomes_single_bottom_one():
    # 111/010: column 1 is the dual pivot, column 3 repeats it
    f = filling_from_rows(["111", "010"])
    assert pivot_column_dual(f).index == 1
    u = phi2(f)
    assert u == filling_from_rows(["110", "011"])
    assert avoids(u, PatternClass.LE) and phi2_inv(u) == f


def test_Phi2_pivots_are_recorded():
    out, pivots = Phi2_with_pivots(filling_from_rows(STAIRCASE))
    assert len(pivots) == 5 and avoids(out, PatternClass.LE)


def python_level_sweep(s, forward, backward, keep):
    """Bijection check through the public maps only."""
    xs = x_diagrams(s)
    le = {Filling.from_code(s, c) for c in avoiding_codes(s, PatternClass.LE)}
    images = set()
    for f in xs:
        u = forward(f)
        assert u in le
        assert keep(statistics(f)) == keep(statistics(u))
        assert backward(u) == f
        images.add(u)
    assert images == le


def zero_sets(st):
    return st.zero_rows, st.zero_columns


def dual_sets(st):
    return st.zero_columns, st.restricted_rows


@pytest.mark.parametrize("s", [young_shape(p) for p in [(3, 2, 1), (3, 3, 2), (4, 2, 2, 1), (5, 3)]]
                         + [parse_shape("##\n###\n.##"), parse_shape("##\n.###\n.###")],
                         ids=lambda s: "/".join(map(str, s.row_lengths())))
def test_public_maps_are_bijections(s):
    python_level_sweep(s, Phi, Phi_inv, zero_sets)
    python_level_sweep(s, Phi2, Phi2_inv, dual_sets)


def test_kernel_sweep_agrees_with_counts():
    for s in enumerate_le_complete(3, 3):
        for dual in (False, True):
            r = bijection_sweep(s, dual=dual)
            assert r.ok and r.n_x == r.n_le == r.n_images


@pytest.mark.parametrize("fn", [phi, Phi, phi2, Phi2, pivot_column, pivot_column_dual])
def test_forward_maps_reject_non_x(fn):
    with pytest.raises(ValueError):
        fn(filling_from_rows(["10", "01"]))


def test_inverse_maps_reject_bad_input():
    with pytest.raises(ValueError):
        Phi_inv(filling_from_rows(["11", "10"]))
    with pytest.raises(ValueError):
        phi_inv(filling_from_rows(["10", "01", "11"]))
    with pytest.raises(ValueError):
        Phi2_inv(filling_from_rows(["11", "10"]))


def test_maps_reject_incomplete_shape():
    with pytest.raises(ValueError):
        Phi(filling_from_rows([".1", "11"]))
    with pytest.raises(ValueError):
        bijection_sweep(parse_shape(".#\n##"))
