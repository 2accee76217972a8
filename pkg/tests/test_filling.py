from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from lediagrams.filling import (
    Filling,
    Pattern,
    PatternClass,
    avoiding_codes,
    avoids,
    count,
    count_by_ones,
    enumerate_fillings,
    filling_from_rows,
    find_violation,
    is_le_diagram,
    is_mixed,
    parse_filling,
    render_filling,
    statistics,
    xstruct_conditions,
)
from lediagrams.shape import Shape, enumerate_le_complete, parse_shape, young_shape


def brute_avoids(f: Filling, pc: PatternClass) -> bool:
    """Direct scan over row and column pairs; no kernel involved."""
    d = f.as_dict()
    pats = {str(p) for p in pc.patterns}
    rows = sorted({r for r, _ in d})
    cols = sorted({c for _, c in d})
    for r1, r2 in combinations(rows, 2):
        for c1, c2 in combinations(cols, 2):
            cells = [(r1, c1), (r1, c2), (r2, c1), (r2, c2)]
            if all(x in d for x in cells) and "".join(str(d[x]) for x in cells) in pats:
                return False
    return True


def test_pattern_codes():
    p = Pattern.parse("1110")
    assert p.code == 0b1110 and Pattern.from_code(p.code) == p and str(p) == "1110"
    with pytest.raises(ValueError):
        Pattern.parse("12")
    assert PatternClass.parse("Le") is PatternClass.LE
    with pytest.raises(ValueError):
        PatternClass.parse("y")


def test_parse_render_round_trip():
    text = "111111\n000100\n11010\n1001\n111"
    f = parse_filling(text)
    assert render_filling(f) == text
    assert f.shape == young_shape((6, 6, 5, 4, 3))
    assert Filling.from_code(f.shape, f.code) == f


def test_parse_with_holes_and_errors():
    f = parse_filling("1.1\n111")
    assert len(f.shape) == 5 and f[(1, 3)] == 1
    with pytest.raises(ValueError, match="invalid character"):
        parse_filling("10\n1x")
    with pytest.raises(ValueError):
        Filling(young_shape((2,)), [1])
    with pytest.raises(ValueError):
        Filling(young_shape((1,)), [2])


def test_find_violation_reports_least_submatrix():
    f = filling_from_rows(["10", "01"])
    v = find_violation(f, PatternClass.X)
    assert (v.r1, v.r2, v.c1, v.c2, str(v.pattern)) == (1, 2, 1, 2, "1001")
    assert find_violation(f, PatternClass.LE) is None


def test_submatrix_needs_all_four_cells():
    # (1,2),(2,1),(2,2) present but (1,1) is a hole
    f = parse_filling(".1\n10")
    assert avoids(f, PatternClass.X) and avoids(f, PatternClass.LE)


@pytest.mark.parametrize("pc", list(PatternClass))
def test_kernel_avoidance_matches_scan(pc):
    for s in list(enumerate_le_complete(3, 3)) + [young_shape((4, 2, 1))]:
        for code in range(1 << len(s)):
            f = Filling.from_code(s, code)
            assert avoids(f, pc) == brute_avoids(f, pc)


@pytest.mark.parametrize("pc", list(PatternClass))
def test_enumeration_matches_filter(pc):
    s = parse_shape("###\n.###\n.##")
    expected = [c for c in range(1 << len(s)) if brute_avoids(Filling.from_code(s, c), pc)]
    assert sorted(avoiding_codes(s, pc)) == expected
    got = list(enumerate_fillings(s, pc))
    assert len(got) == len(expected) == count(s, pc)
    poly = count_by_ones(s, pc)
    for j in range(len(s) + 1):
        assert poly.coefficient(j) == sum(1 for c in expected if bin(c).count("1") == j)


def test_enumeration_prefix_partitions_stream():
    s = young_shape((3, 3, 2))
    whole = set(enumerate_fillings(s, PatternClass.X))
    parts = [set(enumerate_fillings(s, PatternClass.X, prefix=p)) for p in product((0, 1), repeat=2)]
    assert set().union(*parts) == whole
    assert sum(map(len, parts)) == len(whole)


def test_small_counts():
    assert count(young_shape((2, 2)), PatternClass.LE) == 14
    assert count(young_shape((2, 1)), PatternClass.X) == 8
    assert count(Shape(), PatternClass.ALT) == 1
    assert count_by_ones(young_shape((1,)), PatternClass.LE).to_list() == [1, 1]


def test_le_definition_on_young_shapes():
    for p in [(2, 2), (3, 2, 1), (3, 3, 1), (4, 2)]:
        s = young_shape(p)
        for code in range(1 << len(s)):
            f = Filling.from_code(s, code)
            assert is_le_diagram(f) == brute_avoids(f, PatternClass.LE)


def test_statistics():
    f = filling_from_rows(["100", "000", "01"])
    st_ = statistics(f)
    assert st_.zero_rows == {2} and st_.zero_columns == {3}
    assert st_.restricted_rows == {2, 3} and st_.unrestricted_rows == {1}
    assert st_.ones == 2
    padded = statistics(f, nrows=5)
    assert padded.zero_rows == {2, 4, 5} and padded.unrestricted_rows == {1, 4, 5}
    with pytest.raises(ValueError):
        statistics(f, nrows=2)


def test_mixed_diagrams():
    assert is_mixed(filling_from_rows(["11", "01"]))
    assert not is_mixed(filling_from_rows(["01", "10"]))
    # upper rows contain an X pattern
    assert not is_mixed(filling_from_rows(["10", "01", "00"]))
    with pytest.raises(ValueError):
        is_mixed(parse_filling(".1\n11"))


def test_xstruct_examples():
    good = xstruct_conditions(filling_from_rows(["110", "100", "111"]))
    assert good.agree() and good.avoids_x
    bad = xstruct_conditions(filling_from_rows(["10", "01"]))
    assert bad.agree() and not bad.avoids_x


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_xstruct_agrees_on_random_rectangles(nr, nc, data):
    s = young_shape([nc] * nr)
    code = data.draw(st.integers(0, (1 << len(s)) - 1))
    f = Filling.from_code(s, code)
    x = xstruct_conditions(f)
    assert x.agree() and x.avoids_x == brute_avoids(f, PatternClass.X)


def test_xstruct_on_skew_shape():
    s = parse_shape("##\n###\n.##")
    for code in range(1 << len(s)):
        f = Filling.from_code(s, code)
        x = xstruct_conditions(f)
        assert x.agree() and x.avoids_x == brute_avoids(f, PatternClass.X)


def test_enumeration_guard():
    with pytest.raises(ValueError):
        count(young_shape((6, 6, 6, 5)), PatternClass.X)
