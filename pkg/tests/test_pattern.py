import pytest
from hypothesis import given, strategies as st

from youngwalls.cartan import AlgebraTag, cartan_data
from youngwalls.pattern import (
    BACK_HALF,
    FULL_STRIP,
    LOWER_HALF,
    SplitHoriz,
    SplitVert,
    UnsupportedWeight,
    Whole,
    cube_at,
    dump_pattern,
    pattern_checksums,
    pattern_table,
)

ALL_SUPPORTED = [
    (tag, lam)
    for tag in ("A1:1", "A1:2", "A1:4", "A2odd:3", "A2odd:5", "D1:4", "D1:6",
                "A2even:1", "A2even:2", "A2even:3", "D2:2", "D2:4", "B1:3", "B1:5")
    for lam in cartan_data(AlgebraTag.parse(tag)).supported_weights
]


def test_b1_rank3_weight0():
    t = pattern_table("B1:3", 0)
    assert (t.horiz_period, t.vert_period) == (2, 4)
    assert t.cubes[0] == (SplitVert(0, 1), Whole(2), SplitHoriz(3, 3), Whole(2))
    assert t.cubes[1] == (SplitVert(1, 0), Whole(2), SplitHoriz(3, 3), Whole(2))
    assert t.ground_prefill == (BACK_HALF, BACK_HALF)


def test_b1_rank3_spin_weight():
    t = pattern_table("B1:3", 3)
    assert t.cubes[0] == (SplitHoriz(3, 3), Whole(2), SplitVert(0, 1), Whole(2))
    assert t.cubes[1] == (SplitHoriz(3, 3), Whole(2), SplitVert(1, 0), Whole(2))
    assert t.ground_prefill == (LOWER_HALF, LOWER_HALF)


def test_a2even_rank2():
    t = pattern_table("A2even:2", 0)
    assert (t.horiz_period, t.vert_period) == (1, 4)
    assert t.cubes[0] == (SplitHoriz(0, 0), Whole(1), Whole(2), Whole(1))
    assert t.ground_prefill == (LOWER_HALF,)
    with pytest.raises(UnsupportedWeight):
        pattern_table("A2even:2", 1)


def test_a1_colors_cycle():
    t = pattern_table("A1:2", 0)
    assert (t.horiz_period, t.vert_period) == (3, 3)
    assert [c.color for c in t.cubes[0]] == [0, 1, 2]
    assert [c.color for c in t.cubes[1]] == [2, 0, 1]
    assert [c.color for c in t.cubes[2]] == [1, 2, 0]
    assert t.ground_prefill == (FULL_STRIP,) * 3
    # weight 1 shifts every color by one
    assert [c.color for c in pattern_table("A1:2", 1).cubes[0]] == [1, 2, 0]


def test_a1_rank1_half_heights():
    t = pattern_table("A1:1", 0)
    assert (t.horiz_period, t.vert_period) == (2, 1)
    assert t.cubes[0] == (SplitHoriz(0, 1),)
    assert t.cubes[1] == (SplitHoriz(1, 0),)


def test_a2odd_rank3():
    t = pattern_table("A2odd:3", 0)
    assert t.cubes[0] == (SplitVert(0, 1), Whole(2), Whole(3), Whole(2))
    assert t.cubes[1] == (SplitVert(1, 0), Whole(2), Whole(3), Whole(2))
    assert pattern_table("A2odd:3", 1).cubes[0][0] == SplitVert(1, 0)


def test_d1_rank4_all_weights():
    t0 = pattern_table("D1:4", 0)
    assert t0.cubes[0] == (SplitVert(0, 1), Whole(2), SplitVert(3, 4), Whole(2))
    assert t0.cubes[1] == (SplitVert(1, 0), Whole(2), SplitVert(4, 3), Whole(2))
    t1 = pattern_table("D1:4", 1)
    assert t1.cubes[0][0] == SplitVert(1, 0)
    assert t1.cubes[0][2] == SplitVert(3, 4)  # middle agrees with weight 0
    t3 = pattern_table("D1:4", 3)
    assert t3.cubes[0] == (SplitVert(3, 4), Whole(2), SplitVert(0, 1), Whole(2))
    t4 = pattern_table("D1:4", 4)
    assert t4.cubes[0] == (SplitVert(4, 3), Whole(2), SplitVert(0, 1), Whole(2))
    assert t4.cubes[1] == (SplitVert(3, 4), Whole(2), SplitVert(1, 0), Whole(2))


def test_d2_rank2_both_weights():
    t0 = pattern_table("D2:2", 0)
    assert t0.cubes[0] == (SplitHoriz(0, 0), Whole(1), SplitHoriz(2, 2), Whole(1))
    t2 = pattern_table("D2:2", 2)
    assert t2.cubes[0] == (SplitHoriz(2, 2), Whole(1), SplitHoriz(0, 0), Whole(1))
    assert t0.ground_prefill == t2.ground_prefill == (LOWER_HALF,)


@pytest.mark.parametrize("spec,lam", [("A2even:2", 2), ("A2odd:4", 2),
                                      ("D1:5", 2), ("B1:4", 2), ("D2:3", 1)])
def test_unsupported_weights_raise(spec, lam):
    with pytest.raises(UnsupportedWeight):
        pattern_table(spec, lam)


@pytest.mark.parametrize("spec,lam", ALL_SUPPORTED)
def test_checksums_match_cartan_data(spec, lam):
    """Per column class and vertical period, the pattern must contain
    exactly a_i i-blocks and have total volume equal to delta."""
    tag = AlgebraTag.parse(spec)
    data = cartan_data(tag)
    table = pattern_table(tag, lam)
    assert table.vert_period == data.delta_volume
    for counts, volume in pattern_checksums(table):
        assert counts == {i: data.a[i] for i in data.index_set}
        assert volume == data.delta_volume


@given(k=st.integers(0, 40), l=st.integers(0, 40))
def test_periodicity(k, l):
    for spec, lam in [("B1:3", 0), ("A1:2", 1), ("D2:2", 2)]:
        t = pattern_table(spec, lam)
        cell = cube_at(t, k, l)
        assert cell == cube_at(t, k + t.horiz_period, l)
        assert cell == cube_at(t, k, l + t.vert_period)


def test_cube_at_spec_example():
    assert cube_at(pattern_table("B1:3", 0), 0, 1) == Whole(2)


def test_dump_is_printable():
    text = dump_pattern(pattern_table("B1:3", 0))
    assert "level  3" in text and "[3/3]" in text and "[0\\1]" in text
