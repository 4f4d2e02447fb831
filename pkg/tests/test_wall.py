import pytest
from hypothesis import given, strategies as st

from conftest import walls
from youngwalls.cartan import cartan_data
from youngwalls.wall import (
    BlockRef,
    Column,
    IllegalBlock,
    NothingToRemove,
    TopState,
    Wall,
    add_block,
    addable_slots,
    bar_step,
    color_counts,
    column_count,
    dominance_ge,
    ground_wall,
    is_proper,
    is_reduced,
    ladder,
    partition_of,
    reduced_form,
    removable_blocks,
    remove_block,
    total_cmp,
    wall_from_compact,
    wall_from_json,
    wall_to_compact,
    wall_to_json,
)

F, H2, F3, B3 = TopState.FLAT, TopState.HALF2, TopState.FRONT3, TopState.BACK3


def mk(spec, lam, cols):
    tag = ground_wall(spec, lam).tag
    return Wall(tag, lam, tuple(Column(m, t) for m, t in cols))


def grow(spec, lam, picks):
    """Build a wall by choosing, at each step, the pick-th legal slot."""
    w = ground_wall(spec, lam)
    for p in picks:
        w = add_block(w, addable_slots(w)[p])
    return w


def test_ground_has_one_starting_slot_over_prefill():
    assert addable_slots(ground_wall("B1:3", 0)) == [BlockRef(0, 0, "front", 0)]
    assert addable_slots(ground_wall("A2even:1", 0)) == [BlockRef(0, 0, "upper", 0)]
    assert addable_slots(ground_wall("A1:2", 1)) == [BlockRef(0, 0, "whole", 1)]
    assert addable_slots(ground_wall("A1:1", 0)) == [BlockRef(0, 0, "lower", 0)]


def test_slots_after_one_block():
    w = grow("B1:3", 0, [0])
    assert w.columns == (Column(1, F),)
    assert addable_slots(w) == [BlockRef(0, 1, "whole", 2), BlockRef(1, 0, "front", 1)]
    assert removable_blocks(w) == [BlockRef(0, 0, "front", 0)]


def test_thickness_split_offers_both_halves():
    w = mk("B1:3", 0, [(4, F)])  # next cell of column 0 is the 0|1 pair
    refs = [r for r in addable_slots(w) if r.column == 0]
    assert refs == [BlockRef(0, 4, "front", 0), BlockRef(0, 4, "back", 1)]
    # and a complete pair exposes both halves for removal
    w2 = mk("B1:3", 0, [(5, F)])
    assert [r.part for r in removable_blocks(w2)] == ["front", "back"]


def test_counts_and_colors():
    w = mk("B1:3", 0, [(8, F3), (1, F)])
    assert partition_of(w) == (12, 1)
    assert color_counts(w) == {0: 3, 1: 2, 2: 4, 3: 4}
    assert column_count(w, 5) == 0


def test_weak_decrease_guards_additions():
    w = grow("A1:2", 0, [0])  # single 0-cube
    assert {r.column for r in addable_slots(w)} == {0, 1}
    with pytest.raises(IllegalBlock):
        add_block(w, BlockRef(2, 0, "whole", 1))
    w2 = grow("A1:2", 0, [0, 1])  # columns (1, 1)
    with pytest.raises(IllegalBlock):
        add_block(w2, BlockRef(1, 1, "whole", 0))


def test_weak_decrease_guards_removals():
    w = grow("A1:2", 0, [0, 1])
    assert [r.column for r in removable_blocks(w)] == [1]
    with pytest.raises(IllegalBlock):
        remove_block(w, BlockRef(0, 0, "whole", 0))


def test_wrong_color_is_rejected():
    w = ground_wall("A1:2", 0)
    with pytest.raises(IllegalBlock):
        add_block(w, BlockRef(0, 0, "whole", 2))


def test_upper_half_needs_lower():
    w = ground_wall("A1:1", 0)
    with pytest.raises(IllegalBlock):
        add_block(w, BlockRef(0, 0, "upper", 1))
    w = add_block(w, BlockRef(0, 0, "lower", 0))
    assert w.columns == (Column(0, H2),)
    assert add_block(w, BlockRef(0, 0, "upper", 1)).columns == (Column(1, F),)


def test_properness():
    assert is_proper(mk("B1:3", 0, [(1, F), (1, B3)]))  # one column not full
    assert not is_proper(mk("B1:3", 0, [(1, F), (1, F)]))
    assert is_proper(mk("A1:2", 0, [(1, F), (1, F)]))  # unit cubes: always


def test_ladders():
    b1 = cartan_data("B1:3")
    assert ladder((0, 8), b1) == ((2, 0), (1, 4), (0, 8))
    assert ladder((2, 0), b1) == ((2, 0), (1, 4), (0, 8))
    a1 = cartan_data("A1:2")
    assert ladder((1, 3), a1) == ((2, 1), (1, 3), (0, 5))
    with pytest.raises(ValueError):
        ladder((0, 0), cartan_data("A1:1"))


def test_reduction_worked_example():
    """Tall two-column wall whose blocks slide down three ladders."""
    w = mk("B1:3", 0, [(8, F3), (1, F)])
    r = reduced_form(w)
    assert r.columns == (Column(5, F), Column(4, F), Column(1, F))
    assert partition_of(r) == (7, 5, 1)
    assert color_counts(r) == color_counts(w)
    assert dominance_ge(partition_of(r), partition_of(w))
    assert is_reduced(r) and not is_reduced(w)
    assert reduced_form(r) == r


def test_bar_step_strips_a_ladder():
    w = mk("A1:2", 0, [(3, F), (1, F)])
    bare, color, removed = bar_step(w)
    assert (color, removed) == (2, 2)  # the 2-cubes at (1,0) and (0,2)
    assert bare.columns == (Column(2, F),)
    with pytest.raises(NothingToRemove):
        bar_step(ground_wall("A1:2", 0))


def test_bar_step_takes_front_of_complete_pair():
    w = mk("B1:3", 0, [(5, F), (4, F), (1, F)])
    bare, color, removed = bar_step(w)
    assert (color, removed) == (0, 1)
    assert bare.columns == (Column(5, F), Column(4, F))


def test_dominance():
    assert dominance_ge((7, 5, 1), (12, 1))
    assert not dominance_ge((12, 1), (7, 5, 1))
    assert dominance_ge((3, 1), (3, 1))
    assert not dominance_ge((4, 1), (3, 2))
    assert dominance_ge((2, 2), (3, 1)) and not dominance_ge((3, 1), (2, 2))


def test_total_order():
    a = mk("B1:3", 0, [(8, F3), (1, F)])
    b = reduced_form(a)
    assert total_cmp(b, a) == 1 and total_cmp(a, b) == -1
    assert total_cmp(a, a) == 0
    # equal counts, different top states: back3 outranks front3
    front = mk("B1:3", 0, [(5, F), (4, F3)])
    back = mk("B1:3", 0, [(5, F), (4, B3)])
    assert total_cmp(back, front) == 1


def test_json_codec():
    w = mk("B1:3", 0, [(8, F3), (1, F)])
    doc = wall_to_json(w)
    assert doc == {
        "tag": "B1:3",
        "lambda": 0,
        "columns": [{"cubes": 8, "top": "front3"}, {"cubes": 1, "top": "flat"}],
    }
    assert wall_from_json(doc) == w


def test_compact_codec():
    w = mk("B1:3", 0, [(8, F3), (1, F)])
    assert wall_to_compact(w) == "8.front3/1.flat"
    assert wall_from_compact("B1:3", 0, "8.front3/1.flat") == w
    g = ground_wall("D2:2", 0)
    assert wall_to_compact(g) == "ground"
    assert wall_from_compact("D2:2", 0, "ground") == g


@pytest.mark.parametrize("text", [
    "1.flat/2.flat",      # increasing profile
    "0.flat",             # trailing empty column
    "1.half2",            # half-height top on a thickness-split cell
    "0.back3",            # the back half at level 0 is the ground's
    "1.flat/0.front3",    # count 1 then count 1 is fine, but level 0...
])
def test_malformed_compact_rejected(text):
    with pytest.raises(ValueError):
        wall_from_compact("B1:3", 0, text)


@given(walls())
def test_partitions_weakly_decrease(w):
    p = partition_of(w)
    assert all(p[k] >= p[k + 1] for k in range(len(p) - 1))
    assert all(c > 0 for c in p)
    assert sum(p) == sum(color_counts(w).values())


@given(walls())
def test_add_then_remove_roundtrip(w):
    for ref in addable_slots(w):
        assert remove_block(add_block(w, ref), ref) == w
    for ref in removable_blocks(w):
        assert add_block(remove_block(w, ref), ref) == w


@given(walls())
def test_codecs_roundtrip(w):
    assert wall_from_json(wall_to_json(w)) == w
    assert wall_from_compact(w.tag, w.lambda_index, wall_to_compact(w)) == w


@given(walls())
def test_reduction_properties(w):
    if cartan_data(w.tag).ladder_step == 0:
        return
    r = reduced_form(w)
    assert color_counts(r) == color_counts(w)
    assert dominance_ge(partition_of(r), partition_of(w))
    assert reduced_form(r) == r
    assert is_reduced(w) == (r == w)
    if is_proper(w):
        assert is_proper(r)


@given(walls(proper=True))
def test_bar_step_removes_one_color(w):
    """Bar reduction is defined on reduced proper walls: it strips the
    whole leftmost ladder of the top color and stays reduced proper."""
    if cartan_data(w.tag).ladder_step == 0:
        return
    w = reduced_form(w)
    if not w.columns:
        return
    bare, color, removed = bar_step(w)
    assert removed >= 1
    before, after = color_counts(w), color_counts(bare)
    assert before[color] - after[color] == removed
    assert all(before[i] == after[i] for i in before if i != color)
    assert is_proper(bare) and is_reduced(bare)
