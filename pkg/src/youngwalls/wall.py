"""Young walls: stacks of colored blocks in a corner-shaped frame.

A wall is a row of columns with column 0 rightmost, every block backed
on the right by its neighbor column, so block counts weakly decrease.
Each column stores how many unit cells are completely filled and which
half of the next cell, if any, is present. The building pattern then
determines every block, so this pair pins the wall down exactly.

Prefilled halves at level 0 belong to the ground, not the wall: they
support blocks and complete cells but are never counted, added or
removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple

from .cartan import AlgebraTag, cartan_data
from .pattern import (
    BACK_HALF,
    LOWER_HALF,
    SPLIT_HORIZ,
    SPLIT_VERT,
    WHOLE,
    cube_at,
    pattern_table,
)


class IllegalBlock(Exception):
    """The requested block cannot be placed or removed here."""


class NothingToRemove(Exception):
    """Bar reduction was asked for on the ground-state wall."""


class TopState(IntEnum):
    # Numeric codes double as the tie-break order in total_cmp.
    FLAT = 0
    HALF2 = 1
    FRONT3 = 2
    BACK3 = 3


_TOP_TOKEN = {
    TopState.FLAT: "flat",
    TopState.HALF2: "half2",
    TopState.FRONT3: "front3",
    TopState.BACK3: "back3",
}
_TOKEN_TOP = {v: k for k, v in _TOP_TOKEN.items()}

_TOP_PART = {TopState.HALF2: "lower", TopState.FRONT3: "front", TopState.BACK3: "back"}


class Column(NamedTuple):
    cubes: int  # completely filled cells
    top: TopState  # partial state of the next cell


EMPTY_COLUMN = Column(0, TopState.FLAT)


class BlockRef(NamedTuple):
    """One block: column, cell level, which part of the cell, color."""

    column: int
    level: int
    part: str  # whole | lower | upper | front | back
    color: int


@dataclass(frozen=True)
class Wall:
    tag: object  # AlgebraTag
    lambda_index: int
    columns: tuple  # of Column, index 0 = rightmost; no trailing empties

    def __str__(self):
        return "%s:L%d[%s]" % (self.tag, self.lambda_index, wall_to_compact(self))

    __repr__ = __str__

    def column(self, k):
        return self.columns[k] if k < len(self.columns) else EMPTY_COLUMN


def ground_wall(tag, lambda_index):
    if isinstance(tag, str):
        tag = AlgebraTag.parse(tag)
    pattern_table(tag, lambda_index)  # validates the weight
    return Wall(tag, lambda_index, ())


def _table_of(wall):
    return pattern_table(wall.tag, wall.lambda_index)


def _prefilled_part(table, k, l):
    """The part of cell (k, l) occupied by the ground, if any."""
    if l != 0:
        return None
    pre = table.prefill_at(k)
    if pre == LOWER_HALF:
        return "lower"
    if pre == BACK_HALF:
        return "back"
    return None


def _part_color(cell, part):
    if part == "whole":
        return cell.color
    if part == "lower":
        return cell.lower
    if part == "upper":
        return cell.upper
    if part == "front":
        return cell.front
    return cell.back


def _needed_parts(table, k, l):
    """Parts the wall itself must supply to complete cell (k, l)."""
    cell = cube_at(table, k, l)
    if cell.kind == WHOLE:
        parts = ("whole",)
    elif cell.kind == SPLIT_HORIZ:
        parts = ("lower", "upper")
    else:
        parts = ("front", "back")
    pre = _prefilled_part(table, k, l)
    return tuple(p for p in parts if p != pre)


def column_count(wall, k):
    """Number of blocks in column k. Prefilled halves do not count."""
    table = _table_of(wall)
    m, top = wall.column(k)
    total = sum(len(_needed_parts(table, k, l)) for l in range(m))
    return total + (1 if top != TopState.FLAT else 0)


def partition_of(wall):
    """Column block counts, column 0 first; weakly decreasing."""
    return tuple(column_count(wall, k) for k in range(len(wall.columns)))


def color_counts(wall):
    """How many i-blocks the wall contains, for every color i."""
    table = _table_of(wall)
    data = cartan_data(wall.tag)
    counts = dict.fromkeys(data.index_set, 0)
    for k, (m, top) in enumerate(wall.columns):
        for l in range(m):
            cell = cube_at(table, k, l)
            for part in _needed_parts(table, k, l):
                counts[_part_color(cell, part)] += 1
        if top != TopState.FLAT:
            cell = cube_at(table, k, m)
            counts[_part_color(cell, _TOP_PART[top])] += 1
    return counts


def _column_additions(table, k, column):
    """Blocks placeable on a column in the given state by support
    alone, paired with the state each produces. The weakly-decreasing
    check is separate."""
    m, top = column
    cell = cube_at(table, k, m)
    if top == TopState.FLAT:
        if cell.kind == WHOLE:
            return [(BlockRef(k, m, "whole", cell.color), Column(m + 1, TopState.FLAT))]
        if cell.kind == SPLIT_HORIZ:
            if _prefilled_part(table, k, m) == "lower":
                return [(BlockRef(k, m, "upper", cell.upper), Column(1, TopState.FLAT))]
            return [(BlockRef(k, m, "lower", cell.lower), Column(m, TopState.HALF2))]
        if _prefilled_part(table, k, m) == "back":
            return [(BlockRef(k, m, "front", cell.front), Column(1, TopState.FLAT))]
        # either half of a thickness-split cell may come first
        return [
            (BlockRef(k, m, "front", cell.front), Column(m, TopState.FRONT3)),
            (BlockRef(k, m, "back", cell.back), Column(m, TopState.BACK3)),
        ]
    done = Column(m + 1, TopState.FLAT)
    if top == TopState.HALF2:
        return [(BlockRef(k, m, "upper", cell.upper), done)]
    if top == TopState.FRONT3:
        return [(BlockRef(k, m, "back", cell.back), done)]
    return [(BlockRef(k, m, "front", cell.front), done)]


def _column_removals(table, k, column):
    """Blocks exposed at the top of a column, with resulting states."""
    m, top = column
    if top != TopState.FLAT:
        cell = cube_at(table, k, m)
        part = _TOP_PART[top]
        return [(BlockRef(k, m, part, _part_color(cell, part)), Column(m, TopState.FLAT))]
    if m == 0:
        return []
    cell = cube_at(table, k, m - 1)
    if cell.kind == WHOLE:
        return [(BlockRef(k, m - 1, "whole", cell.color), Column(m - 1, TopState.FLAT))]
    if cell.kind == SPLIT_HORIZ:
        if _prefilled_part(table, k, m - 1) == "lower":
            after = EMPTY_COLUMN
        else:
            after = Column(m - 1, TopState.HALF2)
        return [(BlockRef(k, m - 1, "upper", cell.upper), after)]
    if _prefilled_part(table, k, m - 1) == "back":
        return [(BlockRef(k, m - 1, "front", cell.front), EMPTY_COLUMN)]
    # both halves of a complete thickness-split cell are exposed
    return [
        (BlockRef(k, m - 1, "front", cell.front), Column(m - 1, TopState.BACK3)),
        (BlockRef(k, m - 1, "back", cell.back), Column(m - 1, TopState.FRONT3)),
    ]


def _with_column(wall, k, col):
    cols = list(wall.columns)
    if k == len(cols):
        cols.append(col)
    else:
        cols[k] = col
    while cols and cols[-1] == EMPTY_COLUMN:
        cols.pop()
    return Wall(wall.tag, wall.lambda_index, tuple(cols))


def _covers(left, right):
    """No free space to the right of any block: everything the right
    column occupies, its left neighbor must occupy too. In state terms
    the right column is strictly lower, or equally tall with a flat or
    identical top. Block counts then decrease weakly on their own."""
    return right.cubes < left.cubes or (
        right.cubes == left.cubes and right.top in (TopState.FLAT, left.top)
    )


def addable_slots(wall, color=None):
    """All blocks that may be added, rightmost column first. Column 0
    accepts anything stackable; further columns must stay covered by
    their right neighbor."""
    table = _table_of(wall)
    out = []
    for k in range(len(wall.columns) + 1):
        for ref, col in _column_additions(table, k, wall.column(k)):
            if k > 0 and not _covers(wall.column(k - 1), col):
                continue
            if color is None or ref.color == color:
                out.append(ref)
    return out


def removable_blocks(wall, color=None):
    """All blocks that may be removed, rightmost column first."""
    table = _table_of(wall)
    out = []
    for k in range(len(wall.columns)):
        right = wall.column(k + 1)
        for ref, col in _column_removals(table, k, wall.column(k)):
            if not _covers(col, right):
                continue
            if color is None or ref.color == color:
                out.append(ref)
    return out


def add_block(wall, ref):
    """Place the block ref on the wall. Checks stackability and the
    covering of each column by its right neighbor, not properness."""
    k = ref.column
    if k > len(wall.columns):
        raise IllegalBlock("column %d is not reachable yet" % k)
    for cand, col in _column_additions(_table_of(wall), k, wall.column(k)):
        if (cand.level, cand.part) == (ref.level, ref.part):
            if ref.color != cand.color:
                raise IllegalBlock("block at %s has color %d" % (cand[:2], cand.color))
            if k > 0 and not _covers(wall.column(k - 1), col):
                raise IllegalBlock("adding at column %d breaks the profile" % k)
            return _with_column(wall, k, col)
    raise IllegalBlock("no support for %s" % (ref,))


def remove_block(wall, ref):
    """Take the block ref off the wall; it must be exposed on top."""
    k = ref.column
    if k >= len(wall.columns):
        raise IllegalBlock("column %d is empty" % k)
    for cand, col in _column_removals(_table_of(wall), k, wall.column(k)):
        if (cand.level, cand.part) == (ref.level, ref.part):
            if ref.color != cand.color:
                raise IllegalBlock("block at %s has color %d" % (cand[:2], cand.color))
            if not _covers(col, wall.column(k + 1)):
                raise IllegalBlock("removing at column %d breaks the profile" % k)
            return _with_column(wall, k, col)
    raise IllegalBlock("%s is not exposed" % (ref,))


def is_proper(wall):
    """No two completely-filled columns of equal height. Walls made of
    unit cubes or half-height pairs only (the A1 family) are all proper."""
    if wall.tag.family == "A1":
        return True
    heights = [m for m, top in wall.columns if top == TopState.FLAT and m > 0]
    return len(heights) == len(set(heights))


def dominance_ge(p, q):
    """p dominates q: every tail sum of p is at least that of q.
    Partitions are column-count tuples, column 0 first."""
    size = max(len(p), len(q))
    tp = tq = 0
    for l in range(size - 1, -1, -1):
        tp += p[l] if l < len(p) else 0
        tq += q[l] if l < len(q) else 0
        if tp < tq:
            return False
    return True


def total_cmp(y, z):
    """Total order refining dominance: compare column counts at the
    largest index where they differ, then break ties on top states
    from column 0. Returns -1, 0 or 1."""
    assert (y.tag, y.lambda_index) == (z.tag, z.lambda_index)
    py, pz = partition_of(y), partition_of(z)
    for k in range(max(len(py), len(pz)) - 1, -1, -1):
        cy = py[k] if k < len(py) else 0
        cz = pz[k] if k < len(pz) else 0
        if cy != cz:
            return 1 if cy > cz else -1
    ty = tuple(col.top for col in y.columns)
    tz = tuple(col.top for col in z.columns)
    if ty == tz:
        return 0
    return 1 if ty > tz else -1


def ladder(c, data):
    """The ladder through cell c = (column, level): cells related by
    one step left and one ladder step up, listed from the bottom."""
    step = data.ladder_step
    if step == 0:
        raise ValueError("%s has ladder step 0; ladders degenerate" % (data.tag,))
    k, l = c
    k0, l0 = k + l // step, l % step
    return tuple((k0 - j, l0 + j * step) for j in range(k0 + 1))


# -- wall <-> block-set conversion, used by slides and bar reduction --


def _blocks_of(wall):
    """Added blocks as {(column, level): set of parts}."""
    table = _table_of(wall)
    blocks = {}
    for k, (m, top) in enumerate(wall.columns):
        for l in range(m):
            blocks[(k, l)] = set(_needed_parts(table, k, l))
        if top != TopState.FLAT:
            blocks[(k, m)] = {_TOP_PART[top]}
    return blocks


def _column_from_levels(table, k, levels):
    """Rebuild a column state from {level: parts}; ValueError if the
    parts do not stack into a legal column."""
    m = 0
    while set(levels.get(m, ())) == set(_needed_parts(table, k, m)):
        m += 1
    have = set(levels.get(m, ()))
    top = TopState.FLAT
    if have:
        if _prefilled_part(table, k, m) is not None:
            raise ValueError("column %d: partial cell on prefilled level" % k)
        kind = cube_at(table, k, m).kind
        if kind == SPLIT_HORIZ and have == {"lower"}:
            top = TopState.HALF2
        elif kind == SPLIT_VERT and have == {"front"}:
            top = TopState.FRONT3
        elif kind == SPLIT_VERT and have == {"back"}:
            top = TopState.BACK3
        else:
            raise ValueError("column %d: cell %d holds %s" % (k, m, sorted(have)))
    for l, parts in levels.items():
        if l > m and parts:
            raise ValueError("column %d: floating blocks at level %d" % (k, l))
    return Column(m, top)


def _wall_from_blocks(tag, lam, blocks):
    table = pattern_table(tag, lam)
    width = max((k for (k, _), parts in blocks.items() if parts), default=-1) + 1
    per_column = [{} for _ in range(width)]
    for (k, l), parts in blocks.items():
        if parts:
            per_column[k][l] = parts
    cols = [_column_from_levels(table, k, levels) for k, levels in enumerate(per_column)]
    for k in range(1, len(cols)):
        if not _covers(cols[k - 1], cols[k]):
            raise ValueError("column %d is not covered by its right neighbor" % k)
    while cols and cols[-1] == EMPTY_COLUMN:
        cols.pop()
    return Wall(tag, lam, tuple(cols))


def _slots_on_ladder(table, rungs, color, want):
    """First `want` color slots along the ladder, bottom rung first.
    Prefilled halves are the ground's, never slots."""
    slots = []
    for kk, ll in rungs:
        cell = cube_at(table, kk, ll)
        if cell.kind == WHOLE:
            parts = ("whole",)
        elif cell.kind == SPLIT_HORIZ:
            parts = ("lower", "upper")
        else:
            parts = ("front", "back")
        pre = _prefilled_part(table, kk, ll)
        for part in parts:
            if part != pre and _part_color(cell, part) == color:
                slots.append((kk, ll, part))
                if len(slots) == want:
                    return slots
    raise AssertionError("ladder ran out of %d-slots" % color)


def reduced_form(wall):
    """Slide every block down its ladder as far as it goes: within each
    ladder, the i-blocks end up in the lowest i-slots. One pass, since
    different (ladder, color) groups never exchange positions."""
    data = cartan_data(wall.tag)
    step = data.ladder_step
    if step == 0:
        raise ValueError("%s has ladder step 0; no reduced form" % (wall.tag,))
    table = _table_of(wall)
    blocks = _blocks_of(wall)
    groups = {}
    for (k, l), parts in blocks.items():
        cell = cube_at(table, k, l)
        for part in parts:
            key = (k + l // step, l % step, _part_color(cell, part))
            groups.setdefault(key, []).append((k, l, part))
    for (k0, l0, color), members in groups.items():
        rungs = ((k0 - j, l0 + j * step) for j in range(k0 + 1))
        target = _slots_on_ladder(table, rungs, color, len(members))
        for k, l, part in members:
            blocks[(k, l)].discard(part)
        for k, l, part in target:
            blocks.setdefault((k, l), set()).add(part)
    return _wall_from_blocks(wall.tag, wall.lambda_index, blocks)


def is_reduced(wall):
    return reduced_form(wall) == wall


def bar_step(wall):
    """Strip the top block b of the leftmost column together with every
    block of the same color on the ladder through b. Returns the bare
    wall, the color and how many blocks came off."""
    if not wall.columns:
        raise NothingToRemove("the ground-state wall has no blocks")
    table = _table_of(wall)
    k = len(wall.columns) - 1
    m, top = wall.columns[k]
    if top != TopState.FLAT:
        l, part = m, _TOP_PART[top]
    else:
        l = m - 1
        kind = cube_at(table, k, l).kind
        part = {WHOLE: "whole", SPLIT_HORIZ: "upper", SPLIT_VERT: "front"}[kind]
    color = _part_color(cube_at(table, k, l), part)
    rungs = set(ladder((k, l), cartan_data(wall.tag)))
    blocks = _blocks_of(wall)
    removed = 0
    for (kk, ll), parts in blocks.items():
        if (kk, ll) not in rungs:
            continue
        cell = cube_at(table, kk, ll)
        for p in list(parts):
            if _part_color(cell, p) == color:
                parts.discard(p)
                removed += 1
    bare = _wall_from_blocks(wall.tag, wall.lambda_index, blocks)
    return bare, color, removed


# -- serialization --


def wall_to_json(wall):
    return {
        "tag": str(wall.tag),
        "lambda": wall.lambda_index,
        "columns": [
            {"cubes": m, "top": _TOP_TOKEN[top]} for m, top in wall.columns
        ],
    }


def _validated(wall):
    table = _table_of(wall)
    for k, (m, top) in enumerate(wall.columns):
        if m < 0:
            raise ValueError("column %d has negative height" % k)
        if top != TopState.FLAT:
            kind = cube_at(table, k, m).kind
            ok = (
                (top == TopState.HALF2 and kind == SPLIT_HORIZ)
                or (top in (TopState.FRONT3, TopState.BACK3) and kind == SPLIT_VERT)
            )
            if not ok or _prefilled_part(table, k, m) is not None:
                raise ValueError("column %d: top %s does not fit cell %d"
                                 % (k, _TOP_TOKEN[top], m))
    cols = wall.columns
    for k in range(1, len(cols)):
        if not _covers(cols[k - 1], cols[k]):
            raise ValueError("column %d is not covered by its right neighbor" % k)
    if cols and cols[-1] == EMPTY_COLUMN:
        raise ValueError("trailing empty column")
    return wall


def wall_from_json(doc):
    tag = AlgebraTag.parse(doc["tag"])
    lam = doc["lambda"]
    pattern_table(tag, lam)
    cols = []
    for entry in doc["columns"]:
        top = _TOKEN_TOP.get(entry["top"])
        if top is None:
            raise ValueError("unknown top state %r" % (entry["top"],))
        cols.append(Column(int(entry["cubes"]), top))
    return _validated(Wall(tag, lam, tuple(cols)))


def wall_to_compact(wall):
    if not wall.columns:
        return "ground"
    return "/".join("%d.%s" % (m, _TOP_TOKEN[top]) for m, top in wall.columns)


def wall_from_compact(tag, lambda_index, text):
    if isinstance(tag, str):
        tag = AlgebraTag.parse(tag)
    pattern_table(tag, lambda_index)
    if text in ("", "ground"):
        return Wall(tag, lambda_index, ())
    cols = []
    for piece in text.split("/"):
        cubes, _, token = piece.partition(".")
        top = _TOKEN_TOP.get(token)
        if top is None:
            raise ValueError("unknown top state %r" % (token,))
        cols.append(Column(int(cubes), top))
    return _validated(Wall(tag, lambda_index, tuple(cols)))
