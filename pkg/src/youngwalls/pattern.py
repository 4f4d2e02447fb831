"""Wall-building patterns for each family and level-1 highest weight.

A pattern says which colored block occupies the unit cell at (column k,
level l): a whole cube, a horizontally split pair (lower/upper half
height), or a vertically split pair (front/back half thickness, drawn
as upper-left/lower-right triangles). Patterns are periodic: vertically
with period equal to the delta-column volume, horizontally with period
1, 2 or n+1. The ground-state wall may prefill part of level 0, which
is recorded per column class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import AlgebraTag, cartan_data

WHOLE = "whole"
SPLIT_HORIZ = "split_horiz"
SPLIT_VERT = "split_vert"

# Ground prefill tokens. FullStrip = the frame fills everything below
# level 0 and nothing in it, so columns start empty.
LOWER_HALF = "LowerHalfOfLevel0"
BACK_HALF = "BackHalfOfLevel0"
FULL_STRIP = "FullStrip"


class UnsupportedWeight(Exception):
    """The family has no wall model on this fundamental weight."""


@dataclass(frozen=True)
class CubeSpec:
    """Contents of one unit cell: kind plus the colors of its parts.

    colors is (c,) for a whole cube, (lower, upper) for a horizontal
    split and (front, back) for a vertical split.
    """

    kind: str
    colors: tuple

    @property
    def color(self):
        assert self.kind == WHOLE
        return self.colors[0]

    @property
    def lower(self):
        assert self.kind == SPLIT_HORIZ
        return self.colors[0]

    @property
    def upper(self):
        assert self.kind == SPLIT_HORIZ
        return self.colors[1]

    @property
    def front(self):
        assert self.kind == SPLIT_VERT
        return self.colors[0]

    @property
    def back(self):
        assert self.kind == SPLIT_VERT
        return self.colors[1]

    def part_colors(self):
        """Colors with multiplicity, one entry per block in the cell."""
        return self.colors

    def render(self):
        if self.kind == WHOLE:
            return "[%d]" % self.colors
        if self.kind == SPLIT_HORIZ:
            return "[%d/%d]" % self.colors  # lower/upper
        return "[%d\\%d]" % self.colors  # front\back


def Whole(color):
    return CubeSpec(WHOLE, (color,))


def SplitHoriz(lower, upper):
    return CubeSpec(SPLIT_HORIZ, (lower, upper))


def SplitVert(front, back):
    return CubeSpec(SPLIT_VERT, (front, back))


@dataclass(frozen=True)
class PatternTable:
    tag: AlgebraTag
    lambda_index: int
    horiz_period: int
    vert_period: int
    cubes: tuple  # cubes[class][level], level 0 at the bottom
    ground_prefill: tuple  # one token (or None) per column class

    def column_class(self, column):
        return column % self.horiz_period

    def prefill_at(self, column):
        return self.ground_prefill[self.column_class(column)]


def cube_at(table, column, level):
    """The cell at (column, level); periodic in both directions."""
    return table.cubes[column % table.horiz_period][level % table.vert_period]


def _updown(middle):
    """[x_1..x_m] -> x_1..x_m, x_{m-1}..x_1: up to the peak and back,
    peak unrepeated. The base cell of the next period follows x_1."""
    return middle + middle[-2::-1]


@lru_cache(maxsize=None)
def _table(tag, lam):
    n = tag.n
    fam = tag.family
    data = cartan_data(tag)
    if lam not in data.supported_weights:
        raise UnsupportedWeight("%s has no wall model on weight %d" % (tag, lam))
    delta = data.delta_volume

    if fam == "A1":
        if n == 1:
            cols = tuple(
                (SplitHoriz((lam - k) % 2, (lam - k + 1) % 2),) for k in range(2)
            )
            return PatternTable(tag, lam, 2, 1, cols, (FULL_STRIP,) * 2)
        cols = tuple(
            tuple(Whole((lam + l - k) % (n + 1)) for l in range(delta))
            for k in range(n + 1)
        )
        return PatternTable(tag, lam, n + 1, delta, cols, (FULL_STRIP,) * (n + 1))

    if fam == "A2even":
        col = tuple([SplitHoriz(0, 0)] + [Whole(c) for c in _updown(list(range(1, n + 1)))])
        return PatternTable(tag, lam, 1, delta, (col,), (LOWER_HALF,))

    if fam == "D2":
        ring = [SplitHoriz(0, 0)] + [Whole(c) for c in range(1, n)] + [
            SplitHoriz(n, n)] + [Whole(c) for c in range(n - 1, 0, -1)]
        if lam == n:
            ring = ring[n:] + ring[:n]  # start the period at the n-pair
        return PatternTable(tag, lam, 1, delta, (tuple(ring),), (LOWER_HALF,))

    if fam == "A2odd":
        # front/back colors of the base cell alternate along the row;
        # lam = 0 puts 0 in front on even columns, lam = 1 swaps them.
        def col(k):
            front = (lam + k) % 2
            cells = [SplitVert(front, 1 - front)]
            cells += [Whole(c) for c in _updown(list(range(2, n + 1)))]
            return tuple(cells)

        return PatternTable(tag, lam, 2, delta, (col(0), col(1)), (BACK_HALF,) * 2)

    if fam == "D1":
        def col(k):
            if lam in (0, 1):
                base_front = (lam + k) % 2
                mid_front = n - 1 if k % 2 == 0 else n
                cells = [SplitVert(base_front, 1 - base_front)]
                cells += [Whole(c) for c in range(2, n - 1)]
                cells += [SplitVert(mid_front, 2 * n - 1 - mid_front)]
                cells += [Whole(c) for c in range(n - 2, 1, -1)]
            else:
                # lam is n-1 or n: the pattern starts at the n-1|n cell
                base_front = n - 1 if (lam + k - n + 1) % 2 == 0 else n
                mid_front = k % 2
                cells = [SplitVert(base_front, 2 * n - 1 - base_front)]
                cells += [Whole(c) for c in range(n - 2, 1, -1)]
                cells += [SplitVert(mid_front, 1 - mid_front)]
                cells += [Whole(c) for c in range(2, n - 1)]
            return tuple(cells)

        return PatternTable(tag, lam, 2, delta, (col(0), col(1)), (BACK_HALF,) * 2)

    # B1
    if lam in (0, 1):
        def col(k):
            front = (lam + k) % 2
            cells = [SplitVert(front, 1 - front)]
            cells += [Whole(c) for c in range(2, n)]
            cells += [SplitHoriz(n, n)]
            cells += [Whole(c) for c in range(n - 1, 1, -1)]
            return tuple(cells)

        return PatternTable(tag, lam, 2, delta, (col(0), col(1)), (BACK_HALF,) * 2)

    def col(k):
        front = k % 2  # middle 0|1 cell: 0 in front on even columns
        cells = [SplitHoriz(n, n)]
        cells += [Whole(c) for c in range(n - 1, 1, -1)]
        cells += [SplitVert(front, 1 - front)]
        cells += [Whole(c) for c in range(2, n)]
        return tuple(cells)

    return PatternTable(tag, lam, 2, delta, (col(0), col(1)), (LOWER_HALF,) * 2)


def pattern_table(tag, lambda_index):
    """The building pattern for (tag, Lambda). Cached; tables are static."""
    if isinstance(tag, str):
        tag = AlgebraTag.parse(tag)
    return _table(tag, lambda_index)


def pattern_checksums(table):
    """Per column class: (color -> block count, total volume) over one
    vertical period. Tests pin these against the Cartan data."""
    out = []
    for cells in table.cubes:
        counts = {}
        volume = 0
        for cell in cells:
            for c in cell.part_colors():
                counts[c] = counts.get(c, 0) + 1
            volume += 1  # every cell has unit volume, split or not
        out.append((counts, volume))
    return out


def dump_pattern(table):
    """Human-readable table, one vertical period, top level first."""
    lines = [
        "%s, highest weight %d: %d level(s) x %d column class(es), prefill %s"
        % (
            table.tag,
            table.lambda_index,
            table.vert_period,
            table.horiz_period,
            "/".join(str(p) for p in table.ground_prefill),
        )
    ]
    for l in range(table.vert_period - 1, -1, -1):
        row = "  ".join(table.cubes[c][l].render() for c in range(table.horiz_period))
        lines.append("  level %2d: %s" % (l, row))
    return "\n".join(lines)
