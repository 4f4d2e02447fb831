"""Crystal structure on proper Young walls.

Each column gets a short word of +'s (room for i-blocks) and -'s
(i-blocks that can come off). A step counts only if the wall stays
weakly decreasing and proper, so a column contributes at most two
symbols and the five shapes --, -, -+, +, ++ are the only ones that
occur. Reading the columns leftmost first and cancelling (+,-) pairs
leaves the i-signature; the abstract Kashiwara operators act on its
outer symbols.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import NamedTuple

from .cartan import Weight, cartan_data
from .pattern import SPLIT_HORIZ, SPLIT_VERT, cube_at, pattern_table
from .wall import (
    Column,
    TopState,
    Wall,
    _column_additions,
    _column_removals,
    _covers,
    _needed_parts,
    _part_color,
    _prefilled_part,
    _with_column,
    color_counts,
    ground_wall,
    is_proper,
    partition_of,
    total_cmp,
    wall_to_compact,
)


class SignatureEntry(NamedTuple):
    sign: str  # "+" or "-"
    column: int


def wt(wall):
    return Weight(wall.lambda_index, tuple(
        color_counts(wall)[i] for i in cartan_data(wall.tag).index_set))


def _i_removal(wall, k, i):
    """Remove the i-block on top of column k if the result is a wall."""
    if k >= len(wall.columns):
        return None
    table = pattern_table(wall.tag, wall.lambda_index)
    for ref, col in _column_removals(table, k, wall.column(k)):
        if ref.color == i and _covers(col, wall.column(k + 1)):
            return _with_column(wall, k, col)
    return None


def _i_addition(wall, k, i):
    """Add an i-block onto column k if the result is a wall."""
    if k > len(wall.columns):
        return None
    table = pattern_table(wall.tag, wall.lambda_index)
    for ref, col in _column_additions(table, k, wall.column(k)):
        if ref.color == i and (k == 0 or _covers(wall.column(k - 1), col)):
            return _with_column(wall, k, col)
    return None


def _column_word(wall, k, i):
    """The +/- word of column k: up to two i-removals, then up to two
    i-additions, simulated one block at a time; every intermediate
    wall must stay proper."""
    removals = 0
    cur = wall
    while removals < 2:
        nxt = _i_removal(cur, k, i)
        if nxt is None or not is_proper(nxt):
            break
        cur, removals = nxt, removals + 1
    additions = 0
    cur = wall
    while additions < 2:
        nxt = _i_addition(cur, k, i)
        if nxt is None or not is_proper(nxt):
            break
        cur, additions = nxt, additions + 1
    if removals == 2:
        return "--"
    if removals == 1:
        return "-+" if additions else "-"
    return ("", "+", "++")[additions]


def signature(wall, i):
    """Raw and reduced i-signatures as (sign, column) entries, written
    leftmost column first. The reduced one has every (+,-) pair
    cancelled, leaving -'s followed by +'s."""
    raw = []
    for k in range(len(wall.columns), -1, -1):
        for sign in _column_word(wall, k, i):
            raw.append(SignatureEntry(sign, k))
    minus, plus = [], []
    for entry in raw:
        if entry.sign == "+":
            plus.append(entry)
        elif plus:
            plus.pop()
        else:
            minus.append(entry)
    return tuple(raw), tuple(minus + plus)


def eps(wall, i):
    return sum(1 for e in signature(wall, i)[1] if e.sign == "-")


def phi(wall, i):
    return sum(1 for e in signature(wall, i)[1] if e.sign == "+")


def kashiwara_E(wall, i):
    """Remove the i-block at the rightmost - of the i-signature, or
    None when there is no -."""
    reduced = signature(wall, i)[1]
    spots = [e.column for e in reduced if e.sign == "-"]
    if not spots:
        return None
    return _i_removal(wall, spots[-1], i)


def kashiwara_F(wall, i):
    """Add an i-block at the leftmost + of the i-signature, or None
    when there is no +."""
    reduced = signature(wall, i)[1]
    spots = [e.column for e in reduced if e.sign == "+"]
    if not spots:
        return None
    return _i_addition(wall, spots[0], i)


def block_count(wall):
    return sum(partition_of(wall))


def crystal_graph(tag, lambda_index, max_blocks):
    """The part of the highest-weight crystal reachable from the
    ground-state wall using at most max_blocks blocks. Returns
    (vertices, edges): vertices in decreasing total order, edges as
    (source index, color, target index)."""
    start = ground_wall(tag, lambda_index)
    data = cartan_data(start.tag)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for y in frontier:
            for i in data.index_set:
                z = kashiwara_F(y, i)
                if z is not None and block_count(z) <= max_blocks and z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    vertices = sorted(seen, key=cmp_to_key(total_cmp), reverse=True)
    index = {y: j for j, y in enumerate(vertices)}
    edges = []
    for j, y in enumerate(vertices):
        for i in data.index_set:
            z = kashiwara_F(y, i)
            if z is not None and z in index:
                edges.append((j, i, index[z]))
    edges.sort()
    return vertices, edges


def graph_to_json(vertices, edges):
    head = vertices[0]
    return {
        "tag": str(head.tag),
        "lambda": head.lambda_index,
        "vertices": [wall_to_compact(y) for y in vertices],
        "edges": [list(e) for e in edges],
    }


def graph_to_dot(vertices, edges):
    lines = ["digraph crystal {", "  rankdir=TB;", '  node [shape=box];']
    for j, y in enumerate(vertices):
        lines.append('  v%d [label="%s"];' % (j, wall_to_compact(y)))
    for src, i, dst in edges:
        lines.append('  v%d -> v%d [label="%d"];' % (src, dst, i))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _column_states(table, k, max_count):
    """Legal states of column k with at most max_count blocks, paired
    with their color usage, in increasing height order."""
    out = []
    usage = {}
    m = count = 0
    while True:
        cell = cube_at(table, k, m)
        if count + 1 <= max_count and _prefilled_part(table, k, m) is None:
            if cell.kind == SPLIT_HORIZ:
                u = dict(usage)
                u[cell.lower] = u.get(cell.lower, 0) + 1
                out.append((Column(m, TopState.HALF2), u))
            elif cell.kind == SPLIT_VERT:
                for part, top in (("front", TopState.FRONT3), ("back", TopState.BACK3)):
                    u = dict(usage)
                    c = _part_color(cell, part)
                    u[c] = u.get(c, 0) + 1
                    out.append((Column(m, top), u))
        parts = _needed_parts(table, k, m)
        if count + len(parts) > max_count:
            return out
        count += len(parts)
        for part in parts:
            c = _part_color(cell, part)
            usage[c] = usage.get(c, 0) + 1
        m += 1
        out.append((Column(m, TopState.FLAT), dict(usage)))


def enumerate_proper(tag, lambda_index, weight):
    """All proper walls whose i-block counts match the weight, sorted
    in decreasing total order. weight is a Weight or a count tuple."""
    start = ground_wall(tag, lambda_index)
    table = pattern_table(start.tag, lambda_index)
    data = cartan_data(start.tag)
    counts = tuple(weight.k) if isinstance(weight, Weight) else tuple(weight)
    if len(counts) != len(data.index_set):
        raise ValueError("weight needs %d entries" % len(data.index_set))
    budget = dict(enumerate(counts))
    total = sum(counts)
    skip_properness = start.tag.family == "A1"
    found = []

    def extend(k, cols, prev, budget, left, heights):
        if left == 0:
            found.append(Wall(start.tag, lambda_index, tuple(cols)))
            return
        for col, usage in _column_states(table, k, left):
            if prev is not None and not _covers(prev, col):
                continue
            if any(usage.get(i, 0) > budget[i] for i in usage):
                continue
            taken = heights
            if not skip_properness and col.top == TopState.FLAT:
                if col.cubes in heights:
                    continue
                taken = heights | {col.cubes}
            used = sum(usage.values())
            extend(k + 1, cols + [col],
                   col, {i: budget[i] - usage.get(i, 0) for i in budget},
                   left - used, taken)

    extend(0, [], None, budget, total, frozenset())
    return sorted(found, key=cmp_to_key(total_cmp), reverse=True)


def maximal_vector_count(tag, lambda_index, m):
    """Number of highest-weight vectors the Fock space has m whole
    delta-columns below the highest weight: proper walls of that
    weight with no legal i-removal string at all."""
    data = cartan_data(ground_wall(tag, lambda_index).tag)
    target = tuple(m * data.a[i] for i in data.index_set)
    count = 0
    for y in enumerate_proper(tag, lambda_index, target):
        if all(eps(y, i) == 0 for i in data.index_set):
            count += 1
    return count
