"""Block designs and Youden squares built from difference sets.

The development of a difference set (all right translates) is a symmetric
2-design; writing the translates as the columns of a k x v array gives a
Youden square, and deleting one column together with its symbols yields the
RL form of a (at least) double array.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .arrays import BLANK, RowColumnArray
from .diffsets import DifferenceSet
from .errors import DesignRejection
from .groups import FiniteGroup


@dataclass(frozen=True)
class BlockDesign:
    """A list of blocks over points 0..point_count-1; repeats kept as given."""

    point_count: int
    blocks: tuple[tuple[int, ...], ...]
    params: tuple[int, int, int, int, int] | None = None   # (v, b, r, k, lam) once verified

    @property
    def is_symmetric(self) -> bool:
        return len(self.blocks) == self.point_count

    def incidence(self) -> np.ndarray:
        out = np.zeros((len(self.blocks), self.point_count), dtype=np.uint8)
        for i, block in enumerate(self.blocks):
            out[i, list(block)] = 1
        return out


def verify_sbibd(bd: BlockDesign) -> tuple[int, int, int]:
    """Accept iff the blocks form a symmetric 2-design; returns (v, k, lam).

    Checks, in order: constant proper block size, v = b, constant
    replication, constant pairwise coverage. The first violated condition is
    reported with a witness point or pair.
    """
    v, b = bd.point_count, len(bd.blocks)
    if b == 0:
        raise DesignRejection("no blocks", condition="block-count")
    sizes = [len(set(block)) for block in bd.blocks]
    k = sizes[0]
    for i, s in enumerate(sizes):
        if s != k or len(bd.blocks[i]) != s:
            raise DesignRejection(f"block {i} has size {len(bd.blocks[i])}, expected {k}",
                                  condition="block-size", witness=i)
    if not 0 < k < v:
        raise DesignRejection(f"blocks must be proper subsets (k={k}, v={v})",
                              condition="proper-blocks")
    if v != b:
        raise DesignRejection(f"not symmetric: v={v} points but b={b} blocks",
                              condition="symmetry")
    inc = bd.incidence()
    replication = inc.sum(axis=0)
    r = int(replication[0])
    if not (replication == r).all():
        p = int(np.argwhere(replication != r)[0][0])
        raise DesignRejection(f"point {p} lies in {int(replication[p])} blocks, expected {r}",
                              condition="replication", witness=p)
    pair_counts = _backend.common_counts(inc.T.copy(), inc.T.copy())
    off = pair_counts[~np.eye(v, dtype=bool)]
    lam = int(off[0])
    if not (off == lam).all():
        flat = pair_counts.copy()
        np.fill_diagonal(flat, lam)
        p, q = (int(x) for x in np.argwhere(flat != lam)[0])
        raise DesignRejection(
            f"pair ({p},{q}) lies in {int(pair_counts[p, q])} blocks, expected {lam}",
            condition="pair-count", witness=(p, q))
    return (v, k, lam)


def develop(d: DifferenceSet) -> BlockDesign:
    """dev(D): the v right translates Dg as blocks indexed by g, verified."""
    table = d.group.mul_table
    m = np.asarray(d.members, dtype=np.intp)
    blocks = tuple(tuple(sorted(int(x) for x in table[m, g])) for g in range(d.group.order))
    bd = BlockDesign(d.group.order, blocks)
    v, k, lam = verify_sbibd(bd)
    return BlockDesign(d.group.order, blocks, params=(v, v, k, k, lam))


@dataclass(frozen=True, eq=False)
class YoudenSquare:
    """k x v array: rows indexed by the chosen order of D, columns by G."""

    group: FiniteGroup
    row_elements: tuple[int, ...]
    cells: np.ndarray              # (k, v) element indices; column j is D*g_j

    def __post_init__(self):
        cells = np.ascontiguousarray(np.asarray(self.cells, dtype=np.int16))
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "row_elements", tuple(self.row_elements))

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape

    def column_support(self, j: int) -> frozenset:
        return frozenset(int(x) for x in self.cells[:, j])

    def to_grid(self) -> str:
        names = self.group.names
        header = [""] + [names[j] for j in range(self.group.order)]
        body = [[names[self.row_elements[i]]] + [names[c] for c in self.cells[i]]
                for i in range(len(self.row_elements))]
        widths = [max(len(row[j]) for row in [header] + body) for j in range(len(header))]
        return "\n".join(" ".join(f"{cell:>{w}}" for cell, w in zip(row, widths)).rstrip()
                         for row in [header] + body)


def build_youden(d: DifferenceSet, first_column_order=None) -> YoudenSquare:
    """Cell (i, j) = i*j with rows the elements of D in the given order.

    The column under the identity then reads exactly D in that order. Any
    ordering gives a Youden square; the default is ascending element index.
    """
    group = d.group
    if first_column_order is None:
        rows = tuple(d.members)
    else:
        rows = tuple(group.index_of(x) for x in first_column_order)
        if sorted(rows) != list(d.members):
            raise ValueError("first column order must be a permutation of the set")
    cells = group.mul_table[np.ix_(rows, np.arange(group.order))]
    return YoudenSquare(group, rows, cells)


def verify_youden(y: YoudenSquare) -> tuple[int, int, int]:
    """Check YS1 (rows are permutations of G) and YS2 (columns form an SBIBD)."""
    k, v = y.shape
    aranged = np.arange(v, dtype=np.int16)
    for i in range(k):
        if not (np.sort(y.cells[i]) == aranged).all():
            raise DesignRejection(f"YS1 violated: row {i} is not a permutation of the symbols",
                                  condition="YS1", witness=i)
    blocks = tuple(tuple(sorted(int(x) for x in y.cells[:, j])) for j in range(v))
    try:
        return verify_sbibd(BlockDesign(v, blocks))
    except DesignRejection as exc:
        raise DesignRejection(f"YS2 violated: {exc}", condition="YS2",
                              witness=exc.witness) from exc


def delete_column(y: YoudenSquare, column) -> RowColumnArray:
    """Remove one column and blank every occurrence of its symbols (RL form).

    For a Youden square from a (v,k,lam) difference set this leaves v-k
    filled cells per row and k-lam per surviving column.
    """
    group = y.group
    col = group.index_of(column)
    k, v = y.shape
    deleted = y.column_support(col)
    keep_cols = [j for j in range(v) if j != col]
    survivors = [s for s in range(v) if s not in deleted]
    code = {s: i for i, s in enumerate(survivors)}
    cells = np.full((k, v - 1), BLANK, dtype=np.int32)
    for i in range(k):
        for jj, j in enumerate(keep_cols):
            val = int(y.cells[i, j])
            if val not in deleted:
                cells[i, jj] = code[val]
    names = group.names
    return RowColumnArray("rl",
                          tuple(names[x] for x in y.row_elements),
                          tuple(names[j] for j in keep_cols),
                          tuple(names[s] for s in survivors),
                          cells)


@dataclass(frozen=True)
class FourCycleReport:
    """Block collections from left/right/two-sided translates, and the verdicts
    of the four cyclic unions B1+B2, B2+B3, B3+B4, B4+B1 (None when degenerate)."""

    b1: tuple[frozenset, ...]
    b2: tuple[frozenset, ...]
    b3: tuple[frozenset, ...]
    b4: tuple[frozenset, ...]
    union_params: tuple[tuple[int, int, int] | None, ...]
    degenerate: bool

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return (len(self.b1), len(self.b2), len(self.b3), len(self.b4))


def four_cycle_blocks(d: DifferenceSet) -> FourCycleReport:
    """Partition translate families and verify the four cyclic unions.

    B1: left translates that are also right translates; B2: remaining left
    translates; B4: right translates that are not left; B3: two-sided
    translates xDy not already included (deduplicated as sets). When every
    left translate is a right translate (s = v) the partition is degenerate
    and only B1 = dev(D) remains.
    """
    group = d.group
    v = group.order
    table = group.mul_table
    m = np.asarray(d.members, dtype=np.intp)

    left = {frozenset(int(x) for x in table[g, m]) for g in range(v)}
    right = {frozenset(int(x) for x in table[m, g]) for g in range(v)}
    b1 = left & right
    b2 = left - right
    b4 = right - left
    two_sided = {frozenset(int(x) for x in table[table[x, m], y])
                 for x in range(v) for y in range(v)}
    b3 = two_sided - b1 - b2 - b4

    def ordered(blocks: set) -> tuple[frozenset, ...]:
        return tuple(sorted(blocks, key=lambda s: tuple(sorted(s))))

    parts = (ordered(b1), ordered(b2), ordered(b3), ordered(b4))
    if not b2:
        return FourCycleReport(*parts, union_params=(None, None, None, None),
                               degenerate=True)

    verdicts = []
    for first, second in ((0, 1), (1, 2), (2, 3), (3, 0)):
        blocks = tuple(tuple(sorted(s)) for s in parts[first] + parts[second])
        try:
            verdicts.append(verify_sbibd(BlockDesign(v, blocks)))
        except DesignRejection:
            verdicts.append(None)
    return FourCycleReport(*parts, union_params=tuple(verdicts), degenerate=False)
