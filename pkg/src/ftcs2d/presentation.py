"""Labelled directed graph presentations of a 2D constrained system.

Vertices are the identifiers of allowed h x w blocks.  A blue edge u -> v
appends one row: the last h-1 rows of block(u) must equal the first h-1 rows
of block(v), and the edge label is the h-th row of block(v).  A red edge
u -> v appends one column under the mirrored h x (w-1) overlap, labelled by
the w-th column of block(v).  For h = 1 (resp. w = 1) the overlap is empty and
the blue (resp. red) relation is complete, self-loops included.

The combined graph carries both edge sets over the shared vertex set.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .blocks import Block, ConstraintSystem

ROW = "row"
COLUMN = "column"
COMBINED = "combined"


@dataclass(frozen=True, eq=False)
class Presentation:
    system: ConstraintSystem
    kind: str
    blue: dict[int, tuple[int, ...]]  # ascending successor lists
    red: dict[int, tuple[int, ...]]

    @property
    def vertices(self) -> range:
        return range(1, self.system.size + 1)

    @property
    def n_blue(self) -> int:
        return sum(len(v) for v in self.blue.values())

    @property
    def n_red(self) -> int:
        return sum(len(v) for v in self.red.values())

    def blue_out(self, u: int) -> tuple[int, ...]:
        return self.blue.get(u, ())

    def red_out(self, u: int) -> tuple[int, ...]:
        return self.red.get(u, ())

    @cached_property
    def _blue_sets(self) -> dict[int, frozenset[int]]:
        return {u: frozenset(vs) for u, vs in self.blue.items()}

    @cached_property
    def _red_sets(self) -> dict[int, frozenset[int]]:
        return {u: frozenset(vs) for u, vs in self.red.items()}

    def has_blue(self, u: int, v: int) -> bool:
        return v in self._blue_sets.get(u, frozenset())

    def has_red(self, u: int, v: int) -> bool:
        return v in self._red_sets.get(u, frozenset())

    def blue_label(self, u: int, v: int) -> Block:
        """Label of blue edge u -> v: the h-th row of block(v), as a 1 x w block."""
        if not self.has_blue(u, v):
            raise ValueError(f"no blue edge {u} -> {v}")
        return self.system.block(v).row_block(self.system.h)

    def red_label(self, u: int, v: int) -> Block:
        """Label of red edge u -> v: the w-th column of block(v), as an h x 1 block."""
        if not self.has_red(u, v):
            raise ValueError(f"no red edge {u} -> {v}")
        return self.system.block(v).col_block(self.system.w)

    @cached_property
    def quadruple_table(self) -> "QuadrupleTable":
        return quadruples(self)


def _successors_by_overlap(cs: ConstraintSystem, drop_first, drop_last) -> dict[int, tuple[int, ...]]:
    # bucket targets by their leading overlap; source matches via its trailing overlap
    by_prefix: dict[Block, list[int]] = defaultdict(list)
    for v in range(1, cs.size + 1):
        by_prefix[drop_last(cs.block(v))].append(v)
    out = {}
    for u in range(1, cs.size + 1):
        succ = by_prefix.get(drop_first(cs.block(u)), ())
        if succ:
            out[u] = tuple(succ)
    return out


def row_presentation(cs: ConstraintSystem) -> Presentation:
    """Blue edges only: u -> v iff the last h-1 rows of u equal the first h-1 rows of v."""
    blue = _successors_by_overlap(cs, Block.suffix_row, Block.prefix_row)
    return Presentation(cs, ROW, blue, {})


def column_presentation(cs: ConstraintSystem) -> Presentation:
    """Red edges only: u -> v iff the last w-1 columns of u equal the first w-1 columns of v."""
    red = _successors_by_overlap(cs, Block.suffix_col, Block.prefix_col)
    return Presentation(cs, COLUMN, {}, red)


def combined(gr: Presentation, gc: Presentation) -> Presentation:
    """Union of the row-wise and column-wise edge sets over the shared vertices."""
    if gr.kind != ROW or gc.kind != COLUMN:
        raise ValueError(f"expected a row and a column presentation, got {gr.kind}/{gc.kind}")
    if gr.system is not gc.system:
        raise ValueError("presentations built from different systems")
    return Presentation(gr.system, COMBINED, gr.blue, gc.red)


def build(cs: ConstraintSystem) -> Presentation:
    """Convenience: build both presentations and combine them."""
    return combined(row_presentation(cs), column_presentation(cs))


@dataclass(frozen=True, eq=False)
class QuadrupleTable:
    """Compatible identifier 4-tuples (a, b, c, d) for four adjacent grid cells.

    a, b, c, d sit at top-left, top-right, bottom-left, bottom-right; the tuple
    is present iff red a->b, blue a->c, red c->d and blue b->d all exist, i.e.
    both the red-then-blue and blue-then-red paths from a to d exist.
    """

    quads: frozenset[tuple[int, int, int, int]]
    by_corner: dict[tuple[int, int, int], tuple[int, ...]] = field(repr=False)

    def completions(self, a: int, b: int, c: int) -> tuple[int, ...]:
        """All d with (a, b, c, d) compatible, ascending."""
        return self.by_corner.get((a, b, c), ())

    def __len__(self) -> int:
        return len(self.quads)

    def __contains__(self, quad: tuple[int, int, int, int]) -> bool:
        return quad in self.quads

    def __iter__(self) -> Iterator[tuple[int, int, int, int]]:
        return iter(self.quads)


def quadruples(g: Presentation) -> QuadrupleTable:
    """Enumerate all compatible four-adjacent-vertex path combinations."""
    if g.kind != COMBINED:
        raise ValueError("quadruples require the combined graph")
    quads = set()
    by_corner = {}
    for a in g.vertices:
        for b in g.red_out(a):
            blue_from_b = g._blue_sets.get(b, frozenset())
            for c in g.blue_out(a):
                ds = sorted(blue_from_b & g._red_sets.get(c, frozenset()))
                if ds:
                    by_corner[(a, b, c)] = tuple(ds)
                    quads.update((a, b, c, d) for d in ds)
    return QuadrupleTable(frozenset(quads), by_corner)


@dataclass(frozen=True, eq=False)
class ClassView:
    """The column presentation viewed with a fixed head block.

    Every horizontal strip enumerated from the view starts at its head; the
    full family of views (one per identifier) organizes row-by-row generation.
    """

    presentation: Presentation
    head: int

    def strips(self, n: int) -> Iterator[Block]:
        """All h x n blocks generated by red paths starting at the head."""
        g, cs = self.presentation, self.presentation.system
        if n < cs.w:
            raise ValueError(f"strip width {n} below window width {cs.w}")

        def extend(v: int, block: Block, remaining: int) -> Iterator[Block]:
            if remaining == 0:
                yield block
                return
            for nxt in g.red_out(v):
                yield from extend(nxt, block.concat_col(g.red_label(v, nxt)), remaining - 1)

        yield from extend(self.head, cs.block(self.head), n - cs.w)


def class_view(gc: Presentation, k: int) -> ClassView:
    if gc.kind != COLUMN:
        raise ValueError("class views are built over the column presentation")
    if not 1 <= k <= gc.system.size:
        raise ValueError(f"identifier {k} out of range 1..{gc.system.size}")
    return ClassView(gc, k)


def class_connections(g: Presentation) -> frozenset[tuple[int, int]]:
    """Pairs (k, k') with a blue edge k -> k': the class-to-class connection graph."""
    if g.kind != COMBINED:
        raise ValueError("class connections require the combined graph")
    return frozenset((u, v) for u, vs in g.blue.items() for v in vs)
