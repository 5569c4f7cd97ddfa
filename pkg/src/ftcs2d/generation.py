"""Generating members of the constrained system from its combined graph.

A target m x n block is encoded by a grid of window identifiers s(i, j),
indexed by the right-bottom coordinate of each h x w window (h <= i <= m,
w <= j <= n).  Cells are filled one at a time:

* the very first cell (h, w) may take any vertex;
* a first-row cell (h, j) follows a red edge from s(h, j-1);
* a first-column cell (i, w) follows a blue edge from s(i-1, w);
* an interior cell needs its three upper-left neighbours and must close a
  compatible quadruple with them.

Greedy filling can dead-end for general forbidden sets, so the search
backtracks chronologically over the schedule; with backtracking exhausted the
target size is genuinely unrealizable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .blocks import Block, ConstraintSystem
from .presentation import COMBINED, ROW, COLUMN, Presentation


class DeadEnd(RuntimeError):
    """A cell had no candidates and backtracking was disabled or exhausted locally."""


class NotRealizable(RuntimeError):
    """Exhaustive backtracking proved no block of the requested size exists."""


ROW_MAJOR = "row-major"
COL_MAJOR = "col-major"
INTERLEAVED = "interleaved"
SCHEDULES = (ROW_MAJOR, COL_MAJOR, INTERLEAVED)


@dataclass
class GenerationPolicy:
    schedule: str = ROW_MAJOR
    chooser: str = "random"  # "random" (seeded shuffle) or "ordered" (ascending ids)
    backtracking: bool = True
    seed: int = 0


@dataclass
class GenerationStats:
    steps: int = 0
    backtracks: int = 0


class IdentifierGrid:
    """Partial map from right-bottom window coordinates to vertex identifiers."""

    def __init__(self, system: ConstraintSystem, m: int, n: int):
        if m < system.h or n < system.w:
            raise ValueError(f"target {m}x{n} below window size {system.h}x{system.w}")
        self.system = system
        self.m = m
        self.n = n
        self.cells: dict[tuple[int, int], int] = {}

    @property
    def grid_rows(self) -> int:
        return self.m - self.system.h + 1

    @property
    def grid_cols(self) -> int:
        return self.n - self.system.w + 1

    def coords(self) -> Iterator[tuple[int, int]]:
        for i in range(self.system.h, self.m + 1):
            for j in range(self.system.w, self.n + 1):
                yield (i, j)

    def _check(self, i: int, j: int) -> None:
        if not (self.system.h <= i <= self.m and self.system.w <= j <= self.n):
            raise ValueError(f"cell ({i},{j}) outside identifier grid of {self.m}x{self.n} target")

    def get(self, i: int, j: int) -> int | None:
        self._check(i, j)
        return self.cells.get((i, j))

    def set(self, i: int, j: int, k: int) -> None:
        self._check(i, j)
        self.system.block(k)  # range check
        self.cells[(i, j)] = k

    def unset(self, i: int, j: int) -> None:
        self.cells.pop((i, j), None)

    def filled(self, i: int, j: int) -> bool:
        return (i, j) in self.cells

    def complete(self) -> bool:
        return len(self.cells) == self.grid_rows * self.grid_cols

    def resize(self, m: int, n: int) -> None:
        """Grow the target size mid-process; filled cells stay valid because
        every constraint only references smaller coordinates."""
        if m < self.m or n < self.n:
            raise ValueError("identifier grids only grow")
        self.m = m
        self.n = n

    def to_block(self) -> Block:
        """Stitch window contents into the full block, checking overlap agreement."""
        if not self.complete():
            raise ValueError("grid is not completely filled")
        cs = self.system
        out: dict[tuple[int, int], int] = {}
        for (i, j), k in self.cells.items():
            win = cs.block(k)
            for di in range(cs.h):
                for dj in range(cs.w):
                    coord = (i - cs.h + 1 + di, j - cs.w + 1 + dj)
                    val = win.rows[di][dj]
                    old = out.setdefault(coord, val)
                    if old != val:
                        raise AssertionError(
                            f"overlap disagreement at {coord}: {old} vs {val}"
                        )
        return Block(
            tuple(
                tuple(out[(r, c)] for c in range(1, self.n + 1))
                for r in range(1, self.m + 1)
            )
        )


def case_of(i: int, j: int, h: int, w: int) -> int:
    """1 when the cell lies on the first grid row or column, else 2."""
    return 1 if i == h or j == w else 2


def schedule_cells(schedule: str, m: int, n: int, h: int, w: int) -> list[tuple[int, int]]:
    """Fill order for the identifier grid; every order keeps each cell after
    its upper/left predecessors."""
    rows = range(h, m + 1)
    cols = range(w, n + 1)
    if schedule == ROW_MAJOR:
        return [(i, j) for i in rows for j in cols]
    if schedule == COL_MAJOR:
        return [(i, j) for j in cols for i in rows]
    if schedule == INTERLEAVED:
        # column pairs, row-major inside each pair
        order = []
        for j0 in range(w, n + 1, 2):
            pair = [j for j in (j0, j0 + 1) if j <= n]
            order.extend((i, j) for i in rows for j in pair)
        return order
    raise ValueError(f"unknown schedule {schedule!r}; expected one of {SCHEDULES}")


def candidates(g: Presentation, grid: IdentifierGrid, i: int, j: int) -> tuple[int, ...]:
    """Identifiers that may occupy cell (i, j) given its filled predecessors."""
    if g.kind != COMBINED:
        raise ValueError("candidate sets require the combined graph")
    cs = g.system
    h, w = cs.h, cs.w
    grid._check(i, j)
    if i == h and j == w:
        return tuple(g.vertices)
    if i == h:
        left = grid.get(i, j - 1)
        if left is None:
            raise ValueError(f"predecessor ({i},{j - 1}) unfilled")
        return g.red_out(left)
    if j == w:
        up = grid.get(i - 1, j)
        if up is None:
            raise ValueError(f"predecessor ({i - 1},{j}) unfilled")
        return g.blue_out(up)
    diag, up, left = grid.get(i - 1, j - 1), grid.get(i - 1, j), grid.get(i, j - 1)
    if diag is None or up is None or left is None:
        raise ValueError(f"predecessors of ({i},{j}) unfilled")
    return g.quadruple_table.completions(diag, up, left)


def fill_grid(
    g: Presentation,
    grid: IdentifierGrid,
    policy: GenerationPolicy | None = None,
    stats: GenerationStats | None = None,
) -> None:
    """Fill every empty cell of the grid in schedule order, backtracking over
    cells placed here (pre-filled cells are never revisited)."""
    policy = policy or GenerationPolicy()
    if g.system.size == 0:
        raise NotRealizable("empty vertex set")
    order = [
        c for c in schedule_cells(policy.schedule, grid.m, grid.n, g.system.h, g.system.w)
        if not grid.filled(*c)
    ]
    rng = random.Random(policy.seed)

    def fill(idx: int) -> bool:
        if idx == len(order):
            return True
        i, j = order[idx]
        cand = list(candidates(g, grid, i, j))
        if policy.chooser == "random":
            rng.shuffle(cand)
        if not cand:
            if not policy.backtracking:
                raise DeadEnd(f"no candidates at cell ({i},{j})")
            if stats:
                stats.backtracks += 1
            return False
        if not policy.backtracking:
            cand = cand[:1]
        for k in cand:
            grid.set(i, j, k)
            if stats:
                stats.steps += 1
            if fill(idx + 1):
                return True
            grid.unset(i, j)
        if not policy.backtracking:
            raise DeadEnd(f"dead end below cell ({i},{j})")
        if stats:
            stats.backtracks += 1
        return False

    if not fill(0):
        raise NotRealizable(f"no {grid.m}x{grid.n} member exists")


def generate_block(
    g: Presentation,
    m: int,
    n: int,
    policy: GenerationPolicy | None = None,
    stats: GenerationStats | None = None,
) -> Block:
    """One m x n member built by filling a fresh identifier grid."""
    grid = IdentifierGrid(g.system, m, n)
    fill_grid(g, grid, policy, stats)
    return grid.to_block()


def enumerate_blocks(
    g: Presentation,
    m: int,
    n: int,
    schedule: str = ROW_MAJOR,
    stats: GenerationStats | None = None,
) -> Iterator[Block]:
    """Every m x n member, by exhaustive DFS in ascending-identifier order."""
    if g.kind != COMBINED:
        raise ValueError("enumeration requires the combined graph")
    grid = IdentifierGrid(g.system, m, n)
    order = schedule_cells(schedule, m, n, g.system.h, g.system.w)

    def walk(idx: int) -> Iterator[Block]:
        if idx == len(order):
            yield grid.to_block()
            return
        i, j = order[idx]
        cand = candidates(g, grid, i, j)
        if not cand and stats:
            stats.backtracks += 1
        for k in cand:
            grid.set(i, j, k)
            yield from walk(idx + 1)
            grid.unset(i, j)

    yield from walk(0)


# -- strip generation (single presentation, one axis) -------------------------


def _strip_search(
    out_edges, label, head: int, steps: int, start: Block, concat, rng: random.Random | None
) -> Block:
    def extend(v: int, block: Block, remaining: int) -> Block | None:
        if remaining == 0:
            return block
        succ = list(out_edges(v))
        if rng is not None:
            rng.shuffle(succ)
        for nxt in succ:
            got = extend(nxt, concat(block, label(v, nxt)), remaining - 1)
            if got is not None:
                return got
        return None

    got = extend(head, start, steps)
    if got is None:
        raise DeadEnd(f"no strip of required length from head {head}")
    return got


def generate_row_strip(
    gr: Presentation, head: int, m: int, rng: random.Random | None = None
) -> Block:
    """An m x w block generated by a blue path starting at block(head)."""
    if gr.kind not in (ROW, COMBINED):
        raise ValueError("row strips need blue edges")
    cs = gr.system
    if m < cs.h:
        raise ValueError(f"strip height {m} below window height {cs.h}")
    return _strip_search(
        gr.blue_out, gr.blue_label, head, m - cs.h, cs.block(head), Block.concat_row, rng
    )


def generate_col_strip(
    gc: Presentation, head: int, n: int, rng: random.Random | None = None
) -> Block:
    """An h x n block generated by a red path starting at block(head)."""
    if gc.kind not in (COLUMN, COMBINED):
        raise ValueError("column strips need red edges")
    cs = gc.system
    if n < cs.w:
        raise ValueError(f"strip width {n} below window width {cs.w}")
    return _strip_search(
        gc.red_out, gc.red_label, head, n - cs.w, cs.block(head), Block.concat_col, rng
    )


def enumerate_row_strips(gr: Presentation, m: int, head: int | None = None) -> Iterator[Block]:
    """All m x w blocks generated by blue paths (optionally from one head)."""
    cs = gr.system
    heads = [head] if head is not None else list(gr.vertices)

    def extend(v: int, block: Block, remaining: int) -> Iterator[Block]:
        if remaining == 0:
            yield block
            return
        for nxt in gr.blue_out(v):
            yield from extend(nxt, block.concat_row(gr.blue_label(v, nxt)), remaining - 1)

    for u in heads:
        yield from extend(u, cs.block(u), m - cs.h)


def enumerate_col_strips(gc: Presentation, n: int, head: int | None = None) -> Iterator[Block]:
    """All h x n blocks generated by red paths (optionally from one head)."""
    cs = gc.system
    heads = [head] if head is not None else list(gc.vertices)

    def extend(v: int, block: Block, remaining: int) -> Iterator[Block]:
        if remaining == 0:
            yield block
            return
        for nxt in gc.red_out(v):
            yield from extend(nxt, block.concat_col(gc.red_label(v, nxt)), remaining - 1)

    for u in heads:
        yield from extend(u, cs.block(u), n - cs.w)


def is_generated(g: Presentation, b: Block) -> bool:
    """True iff every window is a vertex and adjacent windows are edge-connected.

    Equivalent to: every full-height width-w strip of b is a blue path and every
    full-width height-h strip is a red path.
    """
    if g.kind != COMBINED:
        raise ValueError("generation test requires the combined graph")
    cs = g.system
    if b.height < cs.h or b.width < cs.w:
        raise ValueError(f"block {b.height}x{b.width} below window size {cs.h}x{cs.w}")
    ids: dict[tuple[int, int], int] = {}
    for (top, left), win in b.windows(cs.h, cs.w):
        k = cs.identifier(win)
        if k is None:
            return False
        ids[(top + cs.h - 1, left + cs.w - 1)] = k
    for i in range(cs.h, b.height + 1):
        for j in range(cs.w, b.width + 1):
            if j < b.width and not g.has_red(ids[(i, j)], ids[(i, j + 1)]):
                return False
            if i < b.height and not g.has_blue(ids[(i, j)], ids[(i + 1, j)]):
                return False
    return True
