"""Brute-force reference implementations, independent of the graph machinery.

Everything here works directly from the forbidden set: enumeration scans the
full symbol space with window pruning, counting runs a plain dynamic program
over full symbol rows.  Neither touches presentations, so agreement with the
graph-derived results is a real cross-check.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from typing import Iterator

from .blocks import Block, ConstraintSystem

ENUM_BUDGET = 1 << 24  # candidate blocks
COUNT_BUDGET = 1 << 20  # row states


class BudgetExceeded(RuntimeError):
    pass


def _check_size(cs: ConstraintSystem, m: int, n: int) -> None:
    if m < cs.h or n < cs.w:
        raise ValueError(f"size {m}x{n} below window size {cs.h}x{cs.w}")


def enumerate_members(
    cs: ConstraintSystem, m: int, n: int, budget: int = ENUM_BUDGET
) -> Iterator[Block]:
    """All m x n members in canonical order, by depth-first scan.

    A window is rejected as soon as its last cell is placed, so forbidden
    prefixes are pruned without expanding the remaining cells.
    """
    _check_size(cs, m, n)
    q = cs.alphabet.size
    if q ** (m * n) > budget:
        raise BudgetExceeded(f"{q}^{m * n} candidates exceed budget {budget}")
    h, w = cs.h, cs.w
    forbidden = {f.rows for f in cs.forbidden}
    grid = [[0] * n for _ in range(m)]

    def place(pos: int) -> Iterator[Block]:
        if pos == m * n:
            yield Block(tuple(tuple(r) for r in grid))
            return
        i, j = divmod(pos, n)
        for sym in range(q):
            grid[i][j] = sym
            if i >= h - 1 and j >= w - 1:
                win = tuple(
                    tuple(grid[i - h + 1 + di][j - w + 1 : j + 1]) for di in range(h)
                )
                if win in forbidden:
                    continue
            yield from place(pos + 1)

    yield from place(0)


def count_members(cs: ConstraintSystem, m: int, n: int, budget: int = COUNT_BUDGET) -> int:
    """Exact member count via a row-by-row dynamic program over symbol rows.

    The state is the tuple of the last h-1 rows; a new row is admitted when it
    completes no forbidden window against that state.  Purely forbidden-set
    driven, so it stays independent of any presentation.
    """
    _check_size(cs, m, n)
    q = cs.alphabet.size
    if q**n > budget:
        raise BudgetExceeded(f"{q}^{n} row states exceed budget {budget}")
    h, w = cs.h, cs.w
    forbidden = {f.rows for f in cs.forbidden}
    rows = list(product(range(q), repeat=n))
    ok_cache: dict[tuple, bool] = {}

    def ok(state: tuple, row: tuple[int, ...]) -> bool:
        if len(state) < h - 1:
            return True
        key = state + (row,)
        hit = ok_cache.get(key)
        if hit is None:
            strip = key  # exactly h rows
            hit = not any(
                tuple(r[j : j + w] for r in strip) in forbidden
                for j in range(n - w + 1)
            )
            ok_cache[key] = hit
        return hit

    states: dict[tuple, int] = {(): 1}
    for _ in range(m):
        new: dict[tuple, int] = defaultdict(int)
        for state, cnt in states.items():
            for row in rows:
                if ok(state, row):
                    ns = (state + (row,))[-(h - 1):] if h > 1 else ()
                    new[ns] += cnt
        states = new
    return sum(states.values())
