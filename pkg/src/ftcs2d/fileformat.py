"""Text formats for constraint systems and blocks.

System file::

    alphabet 01
    size 2 2

    # a forbidden window, exactly h lines of w symbols
    forbid
    11
    10

    # a pattern of size up to h x w, embedded into all containing windows
    pattern
    11

Blank lines and lines starting with ``#`` are ignored.  Block files are just
m lines of n symbol characters.
"""

from __future__ import annotations

from .blocks import Alphabet, Block, ConstraintSystem, embed_forbidden


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def parse_system(text: str) -> ConstraintSystem:
    lines = _significant_lines(text)
    if not lines:
        raise ParseError(0, "empty file")
    pos = 0

    def take() -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(lines[-1][0], "unexpected end of file")
        item = lines[pos]
        pos += 1
        return item

    lineno, line = take()
    parts = line.split()
    if len(parts) != 2 or parts[0] != "alphabet":
        raise ParseError(lineno, f"expected 'alphabet <tokens>', got {line!r}")
    try:
        alphabet = Alphabet(parts[1])
    except ValueError as e:
        raise ParseError(lineno, str(e)) from e

    lineno, line = take()
    parts = line.split()
    if len(parts) != 3 or parts[0] != "size":
        raise ParseError(lineno, f"expected 'size <h> <w>', got {line!r}")
    try:
        h, w = int(parts[1]), int(parts[2])
    except ValueError as e:
        raise ParseError(lineno, f"bad size numbers in {line!r}") from e
    if h < 1 or w < 1:
        raise ParseError(lineno, f"size must be positive, got {h} {w}")

    def block_lines(limit: int | None) -> Block:
        nonlocal pos
        rows = []
        while pos < len(lines) and (limit is None or len(rows) < limit):
            lineno2, line2 = lines[pos]
            if line2.split()[0] in ("forbid", "pattern"):
                break
            try:
                rows.append(tuple(alphabet.index(c) for c in line2))
            except ValueError as e:
                raise ParseError(lineno2, str(e)) from e
            pos += 1
        if not rows:
            raise ParseError(lines[pos - 1][0], "stanza has no block lines")
        try:
            return Block(tuple(rows))
        except ValueError as e:
            raise ParseError(lines[pos - 1][0], str(e)) from e

    forbidden: set[Block] = set()
    patterns: list[Block] = []
    while pos < len(lines):
        lineno, line = take()
        if line == "forbid":
            b = block_lines(h)
            if (b.height, b.width) != (h, w):
                raise ParseError(lineno, f"forbid stanza is {b.height}x{b.width}, expected {h}x{w}")
            forbidden.add(b)
        elif line == "pattern":
            p = block_lines(None)
            if p.height > h or p.width > w:
                raise ParseError(lineno, f"pattern {p.height}x{p.width} exceeds window {h}x{w}")
            patterns.append(p)
        else:
            raise ParseError(lineno, f"expected 'forbid' or 'pattern', got {line!r}")

    if patterns:
        forbidden |= embed_forbidden(alphabet, h, w, patterns)
    return ConstraintSystem(alphabet, h, w, forbidden)


def format_system(cs: ConstraintSystem) -> str:
    """Canonical writer: every forbidden window as a 'forbid' stanza, sorted."""
    out = [f"alphabet {cs.alphabet.symbols}", f"size {cs.h} {cs.w}"]
    for f in sorted(cs.forbidden, key=lambda b: b.cells):
        out.append("")
        out.append("forbid")
        out.extend(cs.alphabet.format_block(f))
    return "\n".join(out) + "\n"


def parse_block(text: str, alphabet: Alphabet) -> Block:
    lines = [line for line in (raw.strip() for raw in text.splitlines()) if line and not line.startswith("#")]
    try:
        return alphabet.parse_block(lines)
    except ValueError as e:
        raise ParseError(0, str(e)) from e


def format_block(b: Block, alphabet: Alphabet) -> str:
    return "\n".join(alphabet.format_block(b)) + "\n"
