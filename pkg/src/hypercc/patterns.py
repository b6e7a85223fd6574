"""Two-region pattern grids, deterministic generators, and seeded sampling.

Grids are immutable bitmaps: cell value 1 is the black region, 0 the white
region.  All randomness flows through SplitMix64 so a (grid, n, seed)
triple always selects the same training points, on every platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "SplitMix64",
    "PatternGrid",
    "PatternParseError",
    "generate_spiral",
    "generate_box",
    "load_pattern",
    "save_pattern",
    "sample_training_points",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The SplitMix64 generator: a 64-bit state stepped by the golden gamma."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


class PatternParseError(ValueError):
    """Pattern text does not follow the `W H` + bitmap-rows format."""


@dataclass(frozen=True)
class PatternGrid:
    """A width x height bitmap of 0/1 cells, stored row-major."""

    width: int
    height: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("grid dimensions must be positive")
        if len(self.cells) != self.height or any(len(row) != self.width
                                                 for row in self.cells):
            raise ValueError("cell matrix does not match the declared dimensions")
        if any(value not in (0, 1) for row in self.cells for value in row):
            raise ValueError("cells must be 0 or 1")

    @property
    def total(self) -> int:
        return self.width * self.height

    @property
    def black_count(self) -> int:
        return sum(sum(row) for row in self.cells)

    def cell(self, row: int, col: int) -> int:
        return self.cells[row][col]


def _check_size(size: int) -> None:
    if size < 4:
        raise ValueError(f"pattern size must be at least 4, got {size}")


def generate_spiral(size: int, pitch: float = 4.0) -> PatternGrid:
    """Archimedean spiral: black where frac(rho / pitch - theta) < 0.5.

    rho and theta are polar coordinates of the cell center about the grid
    center, with theta normalized to [0, 1).
    """
    _check_size(size)
    center = (size - 1) / 2
    rows = []
    for row in range(size):
        line = []
        for col in range(size):
            dx = col - center
            dy = row - center
            rho = math.sqrt(dx * dx + dy * dy)
            theta = (math.atan2(dy, dx) % (2 * math.pi)) / (2 * math.pi)
            v = rho / pitch - theta
            line.append(1 if v - math.floor(v) < 0.5 else 0)
        rows.append(tuple(line))
    return PatternGrid(size, size, tuple(rows))


def generate_box(size: int) -> PatternGrid:
    """Centered filled rectangle spanning the middle half of each axis."""
    _check_size(size)
    lo, hi = size // 4, (3 * size) // 4
    rows = tuple(
        tuple(1 if lo <= row < hi and lo <= col < hi else 0 for col in range(size))
        for row in range(size)
    )
    return PatternGrid(size, size, rows)


def load_pattern(text: str) -> PatternGrid:
    """Parse the pattern file format: a `W H` header then H rows of 0/1 digits."""
    lines = text.splitlines()
    if not lines:
        raise PatternParseError("line 1: empty pattern text")
    header = lines[0].split()
    if len(header) != 2:
        raise PatternParseError(f"line 1: expected 'W H', got {lines[0]!r}")
    try:
        width, height = int(header[0]), int(header[1])
    except ValueError:
        raise PatternParseError(f"line 1: non-integer dimensions {lines[0]!r}") from None
    if width < 1 or height < 1:
        raise PatternParseError("line 1: dimensions must be positive")
    if len(lines) != height + 1:
        raise PatternParseError(f"line {len(lines) + 1}: expected {height} bitmap rows, "
                                f"got {len(lines) - 1}")
    rows = []
    for index, line in enumerate(lines[1:], start=2):
        if len(line) != width:
            raise PatternParseError(f"line {index}: row has {len(line)} cells, expected {width}")
        if set(line) - {"0", "1"}:
            raise PatternParseError(f"line {index}: characters outside 0/1 in {line!r}")
        rows.append(tuple(int(ch) for ch in line))
    return PatternGrid(width, height, tuple(rows))


def save_pattern(grid: PatternGrid) -> str:
    body = "\n".join("".join(str(v) for v in row) for row in grid.cells)
    return f"{grid.width} {grid.height}\n{body}\n"


def _take(rng: SplitMix64, cells: list, count: int) -> list:
    # Partial Fisher-Yates: only the first `count` slots are settled.
    for i in range(count):
        j = i + rng.next() % (len(cells) - i)
        cells[i], cells[j] = cells[j], cells[i]
    return cells[:count]


def sample_training_points(grid: PatternGrid, n: int, seed: int):
    """Select n distinct cells, stratified by region in proportion to area.

    The black stratum is drawn first, then the white one, both from a
    single SplitMix64 stream; points come back as (row, col, label) with
    the black selections leading.
    """
    if not 1 <= n <= grid.total:
        raise ValueError(f"n must be in [1, {grid.total}], got {n}")
    black = [(r, c) for r in range(grid.height) for c in range(grid.width)
             if grid.cells[r][c] == 1]
    white = [(r, c) for r in range(grid.height) for c in range(grid.width)
             if grid.cells[r][c] == 0]
    # Round half up, in exact integer arithmetic.
    n_black = (2 * n * len(black) + grid.total) // (2 * grid.total)
    n_white = n - n_black
    if n_black > len(black) or n_white > len(white):
        raise ValueError(f"stratum sizes {n_black}/{n_white} exceed region sizes "
                         f"{len(black)}/{len(white)}")
    rng = SplitMix64(seed)
    points = [(r, c, 1) for r, c in _take(rng, black, n_black)]
    points += [(r, c, 0) for r, c in _take(rng, white, n_white)]
    return points
