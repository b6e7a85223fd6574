"""Pattern-classification experiment protocol and sweep harness.

A run samples n training points from a grid, trains a network on their
coordinate encodings at radius r, classifies every cell, and reports the
error coefficient (misclassified / total) and the efficiency percentage.
Sweeps enumerate (n, r, seed) combinations in a fixed order and give each
one an independently derived sampling seed, so tables are reproducible
regardless of execution order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encoding import Scheme, encode
from .network import TrainingSample, predict_batch, train
from .patterns import PatternGrid, SplitMix64, sample_training_points
from .quaternion import mask_from_symbol, symbol_from_mask

__all__ = [
    "RunResult",
    "CsvParseError",
    "CSV_HEADER",
    "error_coefficient",
    "efficiency",
    "run_experiment",
    "sweep",
    "mean_errors",
    "optimal_ratio",
    "render_map",
    "export_csv",
    "parse_csv",
]

CSV_HEADER = "pattern,scheme,n,r,seed,correct,misclassified,error,efficiency"


class CsvParseError(ValueError):
    """Sweep CSV text does not match the expected schema."""


@dataclass(frozen=True)
class RunResult:
    """Outcome of classifying every cell of one pattern after one training run."""

    pattern_id: str
    scheme: str
    n: int
    r: int
    seed: int
    correct: int
    misclassified: int

    @property
    def total(self) -> int:
        return self.correct + self.misclassified

    @property
    def error_coefficient(self) -> float:
        return self.misclassified / self.total

    @property
    def efficiency_percent(self) -> float:
        return 100.0 * self.correct / self.total


def error_coefficient(misclassified: int, total: int) -> float:
    """Ratio of misclassified points to all points in the pattern."""
    if total <= 0:
        raise ValueError(f"total must be positive, got {total}")
    if not 0 <= misclassified <= total:
        raise ValueError(f"misclassified count {misclassified} outside [0, {total}]")
    return misclassified / total


def efficiency(error: float) -> float:
    """Percentage of correctly classified points: 100 * (1 - error)."""
    if not 0.0 <= error <= 1.0:
        raise ValueError(f"error coefficient {error} outside [0, 1]")
    return 100.0 * (1.0 - error)


def _coordinate_masks(grid: PatternGrid, scheme: Scheme):
    row_masks = [tuple(mask_from_symbol(s) for s in encode(v, grid.height, scheme))
                 for v in range(1, grid.height + 1)]
    col_masks = [tuple(mask_from_symbol(s) for s in encode(v, grid.width, scheme))
                 for v in range(1, grid.width + 1)]
    return row_masks, col_masks


def run_experiment(grid: PatternGrid, scheme: Scheme, n: int, r: int, seed: int,
                   pattern_id: str = "pattern"):
    """Train on n sampled points at radius r, then classify the whole grid.

    Returns (RunResult, predicted grid).
    """
    points = sample_training_points(grid, n, seed)
    row_masks, col_masks = _coordinate_masks(grid, scheme)
    samples = [
        TrainingSample((symbol_from_mask(m) for m in row_masks[row] + col_masks[col]),
                       (label,))
        for row, col, label in points
    ]
    net = train(samples, radius=r, dim=scheme.dim)

    all_masks = [row_masks[row] + col_masks[col]
                 for row in range(grid.height) for col in range(grid.width)]
    bits = predict_batch(net, all_masks)[:, 0]
    predicted = PatternGrid(
        grid.width, grid.height,
        tuple(tuple(int(bits[row * grid.width + col]) for col in range(grid.width))
              for row in range(grid.height)))
    correct = sum(1 for row in range(grid.height) for col in range(grid.width)
                  if predicted.cells[row][col] == grid.cells[row][col])
    result = RunResult(pattern_id=pattern_id, scheme=scheme.name, n=n, r=r, seed=seed,
                       correct=correct, misclassified=grid.total - correct)
    return result, predicted


def _derived_seed(base_seed: int, ordinal: int) -> int:
    rng = SplitMix64(base_seed)
    for _ in range(ordinal + 1):
        value = rng.next()
    return value


def sweep(grid: PatternGrid, scheme: Scheme, ns, rs, seeds,
          pattern_id: str = "pattern") -> list[RunResult]:
    """Run every (n, r, seed) combination, ordered by (n desc, r asc, seed asc).

    Each combination samples with its own derived seed: the stream seeded
    by the combination's base seed, advanced by the combination's ordinal.
    """
    ns, rs, seeds = list(ns), list(rs), list(seeds)
    if not ns or not rs or not seeds:
        raise ValueError("ns, rs, and seeds must all be non-empty")
    combos = [(n, r, s)
              for n in sorted(ns, reverse=True)
              for r in sorted(rs)
              for s in sorted(seeds)]
    results = []
    for ordinal, (n, r, base_seed) in enumerate(combos):
        run_seed = _derived_seed(base_seed, ordinal)
        result, _ = run_experiment(grid, scheme, n, r, run_seed, pattern_id=pattern_id)
        results.append(result)
    return results


def mean_errors(results) -> dict[tuple[int, int], float]:
    """Mean error coefficient over seeds, keyed by (n, r)."""
    sums: dict[tuple[int, int], list] = {}
    for row in results:
        bucket = sums.setdefault((row.n, row.r), [0.0, 0])
        bucket[0] += row.error_coefficient
        bucket[1] += 1
    return {key: total / count for key, (total, count) in sums.items()}


def optimal_ratio(results, r: int) -> float:
    """n*/N for the n minimizing mean error at radius r; ties go to smaller n."""
    at_r = [row for row in results if row.r == r]
    if not at_r:
        raise ValueError(f"no results at radius {r}")
    total = at_r[0].total
    means = mean_errors(at_r)
    best_n = min(sorted(n for n, _ in means),
                 key=lambda n: (means[(n, r)], n))
    return best_n / total


def render_map(predicted: PatternGrid, truth: PatternGrid) -> str:
    """Character map of a prediction: '#'/'.' where correct, 'x'/'o' where not.

    'x' marks a black cell predicted white, 'o' a white cell predicted black.
    """
    if (predicted.width, predicted.height) != (truth.width, truth.height):
        raise ValueError("predicted and truth grids differ in size")
    glyphs = {(1, 1): "#", (0, 0): ".", (1, 0): "x", (0, 1): "o"}
    return "\n".join(
        "".join(glyphs[(truth.cells[row][col], predicted.cells[row][col])]
                for col in range(truth.width))
        for row in range(truth.height)) + "\n"


def format_csv_row(result: RunResult) -> str:
    return (f"{result.pattern_id},{result.scheme},{result.n},{result.r},{result.seed},"
            f"{result.correct},{result.misclassified},"
            f"{result.error_coefficient:.6f},{result.efficiency_percent:.6f}")


def export_csv(results) -> str:
    lines = [CSV_HEADER]
    lines.extend(format_csv_row(row) for row in results)
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[RunResult]:
    lines = text.splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise CsvParseError(f"line 1: expected header {CSV_HEADER!r}")
    results = []
    for index, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 9:
            raise CsvParseError(f"line {index}: expected 9 fields, got {len(fields)}")
        try:
            n, r, seed = int(fields[2]), int(fields[3]), int(fields[4])
            correct, misclassified = int(fields[5]), int(fields[6])
            float(fields[7]), float(fields[8])
        except ValueError:
            raise CsvParseError(f"line {index}: non-numeric field in {line!r}") from None
        results.append(RunResult(pattern_id=fields[0], scheme=fields[1], n=n, r=r,
                                 seed=seed, correct=correct, misclassified=misclassified))
    return results
