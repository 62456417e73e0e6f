"""Lattice-path counting oracle.

Paths are monotone: unit steps R = (1, 0) and U = (0, 1) from (0, 0) to a
target (x, y). A path "touches" a point if any of its vertices equals it,
endpoints included. A PathSpec forbids touching one of two diagonal sets:

    gessel-tail{r}:  {(x, x) : x >= r}
    prefix-band{n}:  {(x, x) : 1 <= x <= n}   (empty when n = 0)

Counting is a straight dynamic program (each cell is left + below, forbidden
cells are 0, the origin seeds 1 unless itself forbidden). Explicit
enumeration exists as an independent cross-check for small boards.

Both interpretations with target (n+r, n+r-1) count the Gessel number
P(n, r): the tail set with bound r for n >= 0, the band set with bound n for
n >= 1. verify_interpretations computes both plus the arithmetic formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .exact import gessel

ENUMERATION_LIMIT = 22  # max x+y a board may have for explicit enumeration


class BoardTooLarge(ValueError):
    """Explicit enumeration refused: the board exceeds ENUMERATION_LIMIT."""


class TouchSet(str, Enum):
    GESSEL_TAIL = "gessel-tail"
    PREFIX_BAND = "prefix-band"


@dataclass(frozen=True)
class PathSpec:
    """A target corner and the forbidden diagonal set."""

    target: tuple[int, int]
    touch_set: TouchSet
    bound: int

    def __post_init__(self) -> None:
        x, y = self.target
        if x < 0 or y < 0:
            raise ValueError(f"target must be non-negative, got {self.target}")
        if self.bound < 0:
            raise ValueError(f"bound must be non-negative, got {self.bound}")

    def forbids(self, x: int, y: int) -> bool:
        if x != y:
            return False
        if self.touch_set is TouchSet.GESSEL_TAIL:
            return x >= self.bound
        return 1 <= x <= self.bound


def gessel_path_spec(n: int, r: int) -> PathSpec:
    """Paths to (n+r, n+r-1) avoiding the diagonal tail {(x,x): x >= r}."""
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    return PathSpec((n + r, n + r - 1), TouchSet.GESSEL_TAIL, r)


def prefix_path_spec(n: int, r: int) -> PathSpec:
    """Paths to (n+r, n+r-1) avoiding the diagonal band {(x,x): 1 <= x <= n}."""
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    return PathSpec((n + r, n + r - 1), TouchSet.PREFIX_BAND, n)


def count_paths(spec: PathSpec) -> int:
    """Number of monotone paths to spec.target avoiding the forbidden set."""
    x_max, y_max = spec.target
    col = [0] * (y_max + 1)
    for x in range(x_max + 1):
        for y in range(y_max + 1):
            if spec.forbids(x, y):
                col[y] = 0
            elif x == 0 and y == 0:
                col[y] = 1
            else:
                left = col[y] if x > 0 else 0  # col still holds column x-1 here
                below = col[y - 1] if y > 0 else 0
                col[y] = left + below
    return col[y_max]


def enumerate_paths(spec: PathSpec) -> list[str]:
    """Every admissible path as an R/U step string.

    Ordered by the positions of the R steps (lexicographically ascending).
    Boards with x+y > ENUMERATION_LIMIT raise BoardTooLarge; use count_paths.
    """
    x_max, y_max = spec.target
    length = x_max + y_max
    if length > ENUMERATION_LIMIT:
        raise BoardTooLarge(
            f"board {spec.target} has {length} steps, enumeration is capped "
            f"at {ENUMERATION_LIMIT}"
        )
    if spec.forbids(0, 0):
        return []
    found = []
    for r_positions in itertools.combinations(range(length), x_max):
        chosen = set(r_positions)
        x = y = 0
        steps = []
        ok = True
        for i in range(length):
            if i in chosen:
                x += 1
                steps.append("R")
            else:
                y += 1
                steps.append("U")
            if spec.forbids(x, y):
                ok = False
                break
        if ok:
            found.append("".join(steps))
    return found


@dataclass(frozen=True)
class InterpretationCheck:
    """Both path counts for (n, r) next to the arithmetic Gessel number."""

    n: int
    r: int
    tail_count: int
    band_count: int
    formula_value: int

    @property
    def agree(self) -> bool:
        return self.tail_count == self.band_count == self.formula_value


def verify_interpretations(n: int, r: int) -> InterpretationCheck:
    """Count paths under both forbidden sets and compare with gessel(n, r)."""
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    tail = count_paths(gessel_path_spec(n, r))
    band = count_paths(prefix_path_spec(n, r))
    return InterpretationCheck(n, r, tail, band, gessel(n, r))
