"""Aisle-graph model, tours and tour accounting.

Rows are 1-based (1..m). Columns are 0-based from the left: column 0 and,
on two-sided graphs, column n+1 are the zero-reward interconnecting columns.
All edges cost 1 and the robot always starts and ends at ``HOME = (1, 0)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

Vertex = tuple[int, int]
HOME: Vertex = (1, 0)


class Variant(str, enum.Enum):
    TWO_SIDED = "two_sided"
    LEFT_ONLY = "left_only"


class InvalidVertexError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AisleGraph:
    """Row/column grid with per-vertex rewards.

    ``rewards[i-1, j-1]`` holds the reward of vertex ``(i, j)`` for the
    ``n`` inner columns. The array is copied and frozen on construction.
    """

    rewards: np.ndarray
    variant: Variant = Variant.TWO_SIDED

    def __post_init__(self):
        r = np.array(self.rewards, dtype=np.float64)
        if r.ndim != 2 or r.shape[0] < 1 or r.shape[1] < 1:
            raise ValueError(f"rewards must be a non-empty m x n matrix, got shape {r.shape}")
        if not np.all(np.isfinite(r)) or np.any(r < 0):
            raise ValueError("rewards must be finite and non-negative")
        r.setflags(write=False)
        object.__setattr__(self, "rewards", r)
        object.__setattr__(self, "variant", Variant(self.variant))

    @property
    def m(self) -> int:
        return self.rewards.shape[0]

    @property
    def n(self) -> int:
        return self.rewards.shape[1]

    @property
    def last_col(self) -> int:
        return self.n + 1 if self.variant is Variant.TWO_SIDED else self.n

    @property
    def num_vertices(self) -> int:
        return self.m * (self.last_col + 1)

    @property
    def total_reward(self) -> float:
        return math.fsum(self.rewards.ravel())

    def __eq__(self, other):
        if not isinstance(other, AisleGraph):
            return NotImplemented
        return self.variant is other.variant and np.array_equal(self.rewards, other.rewards)

    def __hash__(self):
        return hash((self.variant, self.rewards.shape, self.rewards.tobytes()))

    def __repr__(self):
        return f"AisleGraph(m={self.m}, n={self.n}, variant={self.variant.value})"

    def contains(self, v: Vertex) -> bool:
        i, j = v
        return 1 <= i <= self.m and 0 <= j <= self.last_col

    def reward(self, v: Vertex) -> float:
        i, j = v
        if 1 <= j <= self.n:
            return float(self.rewards[i - 1, j - 1])
        return 0.0

    def is_side_column(self, j: int) -> bool:
        return j == 0 or (self.variant is Variant.TWO_SIDED and j == self.n + 1)

    def left_restriction(self) -> "AisleGraph":
        return AisleGraph(self.rewards, Variant.LEFT_ONLY)

    def mirrored(self) -> "AisleGraph":
        """Left/right reflection: column j maps to n+1-j."""
        return AisleGraph(self.rewards[:, ::-1], self.variant)


def neighbors(g: AisleGraph, v: Vertex) -> list[Vertex]:
    if not g.contains(v):
        raise InvalidVertexError(f"vertex {v} is outside {g!r}")
    i, j = v
    out = []
    if g.is_side_column(j):
        if i > 1:
            out.append((i - 1, j))
        if i < g.m:
            out.append((i + 1, j))
    if j > 0:
        out.append((i, j - 1))
    if j < g.last_col:
        out.append((i, j + 1))
    return out


def is_adjacent(g: AisleGraph, u: Vertex, v: Vertex) -> bool:
    if not (g.contains(u) and g.contains(v)):
        return False
    (i1, j1), (i2, j2) = u, v
    if i1 == i2:
        return abs(j1 - j2) == 1
    return j1 == j2 and abs(i1 - i2) == 1 and g.is_side_column(j1)


def tour_cost(vertices: Sequence[Vertex]) -> int:
    return max(len(vertices) - 1, 0)


def tour_reward(g: AisleGraph, vertices: Iterable[Vertex]) -> float:
    """Sum of rewards over distinct reward-bearing vertices; order independent."""
    vs = np.asarray(list(vertices), dtype=np.int64).reshape(-1, 2)
    i, j = vs[:, 0], vs[:, 1]
    inner = (i >= 1) & (i <= g.m) & (j >= 1) & (j <= g.n)
    flat = np.unique((i[inner] - 1) * g.n + (j[inner] - 1))
    return math.fsum(g.rewards.ravel()[flat])


@dataclass(frozen=True)
class Tour:
    vertices: tuple[Vertex, ...]
    reward: float

    @classmethod
    def of(cls, g: AisleGraph, vertices: Iterable[Vertex]) -> "Tour":
        vs = tuple(map(tuple, np.asarray(list(vertices), dtype=np.int64).reshape(-1, 2).tolist()))
        return cls(vs, tour_reward(g, vs))

    @classmethod
    def home(cls) -> "Tour":
        return cls((HOME,), 0.0)

    @property
    def cost(self) -> int:
        return tour_cost(self.vertices)

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class SolveResult:
    algorithm: str
    tour: Tour
    budget_limit: int
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def reward(self) -> float:
        return self.tour.reward

    @property
    def budget_used(self) -> int:
        return self.tour.cost


def home_result(algorithm: str, budget: int, **stats) -> SolveResult:
    return SolveResult(algorithm, Tour.home(), int(budget), dict(stats))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    cost: int
    reward: float
    errors: tuple[str, ...]

    def __bool__(self):
        return self.ok


def validate_tour(g: AisleGraph, tour: Tour | Sequence[Vertex], budget: int) -> ValidationReport:
    """Check endpoints, adjacency and budget; never raises."""
    vs = list(tour.vertices if isinstance(tour, Tour) else tour)
    errors = []
    if not vs:
        return ValidationReport(False, 0, 0.0, ("empty tour",))
    if vs[0] != HOME:
        errors.append(f"tour starts at {vs[0]}, expected {HOME}")
    if vs[-1] != HOME:
        errors.append(f"tour ends at {vs[-1]}, expected {HOME}")
    for k, v in enumerate(vs):
        if not g.contains(v):
            errors.append(f"step {k}: vertex {v} outside graph")
    for k in range(len(vs) - 1):
        if not is_adjacent(g, vs[k], vs[k + 1]):
            errors.append(f"step {k}: {vs[k]} -> {vs[k + 1]} is not an edge")
    cost = tour_cost(vs)
    if cost > budget:
        errors.append(f"cost {cost} exceeds budget {budget}")
    return ValidationReport(not errors, cost, tour_reward(g, vs), tuple(errors))


@dataclass(frozen=True)
class TourAnnotation:
    """Per-row flags (index 0 is row 1) describing what a tour passes through."""

    left_on_tour: tuple[bool, ...]
    right_on_tour: tuple[bool, ...]
    fully_traversed: tuple[bool, ...]


def annotate_tour(g: AisleGraph, tour: Tour) -> TourAnnotation:
    seen = set(tour.vertices)
    left = tuple((i, 0) in seen for i in range(1, g.m + 1))
    if g.variant is Variant.TWO_SIDED:
        right = tuple((i, g.n + 1) in seen for i in range(1, g.m + 1))
    else:
        right = (False,) * g.m
    full = tuple(all((i, j) in seen for j in range(1, g.n + 1)) for i in range(1, g.m + 1))
    return TourAnnotation(left, right, full)


def format_tour(vertices: Iterable[Vertex]) -> str:
    return " ".join(f"{i}:{j}" for i, j in vertices)


def parse_tour(line: str) -> list[Vertex]:
    out = []
    for tok in line.split():
        i, sep, j = tok.partition(":")
        if not sep:
            raise ValueError(f"bad vertex token {tok!r}, expected i:j")
        out.append((int(i), int(j)))
    return out
