"""Grid points, macrobonds and the geometric transforms on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np


class Point(NamedTuple):
    x: int
    y: int


class Translation(NamedTuple):
    dx: int
    dy: int


@dataclass(frozen=True)
class CodeParams:
    n: int
    w: int
    lam: int
    flipping: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"grid size must be positive, got n={self.n}")
        if not 2 <= self.w <= self.n * self.n:
            raise ValueError(f"need 2 <= w <= n^2, got w={self.w}, n={self.n}")
        if not 1 <= self.lam <= self.w - 1:
            raise ValueError(f"need 1 <= lambda <= w-1, got lambda={self.lam}, w={self.w}")


@dataclass(frozen=True)
class Macrobond:
    """A set of patches inside the ``n x n`` grid.

    Patches are kept sorted by ``(x, y)``; an occupancy bitmap of ``n*n`` bits
    gives constant-time membership. Equality and hashing use ``n`` and the
    sorted patch tuple only.
    """

    n: int
    patches: tuple[Point, ...]
    bitmap: int = field(default=0, compare=False, repr=False)

    def __init__(self, n: int, patches: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"grid size must be positive, got n={n}")
        pts = sorted(Point(int(x), int(y)) for x, y in patches)
        bits = 0
        for p in pts:
            if not (0 <= p.x < n and 0 <= p.y < n):
                raise ValueError(f"patch {tuple(p)} outside the {n}x{n} grid")
            bit = 1 << (p.x * n + p.y)
            if bits & bit:
                raise ValueError(f"duplicate patch {tuple(p)}")
            bits |= bit
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "patches", tuple(pts))
        object.__setattr__(self, "bitmap", bits)

    def __len__(self) -> int:
        return len(self.patches)

    def __iter__(self):
        return iter(self.patches)

    def __contains__(self, p) -> bool:
        x, y = p
        if not (0 <= x < self.n and 0 <= y < self.n):
            return False
        return bool(self.bitmap >> (x * self.n + y) & 1)

    @property
    def weight(self) -> int:
        return len(self.patches)

    @cached_property
    def keys(self) -> np.ndarray:
        # x*(2n-1)+y: differences and sums of keys identify vectors uniquely
        return np.array([p.x * (2 * self.n - 1) + p.y for p in self.patches], dtype=np.int64)


@dataclass(frozen=True)
class Code:
    params: CodeParams
    members: tuple[Macrobond, ...]

    def __init__(self, params: CodeParams, members: Iterable[Macrobond]):
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "members", tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def translate(m: Macrobond | Iterable[tuple[int, int]], v: tuple[int, int]) -> frozenset[Point]:
    """Shift every patch by ``v``. The result may leave the grid."""
    dx, dy = v
    return frozenset(Point(x + dx, y + dy) for x, y in m)


def flip(m: Macrobond) -> Macrobond:
    """Rotate by 180 degrees: ``(x, y) -> (n-1-x, n-1-y)``."""
    k = m.n - 1
    return Macrobond(m.n, ((k - x, k - y) for x, y in m.patches))


def canonicalize(s: Iterable[tuple[int, int]]) -> frozenset[Point]:
    """Translate ``s`` flush against both axes.

    Two point sets are equal up to translation iff their canonical forms are
    equal.
    """
    pts = [Point(int(x), int(y)) for x, y in s]
    if not pts:
        raise ValueError("cannot canonicalize an empty point set")
    x0 = min(p.x for p in pts)
    y0 = min(p.y for p in pts)
    return frozenset(Point(p.x - x0, p.y - y0) for p in pts)
