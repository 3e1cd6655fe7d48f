"""Persistence diagrams from a Rips filtration.

Dimension 0 comes from union-find over edges in filtration order (all
vertices are born at scale 0, so the elder rule is trivial); dimension 1 from
the standard left-to-right boundary-matrix reduction over Z/2. Pairs with
zero persistence (birth == death) are discarded everywhere: they contribute
the zero function to every landscape.

Features still alive at the top of the filtration are recorded with death
+inf and skipped by the landscape builder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FiltrationDimensionTooLow
from .filtration import Filtration, boundary_columns

__all__ = [
    "PersistencePair",
    "PersistenceDiagram",
    "compute_h0",
    "compute_h1",
    "reduce_matrix",
]


@dataclass(frozen=True, slots=True)
class PersistencePair:
    birth: float
    death: float  # math.inf for features that never die
    dim: int

    def __post_init__(self):
        if not self.death >= self.birth:
            raise ValueError(f"death {self.death} before birth {self.birth}")

    @property
    def essential(self) -> bool:
        return math.isinf(self.death)

    @property
    def persistence(self) -> float:
        return self.death - self.birth


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of (birth, death) pairs for one homology dimension."""

    dim: int
    pairs: tuple[PersistencePair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        for p in self.pairs:
            if p.dim != self.dim:
                raise ValueError(f"pair of dimension {p.dim} in a {self.dim}-diagram")
            if self.dim == 0 and p.birth != 0:
                raise ValueError("0-dimensional features are all born at scale 0")

    @classmethod
    def from_values(
        cls, dim: int, pairs: Iterable[tuple[float, float]]
    ) -> "PersistenceDiagram":
        return cls(dim, tuple(PersistencePair(b, d, dim) for b, d in pairs))

    @property
    def essential_count(self) -> int:
        return sum(1 for p in self.pairs if p.essential)

    def finite(self) -> "PersistenceDiagram":
        return PersistenceDiagram(
            self.dim, tuple(p for p in self.pairs if not p.essential)
        )

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def _sorted_pairs(dim: int, values: list[tuple[float, float]]) -> PersistenceDiagram:
    values.sort()
    return PersistenceDiagram(
        dim, tuple(PersistencePair(b, d, dim) for b, d in values)
    )


def compute_h0(filtration: Filtration) -> PersistenceDiagram:
    """Connected-component pairs: one death per merge, one essential per
    surviving component.

    Edges are processed in filtration order; a merge at edge length L emits
    (0, L). Roots are merged smaller-index-under-larger deterministically.
    Zero-persistence pairs (merges at length 0, i.e. coincident points) are
    dropped.
    """
    n = filtration.num_vertices
    parent = list(range(n))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    values: list[tuple[float, float]] = []
    for s in filtration.simplices:
        if s.dim != 1:
            continue
        ra, rb = find(s.vertices[0]), find(s.vertices[1])
        if ra == rb:
            continue
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        if s.appearance > 0:
            values.append((0.0, s.appearance))
    essentials = sum(1 for v in range(n) if parent[v] == v)
    values.extend((0.0, math.inf) for _ in range(essentials))
    return _sorted_pairs(0, values)


def reduce_matrix(
    columns: Sequence[Sequence[int]],
) -> tuple[list[list[int]], dict[int, int]]:
    """Standard persistence reduction of a boundary matrix over Z/2.

    Columns must be in filtration order. Column j is XORed with earlier
    columns sharing its lowest nonzero row until that low is unique or the
    column empties. Returns the reduced columns (sorted row lists) and the
    pairing {low row -> column index}.
    """
    masks, low_to_col = _reduce_masks([_rows_to_mask(col) for col in columns])
    reduced = [_mask_to_rows(m) for m in masks]
    return reduced, dict(low_to_col)


def _rows_to_mask(rows: Sequence[int]) -> int:
    mask = 0
    for r in rows:
        mask |= 1 << r
    return mask


def _mask_to_rows(mask: int) -> list[int]:
    rows = []
    while mask:
        low = mask.bit_length() - 1
        rows.append(low)
        mask ^= 1 << low
    rows.reverse()
    return rows


def _reduce_masks(masks: list[int]) -> tuple[list[int], dict[int, int]]:
    low_to_col: dict[int, int] = {}
    for j, mask in enumerate(masks):
        while mask:
            low = mask.bit_length() - 1
            k = low_to_col.get(low)
            if k is None:
                low_to_col[low] = j
                break
            mask ^= masks[k]
        masks[j] = mask
    return masks, low_to_col


def compute_h1(filtration: Filtration) -> PersistenceDiagram:
    """1-cycle pairs via boundary-matrix reduction.

    A triangle column whose reduced low lands on edge row i kills the cycle
    created by that edge: pair (length(i), diameter(column)). Edge columns
    that reduce to zero created a cycle; those never hit by a triangle low
    survive as essential. Zero-persistence pairs are dropped.
    """
    if filtration.max_dim < 2:
        raise FiltrationDimensionTooLow(filtration.max_dim)
    simplices = filtration.simplices
    masks = [_rows_to_mask(col) for col in boundary_columns(filtration)]
    masks, low_to_col = _reduce_masks(masks)

    values: list[tuple[float, float]] = []
    for low, col in low_to_col.items():
        if simplices[low].dim != 1:
            continue
        birth = simplices[low].appearance
        death = simplices[col].appearance
        if death > birth:
            values.append((birth, death))
    for pos, s in enumerate(simplices):
        if s.dim == 1 and not masks[pos] and pos not in low_to_col:
            values.append((s.appearance, math.inf))
    return _sorted_pairs(1, values)
