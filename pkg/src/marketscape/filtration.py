"""Vietoris-Rips filtrations up to triangles, with the mod-2 boundary operator.

A simplex enters the filtration at its diameter (the longest pairwise
distance among its vertices), so vertices appear at 0, edges at their length
and triangles at their longest edge. The filtration is one flat list sorted
by (appearance, dimension, vertex order) — deterministic, and closed under
faces at every prefix.

Coefficients live in Z/2: the boundary of a simplex is the plain set of its
facets, signs vanish, and column arithmetic downstream becomes XOR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import EmptyCloud, MissingFace
from .geometry import DistanceMatrix

__all__ = ["Simplex", "Filtration", "build_rips", "boundary", "boundary_columns"]


@dataclass(frozen=True, slots=True)
class Simplex:
    """A vertex, edge or triangle tagged with its appearance scale."""

    vertices: tuple[int, ...]
    appearance: float

    def __post_init__(self):
        v = self.vertices
        if not 1 <= len(v) <= 3:
            raise ValueError(f"simplex must have 1-3 vertices, got {v}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"simplex vertices must be strictly increasing, got {v}")
        if self.appearance < 0:
            raise ValueError(f"appearance must be nonnegative, got {self.appearance}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def facets(self) -> list[tuple[int, ...]]:
        """Codimension-1 faces, in vertex-dropping order."""
        v = self.vertices
        return [v[:i] + v[i + 1 :] for i in range(len(v))]


@dataclass(frozen=True)
class Filtration:
    """Simplices in filtration order plus a vertex-set -> position index."""

    simplices: tuple[Simplex, ...]
    index_of: dict[tuple[int, ...], int]
    max_dim: int
    max_scale: float

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        return iter(self.simplices)

    def __getitem__(self, pos: int) -> Simplex:
        return self.simplices[pos]

    @property
    def num_vertices(self) -> int:
        return sum(1 for s in self.simplices if s.dim == 0)


@lru_cache(maxsize=8)
def _triangle_indices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # all i<j<k triples; cached because every window of the same size reuses it
    combos = np.fromiter(
        (v for c in combinations(range(n), 3) for v in c), dtype=np.intp
    ).reshape(-1, 3)
    return combos[:, 0], combos[:, 1], combos[:, 2]


def build_rips(
    dist: DistanceMatrix, max_dim: int = 2, max_scale: float = math.inf
) -> Filtration:
    """Every simplex of dimension <= max_dim with diameter <= max_scale.

    max_scale=inf keeps everything; since no simplex has diameter beyond the
    largest pairwise distance, that is identical to capping at the cloud's
    diameter.
    """
    if max_dim not in (1, 2):
        raise ValueError(f"max_dim must be 1 or 2, got {max_dim}")
    if not max_scale >= 0:
        raise ValueError(f"max_scale must be nonnegative, got {max_scale}")
    n = dist.size
    if n == 0:
        raise EmptyCloud()
    d = dist.dist

    entries: list[tuple[float, int, tuple[int, ...]]] = [
        (0.0, 0, (i,)) for i in range(n)
    ]

    iu, ju = np.triu_indices(n, k=1)
    lengths = d[iu, ju]
    keep = lengths <= max_scale
    for i, j, length in zip(
        iu[keep].tolist(), ju[keep].tolist(), lengths[keep].tolist()
    ):
        entries.append((length, 1, (i, j)))

    if max_dim == 2 and n >= 3:
        ti, tj, tk = _triangle_indices(n)
        diam = np.maximum(np.maximum(d[ti, tj], d[ti, tk]), d[tj, tk])
        keep = diam <= max_scale
        for i, j, k, diameter in zip(
            ti[keep].tolist(), tj[keep].tolist(), tk[keep].tolist(),
            diam[keep].tolist(),
        ):
            entries.append((diameter, 2, (i, j, k)))

    entries.sort()
    simplices = tuple(Simplex(verts, app) for app, _, verts in entries)
    index_of = {s.vertices: pos for pos, s in enumerate(simplices)}
    return Filtration(simplices, index_of, max_dim, max_scale)


def boundary(simplex: Simplex, filtration: Filtration) -> list[int]:
    """Positions of the simplex's facets (mod-2 boundary column).

    Vertices have an empty boundary; an edge maps to its two endpoints, a
    triangle to its three edges.
    """
    if simplex.dim == 0:
        return []
    index_of = filtration.index_of
    rows = []
    for face in simplex.facets():
        pos = index_of.get(face)
        if pos is None:
            raise MissingFace(face, simplex.vertices)
        rows.append(pos)
    rows.sort()
    return rows


def boundary_columns(filtration: Filtration) -> list[list[int]]:
    """The full boundary matrix, one column per filtration position."""
    index_of = filtration.index_of
    cols: list[list[int]] = []
    for s in filtration.simplices:
        if s.dim == 0:
            cols.append([])
            continue
        v = s.vertices
        try:
            if s.dim == 1:
                rows = [index_of[(v[0],)], index_of[(v[1],)]]
            else:
                rows = [
                    index_of[(v[1], v[2])],
                    index_of[(v[0], v[2])],
                    index_of[(v[0], v[1])],
                ]
        except KeyError as exc:
            raise MissingFace(exc.args[0], v) from None
        rows.sort()
        cols.append(rows)
    return cols
