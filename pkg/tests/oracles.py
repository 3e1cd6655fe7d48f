"""Independent brute-force oracles the engine is checked against.

Nothing here shares code with the package internals: the diagram oracle
works by homology rank sweeps over GF(2) at every distinct scale threshold,
the Rips oracle enumerates vertex subsets exhaustively, and the landscape
oracle samples k-max tent values on a dense grid.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np


# ── exhaustive Rips enumeration ─────────────────────────────────────────


def rips_simplices(dist, max_dim: int, max_scale: float = math.inf):
    """All (vertices, diameter) with diameter <= max_scale, by brute force."""
    d = np.asarray(dist, dtype=float)
    n = d.shape[0]
    out = []
    for size in range(1, max_dim + 2):
        for verts in combinations(range(n), size):
            diam = max((d[i, j] for i, j in combinations(verts, 2)), default=0.0)
            if diam <= max_scale:
                out.append((verts, float(diam)))
    return out


# ── dimension-0 barcode: connected-component sweep ──────────────────────


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def h0_barcode(dist, max_scale: float = math.inf):
    """(birth, death) multiset for components, via component counts at
    every distinct threshold."""
    d = np.asarray(dist, dtype=float)
    n = d.shape[0]
    lengths = [float(d[i, j]) for i, j in combinations(range(n), 2)]
    ths = sorted({0.0, *(x for x in lengths if x <= max_scale)})
    edges = sorted(
        (float(d[i, j]), i, j)
        for i, j in combinations(range(n), 2)
        if d[i, j] <= max_scale
    )
    uf = _UnionFind(n)
    comps = []
    k = 0
    for th in ths:
        while k < len(edges) and edges[k][0] <= th:
            uf.union(edges[k][1], edges[k][2])
            k += 1
        comps.append(len({uf.find(v) for v in range(n)}))
    pairs = []
    for i in range(1, len(ths)):
        pairs.extend([(0.0, ths[i])] * (comps[i - 1] - comps[i]))
    pairs.extend([(0.0, math.inf)] * comps[-1])
    return sorted(pairs)


# ── dimension-1 barcode: persistent Betti rank sweep over GF(2) ─────────


def _insert(vector: int, pivots: dict[int, int]) -> int:
    """Add a column to a GF(2) eliminator; returns the rank increase."""
    while vector:
        low = vector.bit_length() - 1
        pivot = pivots.get(low)
        if pivot is None:
            pivots[low] = vector
            return 1
        vector ^= pivot
    return 0


def h1_barcode(dist, max_scale: float = math.inf):
    """(birth, death) multiset for 1-cycles.

    beta_1^{i,j} = rank([K_i | D_j]) - rank(D_j) where K_i is a cycle-space
    basis at threshold i (kernel of the edge boundary) and D_j the triangle
    boundary columns at threshold j; pair multiplicities then follow from
    the standard inclusion-exclusion over the threshold grid.
    """
    d = np.asarray(dist, dtype=float)
    n = d.shape[0]
    lengths = [float(d[i, j]) for i, j in combinations(range(n), 2)]
    ths = sorted({0.0, *(x for x in lengths if x <= max_scale)})
    m = len(ths)

    edges = sorted(
        ((float(d[i, j]), (i, j)) for i, j in combinations(range(n), 2)
         if d[i, j] <= max_scale)
    )
    triangles = sorted(
        (
            (max(float(d[i, j]), float(d[i, k]), float(d[j, k])), (i, j, k))
            for i, j, k in combinations(range(n), 3)
        )
    )
    triangles = [(diam, v) for diam, v in triangles if diam <= max_scale]
    edge_rank = {verts: r for r, (_, verts) in enumerate(edges)}

    # cycle-space basis vectors (bitmasks over edge ranks), each tagged with
    # the threshold at which it appears; found by tracking combinations while
    # reducing edge boundary columns
    pivots: dict[int, int] = {}
    reduced: list[int] = []
    combo: list[int] = []
    kernel: list[tuple[float, int]] = []
    for r, (length, (a, b)) in enumerate(edges):
        col = (1 << a) | (1 << b)
        acc = 1 << r
        while col:
            low = col.bit_length() - 1
            k = pivots.get(low)
            if k is None:
                break
            col ^= reduced[k]
            acc ^= combo[k]
        reduced.append(col)
        combo.append(acc)
        if col:
            pivots[col.bit_length() - 1] = r
        else:
            kernel.append((length, acc))

    tri_cols = []
    for _, (i, j, k) in triangles:
        tri_cols.append(
            (1 << edge_rank[(i, j)])
            | (1 << edge_rank[(i, k)])
            | (1 << edge_rank[(j, k)])
        )
    tri_counts = []
    seen = 0
    for th in ths:
        while seen < len(triangles) and triangles[seen][0] <= th:
            seen += 1
        tri_counts.append(seen)

    def ranks_with_seed(seed: list[int]) -> list[int]:
        piv: dict[int, int] = {}
        rank = 0
        for vec in seed:
            rank += _insert(vec, piv)
        out = []
        t = 0
        for j in range(m):
            while t < tri_counts[j]:
                rank += _insert(tri_cols[t], piv)
                t += 1
            out.append(rank)
        return out

    rank_d = ranks_with_seed([])
    beta = []
    for i in range(m):
        seed = [vec for length, vec in kernel if length <= ths[i]]
        ranks = ranks_with_seed(seed)
        beta.append([ranks[j] - rank_d[j] for j in range(m)])

    def b(i: int, j: int) -> int:
        if i < 0:
            return 0
        return beta[i][j]

    pairs = []
    for i in range(m):
        for j in range(i + 1, m):
            mult = (b(i, j - 1) - b(i, j)) - (b(i - 1, j - 1) - b(i - 1, j))
            pairs.extend([(ths[i], ths[j])] * mult)
        mult_inf = b(i, m - 1) - b(i - 1, m - 1)
        pairs.extend([(ths[i], math.inf)] * mult_inf)
    return sorted(pairs)


# ── landscape grid oracle ───────────────────────────────────────────────


def grid_kmax(bars, xs):
    """k-th largest tent values on a grid: row k-1 is level k."""
    xs = np.asarray(xs, dtype=float)
    if not bars:
        return np.zeros((1, xs.size))
    births = np.array([b for b, _ in bars])
    deaths = np.array([d for _, d in bars])
    vals = np.minimum(xs[None, :] - births[:, None], deaths[:, None] - xs[None, :])
    np.maximum(vals, 0.0, out=vals)
    vals[::-1].sort(axis=0)
    return vals


# ── minimum spanning tree merge lengths (Kruskal) ───────────────────────


def mst_merge_lengths(dist):
    """Lengths of the edges Kruskal uses to merge components, sorted."""
    d = np.asarray(dist, dtype=float)
    n = d.shape[0]
    uf = _UnionFind(n)
    out = []
    for length, i, j in sorted(
        (float(d[i, j]), i, j) for i, j in combinations(range(n), 2)
    ):
        if uf.union(i, j):
            out.append(length)
    return out


def random_cloud(rng, max_points: int = 8, max_dim: int = 4):
    size = int(rng.integers(2, max_points + 1))
    dim = int(rng.integers(1, max_dim + 1))
    return rng.normal(0.0, 1.0, size=(size, dim))
