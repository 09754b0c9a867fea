"""Reduced simplicial homology over prime fields.

Boundary ranks come from left-to-right column reduction with the clearing
optimization.  Columns are generated on demand from the stored simplex
arrays — no global sparse matrix is ever materialized.  Over GF(2) a column
is one arbitrary-precision integer bitmask (XOR is column addition); odd
primes use small row->coefficient dicts.

The ascending sweep reduces, for each dimension k, the transpose of the
boundary map from (k+1)-chains to k-chains (same rank), so clearing flows
from the cheap low dimensions upward and only one pass is needed.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from .complexes import (
    Skeleton,
    _enumerate_masks,
    _layer_ranks,
    _np_binom,
    _resolve_budget,
    _rows_from_masks,
)
from .hamming import SpaceSpec, neighbor_masks


def _check_prime(p: int) -> int:
    if p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"p={p} is not prime")
    return p


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over GF(p) through dimension maxdim.

    Entries above trusted_through are provisional: the skeleton stopped at
    exactly maxdim without being complete, so the rank of the next boundary
    map was unavailable and the top value may be inflated.
    """

    p: int
    maxdim: int
    reduced_betti: tuple[int, ...]
    trusted_through: int

    def is_trusted(self, i: int) -> bool:
        return i <= self.trusted_through


@dataclass(eq=False)
class SparseBoundaryMatrix:
    """Boundary map from k-chains to (k-1)-chains over GF(p).

    facet_rows[j, t] is the row of the facet of the j-th k-simplex obtained
    by dropping vertex position t; its coefficient is (-1)**t mod p.
    """

    dimension: int
    p: int
    n_rows: int
    n_cols: int
    facet_rows: np.ndarray

    def column(self, j: int) -> list[tuple[int, int]]:
        return [
            (int(r), (-1) ** t % self.p)
            for t, r in enumerate(self.facet_rows[j].tolist())
        ]

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n_rows, self.n_cols), dtype=np.int64)
        for j in range(self.n_cols):
            for r, c in self.column(j):
                dense[r, j] = (dense[r, j] + c) % self.p
        return dense


def _facet_row_indices(skel: Skeleton, k: int) -> np.ndarray:
    """(N_k, k+1) row indices into layer k-1; column t drops vertex position t."""
    rows = skel.simplices[k].astype(np.int64)
    n, width = rows.shape
    if n == 0:
        return np.zeros((0, width), dtype=np.int64)
    table = _np_binom(skel.num_vertices, width + 1)
    kept = np.empty((n, width), dtype=np.int64)  # C(v_i, i+1): position kept
    down = np.empty((n, width), dtype=np.int64)  # C(v_i, i): position shifted down
    for i in range(width):
        kept[:, i] = table[rows[:, i], i + 1]
        down[:, i] = table[rows[:, i], i]
    pre = np.zeros((n, width + 1), dtype=np.int64)
    np.cumsum(kept, axis=1, out=pre[:, 1:])
    suf = np.zeros((n, width + 1), dtype=np.int64)
    suf[:, :width] = down[:, ::-1].cumsum(axis=1)[:, ::-1]
    facet_keys = pre[:, :width] + suf[:, 1:]
    keys_lo = skel.layer_keys(k - 1)
    flat = facet_keys.ravel()
    idx = np.searchsorted(keys_lo, flat)
    if (idx >= len(keys_lo)).any() or (keys_lo[idx.clip(max=len(keys_lo) - 1)] != flat).any():
        raise ValueError("skeleton is not closed under faces")
    return idx.reshape(n, width)


def boundary_matrix(skel: Skeleton, k: int, p: int = 2) -> SparseBoundaryMatrix:
    """Explicit sparse boundary map in dimension k (1 <= k <= dim_cap)."""
    _check_prime(p)
    if not 1 <= k <= skel.dim_cap:
        raise ValueError(f"k={k} outside 1..{skel.dim_cap}")
    return SparseBoundaryMatrix(
        dimension=k,
        p=p,
        n_rows=len(skel.simplices[k - 1]),
        n_cols=len(skel.simplices[k]),
        facet_rows=_facet_row_indices(skel, k),
    )


def _reduce_gf2(columns) -> tuple[int, list[int]]:
    """Column reduction over GF(2); columns are row bitmasks."""
    pivots: dict[int, int] = {}
    order: list[int] = []
    for col in columns:
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                order.append(low)
                break
            col ^= other
    return len(order), order


def _reduce_modp(columns, p: int) -> tuple[int, list[int]]:
    """Column reduction over GF(p), odd p; columns are {row: coeff} dicts."""
    pivots: dict[int, dict[int, int]] = {}
    order: list[int] = []
    for col in columns:
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                order.append(low)
                break
            f = col[low] * pow(piv[low], -1, p) % p
            for r, v in piv.items():
                nv = (col.get(r, 0) - f * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
    return len(order), order


def _insertion_columns(rows_list, keys_hi, adj, table, p, skip=None):
    """Transposed-boundary column of each (non-skipped) k-simplex.

    Rows are the indices, in the (k+1)-layer, of every stored coface; the
    coface through vertex v carries coefficient (-1)**t with t the insertion
    position of v.  Cofaces absent from the layer (possible only when the
    complex is not flag, e.g. after collapses) contribute nothing.
    """
    gf2 = p == 2
    nrows = len(keys_hi)
    for ci, vs in enumerate(rows_list):
        if skip is not None and ci in skip:
            continue
        cand = -1
        for u in vs:
            cand &= adj[u]
        width = len(vs)
        pre = [0] * (width + 1)
        for i in range(width):
            pre[i + 1] = pre[i] + table[vs[i]][i + 1]
        shifted = [0] * (width + 1)
        for i in range(width - 1, -1, -1):
            shifted[i] = shifted[i + 1] + table[vs[i]][i + 2]
        col = 0 if gf2 else {}
        t = 0
        while cand:
            lowbit = cand & -cand
            v = lowbit.bit_length() - 1
            cand ^= lowbit
            while t < width and vs[t] < v:
                t += 1
            key = pre[t] + table[v][t + 1] + shifted[t]
            ri = bisect_left(keys_hi, key)
            if ri < nrows and keys_hi[ri] == key:
                if gf2:
                    col |= 1 << ri
                else:
                    col[ri] = 1 if t % 2 == 0 else p - 1
        yield col


def _facet_columns(rows_list, keys_lo, table, p, skip=None):
    """Boundary column of each (non-skipped) k-simplex against the (k-1)-layer."""
    gf2 = p == 2
    for ci, vs in enumerate(rows_list):
        if skip is not None and ci in skip:
            continue
        width = len(vs)
        pre = [0] * (width + 1)
        for i in range(width):
            pre[i + 1] = pre[i] + table[vs[i]][i + 1]
        down = [0] * (width + 1)
        for i in range(width - 1, -1, -1):
            down[i] = down[i + 1] + table[vs[i]][i]
        col = 0 if gf2 else {}
        for j in range(width):
            key = pre[j] + down[j + 1]
            ri = bisect_left(keys_lo, key)
            if ri >= len(keys_lo) or keys_lo[ri] != key:
                raise ValueError("complex is not closed under faces")
            if gf2:
                col |= 1 << ri
            else:
                col[ri] = 1 if j % 2 == 0 else p - 1
        yield col


def _coboundary_ranks(skel: Skeleton, maxdim: int, p: int):
    """Ranks of the boundary maps for dimensions 1..maxdim+1.

    Returns (ranks, top_known); ranks[j] = rank of the map from j-chains.
    top_known is False when the skeleton is truncated exactly at maxdim, in
    which case ranks[maxdim+1] is a placeholder zero.
    """
    ranks = [0] * (maxdim + 2)
    top_known = True
    cleared: set[int] | None = None
    nv = skel.num_vertices
    for k in range(maxdim + 1):
        if k + 1 > skel.dim_cap:
            top_known = skel.complete_flag
            break
        if len(skel.simplices[k + 1]) == 0:
            cleared = None
            continue
        rows_list = skel.simplices[k].tolist()
        keys_hi = skel.layer_keys(k + 1).tolist()
        table = _np_binom(nv, k + 3).tolist()
        cols = _insertion_columns(rows_list, keys_hi, skel.adjacency(), table, p, cleared)
        if p == 2:
            rank, pivot_rows = _reduce_gf2(cols)
        else:
            rank, pivot_rows = _reduce_modp(cols, p)
        ranks[k + 1] = rank
        cleared = set(pivot_rows)
    return ranks, top_known


def betti_numbers(skel: Skeleton, p: int = 2, maxdim=None) -> BettiVector:
    """Reduced Betti numbers of the skeleton over GF(p), dims 0..maxdim.

    maxdim defaults to dim_cap and may not exceed it.  The top value is
    certified only if the (maxdim+1)-layer was stored or the skeleton is
    complete; otherwise trusted_through = maxdim - 1.
    """
    _check_prime(p)
    if maxdim is None:
        maxdim = skel.dim_cap
    if maxdim < 0:
        raise ValueError("maxdim must be nonnegative")
    if maxdim > skel.dim_cap:
        raise ValueError(
            f"maxdim {maxdim} exceeds dim_cap {skel.dim_cap}: insufficient skeleton"
        )
    if skel.num_vertices == 0:
        return BettiVector(p, maxdim, (0,) * (maxdim + 1), maxdim)
    counts = skel.counts
    ranks, top_known = _coboundary_ranks(skel, maxdim, p)
    betti = tuple(
        counts[i] - ranks[i] - ranks[i + 1] - (1 if i == 0 else 0)
        for i in range(maxdim + 1)
    )
    trusted = maxdim if top_known else maxdim - 1
    assert all(b >= 0 for b in betti[: trusted + 1]), "negative Betti: engine bug"
    return BettiVector(p=p, maxdim=maxdim, reduced_betti=betti, trusted_through=trusted)


def betti_single_dim(space: SpaceSpec, i: int, p: int = 2, budget=None,
                     workers: int = 1) -> int:
    """β̃_i of the flag complex of space, keeping only layers i-1, i, i+1.

    Exact (not provisional): the full (i+1)-layer is enumerated, so the rank
    of the map into dimension i is known.
    """
    _check_prime(p)
    if i < 1:
        raise ValueError("i must be >= 1 (betti_numbers covers dimension 0)")
    budget = _resolve_budget(budget)
    adj = neighbor_masks(space)
    layers, counts, _complete = _enumerate_masks(
        adj, space.m, i + 1, budget, keep_dims=(i - 1, i, i + 1), workers=workers
    )
    if i >= len(counts) or counts[i] == 0:
        return 0
    nv = space.m
    table = _np_binom(nv, i + 3).tolist()

    def prep(k):
        rows = _rows_from_masks(layers.get(k, []), k)
        return rows.tolist(), _layer_ranks(rows, nv).tolist()

    rows_hi, _ = prep(i + 1)
    rows_mid, keys_mid = prep(i)
    _, keys_lo = prep(i - 1)
    if p == 2:
        r_hi, pivot_rows = _reduce_gf2(_facet_columns(rows_hi, keys_mid, table, p))
        r_lo, _ = _reduce_gf2(_facet_columns(rows_mid, keys_lo, table, p, set(pivot_rows)))
    else:
        r_hi, pivot_rows = _reduce_modp(_facet_columns(rows_hi, keys_mid, table, p), p)
        r_lo, _ = _reduce_modp(_facet_columns(rows_mid, keys_lo, table, p, set(pivot_rows)), p)
    return counts[i] - r_lo - r_hi


def connected_components(skel: Skeleton) -> int:
    """Number of connected components of the stored 1-skeleton (union-find)."""
    parent = list(range(skel.num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if skel.dim_cap >= 1:
        for a, b in skel.simplices[1].tolist():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return sum(1 for v in range(len(parent)) if find(v) == v)
