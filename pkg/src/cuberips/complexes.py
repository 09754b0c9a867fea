"""Flag-complex skeletons: clique enumeration, derived subcomplexes,
combinatorial ranking, and a plain-text export.

A skeleton stores one index array per dimension.  Rows are vertex indices
into ``verts`` (the sorted external labels), ascending within each row, and
rows are sorted colexicographically — the same order as the numeric order of
vertex-set bitmasks and of combinatorial-number-system ranks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .hamming import SpaceSpec, hamming_distance, neighbor_masks, neighborhood

DEFAULT_BUDGET = 1 << 28
_RANK_LIMIT = (1 << 63) - 1


class SizeBudgetExceeded(RuntimeError):
    """Enumeration would exceed the simplex-count budget.

    ``partial_counts`` holds the per-dimension counts fully enumerated before
    the abort.
    """

    def __init__(self, message: str, partial_counts=()):
        super().__init__(message)
        self.partial_counts = tuple(int(c) for c in partial_counts)


def _resolve_budget(budget) -> int:
    if budget is None:
        return DEFAULT_BUDGET
    budget = int(budget)
    if budget < 1:
        raise ValueError("budget must be positive")
    return budget


def _np_binom(nv: int, tmax: int) -> np.ndarray:
    """Table of C(v, t) for v <= nv, t <= tmax, as int64.

    Raises if any needed value would overflow the 63-bit rank keys; such a
    layer could not be enumerated under any realistic budget anyway.
    """
    if math.comb(nv, min(tmax, nv // 2)) > _RANK_LIMIT:
        raise OverflowError(
            f"rank keys for {nv} vertices at {tmax} slots exceed 63 bits"
        )
    out = np.zeros((nv + 1, tmax + 1), dtype=np.int64)
    out[:, 0] = 1
    for t in range(1, tmax + 1):
        # Pascal: C(v, t) = C(v-1, t) + C(v-1, t-1)
        np.cumsum(out[: nv + 1, t - 1][:-1], out=out[1:, t])
    return out


def _layer_ranks(rows: np.ndarray, nv: int) -> np.ndarray:
    """Combinatorial-number-system rank of each row: sum of C(row[t], t+1)."""
    width = rows.shape[1]
    table = _np_binom(nv, width)
    out = np.zeros(len(rows), dtype=np.int64)
    for t in range(width):
        out += table[rows[:, t], t + 1]
    return out


def _rows_from_masks(masks: list[int], k: int) -> np.ndarray:
    arr = np.empty((len(masks), k + 1), dtype=np.uint32)
    for i, smask in enumerate(masks):
        j = 0
        while smask:
            low = smask & -smask
            arr[i, j] = low.bit_length() - 1
            smask ^= low
            j += 1
    return arr


@dataclass(eq=False)
class Skeleton:
    """Per-dimension simplex inventories of a simplicial complex.

    ``simplices[k]`` is a (counts[k], k+1) uint32 array for every
    0 <= k <= dim_cap (empty beyond the top dimension).  ``complete_flag`` is
    true when dim_cap is at least the top dimension of the full complex, i.e.
    nothing was truncated away.  ``source`` describes provenance: a SpaceSpec
    for metric enumerations, or a tuple tag for derived complexes.
    """

    verts: np.ndarray
    simplices: list[np.ndarray]
    dim_cap: int
    complete_flag: bool
    source: object = None
    _adj: list[int] | None = field(default=None, init=False, repr=False)
    _keys: dict = field(default_factory=dict, init=False, repr=False)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.simplices)

    @property
    def num_vertices(self) -> int:
        return len(self.verts)

    def top_dimension(self) -> int:
        """Largest dimension with at least one stored simplex (-1 if empty)."""
        for k in range(self.dim_cap, -1, -1):
            if len(self.simplices[k]):
                return k
        return -1

    def adjacency(self) -> list[int]:
        """Bitmasks over vertex indices of the stored 1-skeleton."""
        if self._adj is None:
            masks = [0] * self.num_vertices
            if self.dim_cap >= 1:
                for a, b in self.simplices[1].tolist():
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
            self._adj = masks
        return self._adj

    def layer_keys(self, k: int) -> np.ndarray:
        """Sorted int64 rank keys of the dimension-k layer."""
        if k not in self._keys:
            self._keys[k] = _layer_ranks(self.simplices[k], self.num_vertices)
        return self._keys[k]

    def has_simplex(self, sigma) -> bool:
        """Membership test for a simplex given by external labels."""
        idx = self._indices_of(sigma)
        k = len(idx) - 1
        if k > self.dim_cap:
            raise ValueError(f"dimension {k} above dim_cap {self.dim_cap}")
        keys = self.layer_keys(k)
        key = sum(math.comb(v, t + 1) for t, v in enumerate(idx))
        pos = int(np.searchsorted(keys, key))
        return pos < len(keys) and int(keys[pos]) == key

    def _indices_of(self, sigma) -> list[int]:
        labels = sorted(int(v) for v in sigma)
        if not labels:
            raise ValueError("sigma must be nonempty")
        if len(set(labels)) != len(labels):
            raise ValueError("sigma has repeated vertices")
        pos = np.searchsorted(self.verts, labels)
        if (pos >= self.num_vertices).any() or (
            self.verts[np.minimum(pos, self.num_vertices - 1)] != labels
        ).any():
            raise ValueError(f"vertices {labels} not all present in skeleton")
        return [int(i) for i in pos]


def _expand_chunk(chunk, adj):
    out = []
    for smask, cand in chunk:
        c = cand
        while c:
            low = c & -c
            u = low.bit_length() - 1
            c ^= low
            out.append((smask | low, cand & adj[u] & -(low << 1)))
    return out


def _enumerate_masks(adj, nv, dim_cap, budget, keep_dims=None, workers=1):
    """Breadth-first clique expansion over adjacency bitmasks.

    Returns (layers, counts, complete) where layers maps each kept dimension
    to its ascending list of vertex-set masks.  Each simplex carries the mask
    of still-extendable vertices (neighbors of all members, above the max),
    so the size of the next layer is known before it is materialized and a
    budget overrun aborts cleanly.
    """
    keep = (
        set(range(dim_cap + 1))
        if keep_dims is None
        else {d for d in keep_dims if 0 <= d <= dim_cap}
    )
    frontier = [(1 << v, adj[v] & -(2 << v)) for v in range(nv)]
    layers: dict[int, list[int]] = {}
    counts: list[int] = []
    total, k = 0, 0
    while True:
        if total + len(frontier) > budget:
            raise SizeBudgetExceeded(
                f"budget {budget} exceeded at dimension {k}", counts
            )
        total += len(frontier)
        counts.append(len(frontier))
        frontier.sort()
        if k in keep:
            layers[k] = [smask for smask, _ in frontier]
        grow = sum(cand.bit_count() for _, cand in frontier)
        if k == dim_cap or grow == 0:
            return layers, counts, grow == 0
        if total + grow > budget:
            raise SizeBudgetExceeded(
                f"budget {budget} exceeded at dimension {k + 1}", counts
            )
        if workers > 1 and len(frontier) > 4 * workers:
            step = -(-len(frontier) // workers)
            chunks = [frontier[i : i + step] for i in range(0, len(frontier), step)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = pool.map(_expand_chunk, chunks, [adj] * len(chunks))
            frontier = [item for part in parts for item in part]
        else:
            frontier = _expand_chunk(frontier, adj)
        k += 1


def _skeleton_from_mask_layers(verts, layers, dim_cap, complete, source) -> Skeleton:
    sims = [_rows_from_masks(layers.get(k, []), k) for k in range(dim_cap + 1)]
    return Skeleton(
        verts=np.asarray(verts, dtype=np.int64),
        simplices=sims,
        dim_cap=dim_cap,
        complete_flag=complete,
        source=source,
    )


def enumerate_skeleton(
    space: SpaceSpec, dim_cap: int, budget=None, workers: int = 1
) -> Skeleton:
    """All simplices of the flag complex of space, up to dimension dim_cap.

    Simplices are the vertex sets of pairwise Hamming distance <= space.r.
    Raises SizeBudgetExceeded if the total simplex count would pass budget
    (default 2**28).
    """
    if dim_cap < 0:
        raise ValueError("dim_cap must be nonnegative")
    budget = _resolve_budget(budget)
    adj = neighbor_masks(space)
    layers, _, complete = _enumerate_masks(
        adj, space.m, dim_cap, budget, workers=workers
    )
    return _skeleton_from_mask_layers(
        np.arange(space.m, dtype=np.int64), layers, dim_cap, complete, space
    )


def flag_skeleton_from_graph(
    labels, edges, dim_cap: int, budget=None, workers: int = 1, source=None
) -> Skeleton:
    """Flag complex of an explicit graph (labels sorted, edges as label pairs)."""
    if dim_cap < 0:
        raise ValueError("dim_cap must be nonnegative")
    budget = _resolve_budget(budget)
    verts = np.asarray(sorted(int(v) for v in labels), dtype=np.int64)
    if len(np.unique(verts)) != len(verts):
        raise ValueError("labels must be distinct")
    lookup = {int(v): i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for a, b in edges:
        if a == b:
            raise ValueError(f"loop edge at {a}")
        try:
            ia, ib = lookup[int(a)], lookup[int(b)]
        except KeyError as err:
            raise ValueError(f"edge ({a}, {b}) uses an unknown label") from err
        adj[ia] |= 1 << ib
        adj[ib] |= 1 << ia
    layers, _, complete = _enumerate_masks(
        adj, len(verts), dim_cap, budget, workers=workers
    )
    if source is None:
        source = ("graph", len(verts))
    return _skeleton_from_mask_layers(verts, layers, dim_cap, complete, source)


def link_complex(space: SpaceSpec, v: int, dim_cap: int, budget=None) -> Skeleton:
    """Flag complex induced on the neighbors of v (v itself excluded)."""
    nbrs = sorted(neighborhood(space, v))
    edges = [
        (a, b)
        for a, b in combinations(nbrs, 2)
        if hamming_distance(a, b) <= space.r
    ]
    return flag_skeleton_from_graph(
        nbrs, edges, dim_cap, budget=budget, source=("link", space, int(v))
    )


def kneser_independence_complex(n: int, dim_cap: int, budget=None) -> Skeleton:
    """Independence complex of the Kneser graph on 2-subsets of an n-set.

    Vertices are the 2-subsets in colexicographic order (labelled by their
    rank); simplices are families of pairwise *intersecting* 2-subsets.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    pairs = [(a, b) for b in range(n) for a in range(b)]
    # independence complex of the Kneser graph = flag complex of its complement
    edges = [
        (i, j)
        for i, j in combinations(range(len(pairs)), 2)
        if set(pairs[i]) & set(pairs[j])
    ]
    return flag_skeleton_from_graph(
        range(len(pairs)), edges, dim_cap, budget=budget, source=("kneser", n)
    )


def skeleton_from_facets(facets, dim_cap=None, source=None) -> Skeleton:
    """Build a skeleton from explicit top simplices (closed downward)."""
    facets = [tuple(sorted(int(v) for v in f)) for f in facets]
    if not facets or any(not f for f in facets):
        raise ValueError("facets must be nonempty simplices")
    verts = sorted({v for f in facets for v in f})
    lookup = {v: i for i, v in enumerate(verts)}
    top = max(len(f) for f in facets) - 1
    if dim_cap is None:
        dim_cap = top
    by_dim: list[set[int]] = [set() for _ in range(min(dim_cap, top) + 1)]
    for f in facets:
        idx = [lookup[v] for v in f]
        for k in range(min(dim_cap, len(idx) - 1) + 1):
            for sub in combinations(idx, k + 1):
                smask = 0
                for u in sub:
                    smask |= 1 << u
                by_dim[k].add(smask)
    layers = {k: sorted(s) for k, s in enumerate(by_dim)}
    return _skeleton_from_mask_layers(
        verts, layers, dim_cap, dim_cap >= top, source or ("facets", len(facets))
    )


def delete_vertex(skel: Skeleton, v: int) -> Skeleton:
    """Subcomplex on all vertices except label v."""
    pos = int(np.searchsorted(skel.verts, v))
    if pos >= skel.num_vertices or int(skel.verts[pos]) != int(v):
        raise ValueError(f"vertex {v} not in skeleton")
    sims = []
    for arr in skel.simplices:
        if len(arr):
            kept = arr[~(arr == pos).any(axis=1)]
            sims.append(np.where(kept > pos, kept - 1, kept).astype(np.uint32))
        else:
            sims.append(arr)
    return Skeleton(
        verts=np.delete(skel.verts, pos),
        simplices=sims,
        dim_cap=skel.dim_cap,
        complete_flag=skel.complete_flag,
        source=("delete", skel.source, int(v)),
    )


def induced_subcomplex(skel: Skeleton, vs) -> Skeleton:
    """Subcomplex on the given set of vertex labels."""
    want = sorted({int(v) for v in vs})
    pos = np.searchsorted(skel.verts, want)
    if len(want) and (
        (pos >= skel.num_vertices).any()
        or (skel.verts[np.minimum(pos, skel.num_vertices - 1)] != want).any()
    ):
        raise ValueError("vs contains labels not in the skeleton")
    keep = np.zeros(skel.num_vertices, dtype=bool)
    keep[pos] = True
    remap = np.cumsum(keep) - 1
    sims = []
    for arr in skel.simplices:
        if len(arr):
            kept = arr[keep[arr].all(axis=1)]
            sims.append(remap[kept].astype(np.uint32))
        else:
            sims.append(arr)
    return Skeleton(
        verts=skel.verts[keep],
        simplices=sims,
        dim_cap=skel.dim_cap,
        complete_flag=skel.complete_flag,
        source=("induced", skel.source, tuple(want)),
    )


def star_cluster(skel: Skeleton, sigma) -> Skeleton:
    """Union of the vertex stars of sigma's vertices, truncated at dim_cap.

    Defined for flag skeletons: a simplex lies in the star of v exactly when
    all its vertices are adjacent to (or equal to) v.
    """
    sigma = tuple(sorted(int(v) for v in sigma))
    idx = skel._indices_of(sigma)
    if not skel.has_simplex(sigma):
        raise ValueError(f"sigma {sigma} is not a simplex of the skeleton")
    adj = skel.adjacency()
    closed = [adj[i] | (1 << i) for i in idx]
    keep_vertex = np.zeros(skel.num_vertices, dtype=bool)
    kept_layers = []
    for arr in skel.simplices:
        flags = np.zeros(len(arr), dtype=bool)
        for i, row in enumerate(arr.tolist()):
            smask = 0
            for u in row:
                smask |= 1 << u
            flags[i] = any((smask & ~c) == 0 for c in closed)
        kept = arr[flags]
        kept_layers.append(kept)
        if len(kept) and kept.shape[1] == 1:
            keep_vertex[kept[:, 0]] = True
    remap = np.cumsum(keep_vertex) - 1
    sims = [remap[arr].astype(np.uint32) if len(arr) else arr for arr in kept_layers]
    return Skeleton(
        verts=skel.verts[keep_vertex],
        simplices=sims,
        dim_cap=skel.dim_cap,
        complete_flag=skel.complete_flag,
        source=("star_cluster", skel.source, sigma),
    )


def simplex_diameter(sigma, space: SpaceSpec) -> int:
    """Largest pairwise Hamming distance within sigma."""
    labels = sorted(int(v) for v in sigma)
    if not labels:
        raise ValueError("sigma must be nonempty")
    for v in labels:
        if not 0 <= v < space.m:
            raise ValueError(f"vertex {v} out of range for m={space.m}")
    best = 0
    for a, b in combinations(labels, 2):
        d = hamming_distance(a, b)
        if d > best:
            best = d
    return best


@dataclass(frozen=True)
class SimplexRank:
    """Position of a simplex in the colexicographic order of its dimension."""

    dimension: int
    rank: int


def simplex_rank(sigma, universe_size: int) -> SimplexRank:
    """Colexicographic rank via the combinatorial number system."""
    labels = sorted(int(v) for v in sigma)
    if not labels or len(set(labels)) != len(labels):
        raise ValueError("sigma must be a nonempty set of distinct vertices")
    if labels[0] < 0 or labels[-1] >= universe_size:
        raise ValueError("sigma outside universe")
    rank = sum(math.comb(v, t + 1) for t, v in enumerate(labels))
    return SimplexRank(dimension=len(labels) - 1, rank=rank)


def simplex_unrank(dimension: int, rank: int, universe_size: int) -> tuple[int, ...]:
    """Inverse of simplex_rank."""
    if dimension < 0 or dimension >= universe_size:
        raise ValueError("dimension out of range")
    if not 0 <= rank < math.comb(universe_size, dimension + 1):
        raise ValueError("rank out of range")
    out = []
    limit = universe_size
    rem = rank
    for t in range(dimension, -1, -1):
        v = limit - 1
        while math.comb(v, t + 1) > rem:
            v -= 1
        out.append(v)
        rem -= math.comb(v, t + 1)
        limit = v
    return tuple(reversed(out))


def write_skeleton_text(skel: Skeleton, path) -> None:
    """Plain-text export: header "dim_cap m n r", then one simplex per line
    (space-separated increasing labels), grouped by ascending dimension."""
    space = skel.source
    if not isinstance(space, SpaceSpec):
        raise ValueError("text export requires a metric-space skeleton")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{skel.dim_cap} {space.m} {space.n} {space.r}\n")
        for arr in skel.simplices:
            labels = skel.verts[arr] if len(arr) else arr
            for row in np.asarray(labels).tolist():
                fh.write(" ".join(str(v) for v in row) + "\n")
