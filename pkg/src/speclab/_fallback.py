"""Pure numpy/scipy implementations of the hot kernels.

These are the reference semantics for `speclab._kernels`; the compiled
extension must agree bit-for-bit on the integer outputs and to rounding
error on the float ones.  Selected automatically when the extension is
unavailable (see `speclab.backend`).
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components as _cs_connected

UNREACHABLE = np.int16(-1)


def _arc_matrix(n, indptr, indices):
    data = np.ones(len(indices), dtype=np.float32)
    return sp.csr_matrix((data, indices, indptr), shape=(n, n))


def bfs_distances(indptr, indices, source, n):
    """Single-source BFS distances; unreachable vertices get -1."""
    dist = np.full(n, UNREACHABLE, dtype=np.int16)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        # gather all neighbors of the frontier, keep the unseen ones
        starts = indptr[frontier]
        stops = indptr[frontier + 1]
        total = int((stops - starts).sum())
        if total == 0:
            break
        nxt = np.concatenate([indices[a:b] for a, b in zip(starts, stops)])
        nxt = np.unique(nxt)
        nxt = nxt[dist[nxt] == UNREACHABLE]
        dist[nxt] = level
        frontier = nxt
    return dist

def all_pairs_distances(indptr, indices, n):
    """Dense (n, n) int16 matrix of BFS distances, -1 for unreachable pairs.

    Level-synchronous BFS run for all sources at once through sparse
    matrix products: frontier and visited sets are kept as (n, n)
    matrices, one column per source.
    """
    A = _arc_matrix(n, indptr, indices)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int16)
    np.fill_diagonal(dist, 0)
    visited = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=np.float32)
    level = 0
    while True:
        level += 1
        reached = (A @ frontier) > 0          # reached[v, s]
        new = reached & ~visited
        if not new.any():
            break
        dist.T[new] = level                   # dist[s, v] = level
        visited |= new
        frontier = new.astype(np.float32)
    return dist


def pair_counts(dist_matrix, kmax=None):
    """Number of ordered pairs at each distance, indexed by distance."""
    d = dist_matrix[dist_matrix >= 0].astype(np.int64)
    counts = np.bincount(d.ravel())
    if kmax is not None and len(counts) < kmax + 1:
        counts = np.pad(counts, (0, kmax + 1 - len(counts)))
    return counts


def distance_pair_sums(dist_matrix, F, ks, batch=256):
    """Sum of F[i, c] * F[j, c] over ordered pairs (i, j) at each distance.

    Parameters
    ----------
    dist_matrix : (n, n) int array of pairwise distances.
    F : (n, ncol) float64 array, one column per vector.
    ks : sequence of distances to evaluate.

    Returns
    -------
    (len(ks), ncol) float64 array of pair sums (not normalized by pair
    counts).

    The inner product is performed as a dense mask matmul per source
    batch, which routes the O(n^2 * ncol) work per distance through BLAS.
    """
    n, ncol = F.shape
    ks = np.asarray(ks, dtype=np.int64)
    out = np.zeros((len(ks), ncol))
    for lo in range(0, n, batch):
        hi = min(lo + batch, n)
        block = dist_matrix[lo:hi]
        for t, k in enumerate(ks):
            mask = (block == k).astype(np.float64)
            partial = mask @ F                    # (b, ncol)
            out[t] += np.einsum("ic,ic->c", F[lo:hi], partial)
    return out


def _canonical_labels(labels):
    # relabel so components are numbered by their smallest vertex id
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    remap = np.empty(len(order), dtype=np.int32)
    remap[order] = np.arange(len(order), dtype=np.int32)
    return remap[labels]


def connected_components(indptr, indices, n):
    """Component labels (int32) numbered by smallest contained vertex id."""
    A = _arc_matrix(n, indptr, indices)
    _, labels = _cs_connected(A, directed=False)
    return _canonical_labels(labels.astype(np.int32))


def components_signed(indptr, indices, n, signs):
    """Components of the subgraph keeping only same-sign edges."""
    keep = signs[np.repeat(np.arange(n), np.diff(indptr))] == signs[indices]
    return _masked_components(indptr, indices, n, keep)


def components_edge_mask(indptr, indices, n, arc_edge, edge_keep):
    """Components of the subgraph keeping only flagged undirected edges."""
    keep = edge_keep[arc_edge]
    return _masked_components(indptr, indices, n, keep)


def _masked_components(indptr, indices, n, arc_keep):
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    rows = rows[arc_keep]
    cols = indices[arc_keep]
    A = sp.csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                      shape=(n, n))
    _, labels = _cs_connected(A, directed=False)
    return _canonical_labels(labels.astype(np.int32))
