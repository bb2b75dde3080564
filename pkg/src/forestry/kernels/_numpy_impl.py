"""Pure-numpy backend: the same kernels, vectorized across subsets.

Component counting runs min-label propagation on a (chunk x n) label matrix
instead of a per-subset union-find; subset sums use the doubling identity
sums(D + [d]) = sums(D) union (sums(D) + d). Slower than the JIT backend but
dependency-light, and an independent implementation to cross-check it.
"""

import numpy as np

_CHUNK = 1 << 14


def component_histogram(n, us, vs, lo, hi, hist):
    """Add, for every subset id in [lo, hi), one count to hist[k(A), |A|]."""
    m = us.shape[0]
    vert = np.arange(n, dtype=np.int64)
    bit = np.arange(m, dtype=np.int64)
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        ids = np.arange(start, stop, dtype=np.int64)
        rows = stop - start
        if m:
            inc = ((ids[:, None] >> bit[None, :]) & 1).astype(bool)
            sizes = inc.sum(axis=1)
        else:
            inc = np.zeros((rows, 0), dtype=bool)
            sizes = np.zeros(rows, dtype=np.int64)
        labels = np.broadcast_to(vert, (rows, n)).copy()
        # Each sweep pushes the per-component minimum label at least one hop,
        # so this stabilizes after at most n sweeps.
        while True:
            before = labels.copy()
            for e in range(m):
                u = int(us[e])
                v = int(vs[e])
                if u == v:
                    continue
                sel = inc[:, e]
                mn = np.minimum(labels[sel, u], labels[sel, v])
                labels[sel, u] = mn
                labels[sel, v] = mn
            if np.array_equal(before, labels):
                break
        k = (labels == vert[None, :]).sum(axis=1)
        np.add.at(hist, (k, sizes), 1)


def affine_subset_keys(base_key, deltas, out):
    """Fill out with base_key + sum of deltas over every subset (doubling)."""
    keys = np.array([base_key], dtype=np.int64)
    for d in deltas:
        keys = np.concatenate([keys, keys + d])
    out[:] = keys
