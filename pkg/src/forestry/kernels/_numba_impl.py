"""JIT backend: one tight loop over edge subsets.

Both kernels release the GIL so subset ranges can run on real threads.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def component_histogram(n, us, vs, lo, hi, hist):
    """Add, for every subset id in [lo, hi), one count to hist[k(A), |A|].

    k(A) is computed by a fresh union-find per subset (path halving, union
    by arbitrary root). us/vs are the edge endpoints, bit e of the subset id
    selects edge e.
    """
    m = us.shape[0]
    parent = np.empty(n, np.int64)
    for s in range(lo, hi):
        for i in range(n):
            parent[i] = i
        k = n
        c = 0
        for e in range(m):
            if (s >> e) & 1:
                c += 1
                x = us[e]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = vs[e]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[y] = x
                    k -= 1
        hist[k, c] += 1


@njit(cache=True, nogil=True)
def affine_subset_keys(base_key, deltas, out):
    """Fill out[i] with base_key + sum of deltas over the i-th visited subset.

    Walks the subsets in Gray-code order so each step flips a single delta,
    O(1) per subset. The output order is not subset-id order; callers sort.
    """
    m = deltas.shape[0]
    total = out.shape[0]
    cur = base_key
    out[0] = cur
    state = 0
    for idx in range(1, total):
        b = 0
        while ((idx >> b) & 1) == 0:
            b += 1
        if (state >> b) & 1:
            cur -= deltas[b]
            state &= ~(1 << b)
        else:
            cur += deltas[b]
            state |= 1 << b
        out[idx] = cur
