"""Backend dispatch for the hot enumeration kernels.

Two interchangeable backends compute the same results: a numba JIT backend
(default when numba imports) and a pure-numpy fallback. Selection:

    FORESTRY_KERNEL=numba   require the JIT backend (error if unavailable)
    FORESTRY_KERNEL=numpy   force the fallback
    FORESTRY_KERNEL=auto    numba if importable, else numpy (the default)

``set_backend`` overrides the environment choice at runtime (used by the
tests and the benchmark script).

The two public kernels:

* ``subset_component_histogram``: histogram of (component count, subset
  size) over all 2^m edge subsets. Feeds forest counting and the Tutte
  subset expansion.
* ``distinct_subset_sums`` / ``count_distinct_subset_sums``: the set of
  distinct vectors base + sum of a subset of integer delta vectors, over
  all 2^m subsets. Feeds degree-sequence and orientation-vector counting.
  Vectors are packed into single mixed-radix int64 keys when the coordinate
  ranges allow it, with a pure-Python fallback when they do not.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

import numpy as np

_ENV_VAR = "FORESTRY_KERNEL"
_VALID = ("auto", "numba", "numpy")

try:
    from . import _numba_impl

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    _numba_impl = None
    HAS_NUMBA = False

from . import _numpy_impl

_backend_override: str | None = None


def _env_choice() -> str:
    value = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if value not in _VALID:
        raise ValueError(f"{_ENV_VAR} must be one of {_VALID}, got {value!r}")
    return value


def active_backend() -> str:
    """Name of the backend that will run the next kernel call."""
    choice = _backend_override or _env_choice()
    if choice == "numba" and not HAS_NUMBA:
        raise RuntimeError("FORESTRY_KERNEL=numba but numba is not importable")
    if choice == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    return choice


def set_backend(name: str | None) -> None:
    """Force a backend ("numba"/"numpy"), or None to follow the environment."""
    if name is not None and name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID} or None, got {name!r}")
    global _backend_override
    _backend_override = name


def _impl():
    return _numba_impl if active_backend() == "numba" else _numpy_impl


# -- component histogram over all edge subsets ---------------------------


def subset_component_histogram(
    num_vertices: int,
    edges: Sequence[tuple[int, int]],
    workers: int = 1,
) -> np.ndarray:
    """hist[k, c] = number of edge subsets with k components and c edges.

    Shape (num_vertices + 1, m + 1); the subset range splits across
    ``workers`` threads (the sum of partial histograms is schedule-independent).
    """
    m = len(edges)
    us = np.fromiter((u for u, _ in edges), dtype=np.int64, count=m)
    vs = np.fromiter((v for _, v in edges), dtype=np.int64, count=m)
    total = 1 << m
    impl = _impl().component_histogram
    hist = np.zeros((num_vertices + 1, m + 1), dtype=np.int64)
    if workers <= 1 or total < (1 << 16):
        impl(num_vertices, us, vs, 0, total, hist)
        return hist
    bounds = [total * i // workers for i in range(workers + 1)]
    parts = [np.zeros_like(hist) for _ in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(impl, num_vertices, us, vs, bounds[i], bounds[i + 1], parts[i])
            for i in range(workers)
        ]
        for f in futures:
            f.result()
    for part in parts:
        hist += part
    return hist


# -- distinct subset sums of integer vectors ------------------------------


def _mixed_radix(
    base: Sequence[int],
    lower: Sequence[int],
    upper: Sequence[int],
):
    """Mixed-radix packing of vectors with per-coordinate bounds, or None.

    Returns (places, base_key) with key = sum((x_i - lower_i) * place_i),
    provided every possible key fits in a signed 64-bit integer.
    """
    places = []
    place = 1
    for lo, hi in zip(lower, upper):
        places.append(place)
        place *= hi - lo + 1
    if place >= 1 << 63:
        return None
    base_key = sum((b - lo) * p for b, lo, p in zip(base, lower, places))
    return np.array(places, dtype=np.int64), base_key


def _python_subset_sums(base, deltas) -> set[tuple[int, ...]]:
    # Exact fallback for coordinate ranges too wide for int64 packing.
    n = len(base)
    seen = {tuple(base)}
    cur = list(base)
    state = 0
    for idx in range(1, 1 << len(deltas)):
        b = (idx & -idx).bit_length() - 1
        sign = -1 if (state >> b) & 1 else 1
        state ^= 1 << b
        d = deltas[b]
        for i in range(n):
            cur[i] += sign * d[i]
        seen.add(tuple(cur))
    return seen


def _unique_keys(base_key: int, deltas_keys: np.ndarray) -> np.ndarray:
    total = 1 << len(deltas_keys)
    out = np.empty(total, dtype=np.int64)
    _impl().affine_subset_keys(np.int64(base_key), deltas_keys, out)
    return np.unique(out)


def distinct_subset_sums(
    base: Sequence[int],
    deltas: Iterable[Sequence[int]],
    lower: Sequence[int],
    upper: Sequence[int],
) -> np.ndarray:
    """All distinct vectors base + sum(S) over delta subsets S, as an array.

    lower/upper are inclusive per-coordinate bounds valid for every reachable
    vector (callers know them from degree arithmetic). Rows come out sorted
    by packed key, which is a deterministic total order.
    """
    deltas = [tuple(d) for d in deltas]
    packed = _mixed_radix(base, lower, upper)
    if packed is None:
        vecs = sorted(_python_subset_sums(tuple(base), deltas))
        return np.array(vecs, dtype=np.int64).reshape(len(vecs), len(base))
    places, base_key = packed
    delta_keys = np.array(
        [sum(int(x) * int(p) for x, p in zip(d, places)) for d in deltas],
        dtype=np.int64,
    )
    keys = _unique_keys(base_key, delta_keys)
    lower_arr = np.asarray(lower, dtype=np.int64)
    radix = np.asarray(upper, dtype=np.int64) - lower_arr + 1
    return (keys[:, None] // places[None, :]) % radix[None, :] + lower_arr[None, :]


def count_distinct_subset_sums(
    base: Sequence[int],
    deltas: Iterable[Sequence[int]],
    lower: Sequence[int],
    upper: Sequence[int],
) -> int:
    """len(distinct_subset_sums(...)) without decoding the vectors."""
    deltas = [tuple(d) for d in deltas]
    packed = _mixed_radix(base, lower, upper)
    if packed is None:
        return len(_python_subset_sums(tuple(base), deltas))
    places, base_key = packed
    delta_keys = np.array(
        [sum(int(x) * int(p) for x, p in zip(d, places)) for d in deltas],
        dtype=np.int64,
    )
    return int(_unique_keys(base_key, delta_keys).size)
