"""Backend selection and partitioned execution of the enumeration kernels.

The compiled module is used when it imports; set ``CYCLOCODE_BACKEND=python``
to force the fallback.  Work is split into contiguous ranges of the first
coordinate, each range owns a private histogram, and results are merged by
addition, so output does not depend on the thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _pykernels

DEFAULT_BUDGET = 10**9

try:
    if os.environ.get("CYCLOCODE_BACKEND", "").lower() == "python":
        raise ImportError("fallback forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_impl = _ckernels if _ckernels is not None else _pykernels


def default_budget() -> int:
    env = os.environ.get("CYCLOCODE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def get_impl(name: str | None = None):
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def partitions(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, hi - lo))
    step, extra = divmod(hi - lo, parts)
    out, start = [], lo
    for k in range(parts):
        end = start + step + (1 if k < extra else 0)
        out.append((start, end))
        start = end
    return out


def _run(fn, chunks, threads):
    if threads <= 1 or len(chunks) == 1:
        results = [fn(*c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(lambda c: fn(*c), chunks))
    total = results[0].copy()
    for res in results[1:]:
        total += res
    return total


def weight_histogram(words: np.ndarray, add: np.ndarray, threads: int = 1,
                     backend: str | None = None) -> np.ndarray:
    impl = get_impl(backend)
    words = np.ascontiguousarray(words, dtype=np.int32)
    add = np.ascontiguousarray(add, dtype=np.int32)
    chunks = partitions(0, words.shape[1], threads)
    return _run(lambda lo, hi: impl.weight_histogram(words, add, lo, hi), chunks, threads)


def sum_class_counts(cands, zech, order: int, threads: int = 1,
                     backend: str | None = None) -> np.ndarray:
    """``cands`` is a list of per-position log arrays."""
    impl = get_impl(backend)
    u = len(cands)
    width = max(len(c) for c in cands)
    mat = np.zeros((u, width), dtype=np.int64)
    lens = np.zeros(u, dtype=np.int64)
    for j, c in enumerate(cands):
        mat[j, :len(c)] = c
        lens[j] = len(c)
    zech = np.ascontiguousarray(zech, dtype=np.int64)
    chunks = partitions(0, int(lens[0]), threads)
    return _run(lambda lo, hi: impl.sum_class_counts(mat, lens, zech, order, lo, hi),
                chunks, threads)
