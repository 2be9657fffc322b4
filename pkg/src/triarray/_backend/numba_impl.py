"""numba-compiled loop kernels; same contracts as numpy_impl."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def quotient_counts(table, inverse, members, identity):
    v = table.shape[0]
    k = members.shape[0]
    counts = np.zeros(v, dtype=np.int64)
    for i in range(k):
        xi = members[i]
        for j in range(k):
            if i == j:
                continue
            counts[table[xi, inverse[members[j]]]] += 1
    return counts


@njit(cache=True, nogil=True)
def diffset_batch_mask(table, inverse, cands, lam):
    m, k = cands.shape
    v = table.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    counts = np.zeros(v, dtype=np.int64)
    for c in range(m):
        for t in range(v):
            counts[t] = 0
        ok = True
        for i in range(k):
            xi = cands[c, i]
            for j in range(k):
                if i == j:
                    continue
                z = table[xi, inverse[cands[c, j]]]
                counts[z] += 1
                if counts[z] > lam:
                    ok = False
                    break
            if not ok:
                break
        out[c] = ok
    return out


@njit(cache=True, nogil=True)
def common_counts(a, b):
    n, d = a.shape
    m = b.shape[0]
    out = np.zeros((n, m), dtype=np.int32)
    for i in range(n):
        for j in range(m):
            s = 0
            for t in range(d):
                if a[i, t] != 0 and b[j, t] != 0:
                    s += 1
            out[i, j] = s
    return out


@njit(cache=True, nogil=True)
def convolve(table, a, b):
    v = table.shape[0]
    out = np.zeros(v, dtype=np.int64)
    for f in range(v):
        af = a[f]
        if af == 0:
            continue
        for g in range(v):
            bg = b[g]
            if bg != 0:
                out[table[f, g]] += af * bg
    return out
