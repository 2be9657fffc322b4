"""Vectorised numpy implementations of the hot counting kernels."""

from __future__ import annotations

import numpy as np


def quotient_counts(table, inverse, members, identity):
    """Count x*y^-1 over ordered pairs x != y of ``members``.

    Returns an int64 vector of length |G|; the identity entry is 0 for any
    genuine subset (x*y^-1 = 1 forces x = y, which the diagonal removal drops).
    """
    m = np.asarray(members, dtype=np.intp)
    quo = table[np.ix_(m, inverse[m])]
    counts = np.bincount(quo.ravel(), minlength=table.shape[0]).astype(np.int64)
    counts[identity] -= m.size
    return counts


def diffset_batch_mask(table, inverse, cands, lam):
    """Boolean mask of which candidate k-subsets are (v,k,lam) difference sets.

    ``cands`` is an (m, k) index matrix. Callers guarantee k(k-1) = lam(v-1),
    so "no non-identity count exceeds lam" is equivalent to "all equal lam".
    """
    v = table.shape[0]
    m, k = cands.shape
    if m == 0:
        return np.zeros(0, dtype=np.bool_)
    quo = table[cands[:, :, None], inverse[cands[:, None, :]]]
    flat = quo.reshape(m, k * k).astype(np.int64) + (np.arange(m, dtype=np.int64) * v)[:, None]
    counts = np.bincount(flat.ravel(), minlength=m * v).reshape(m, v)
    identity = int(table[cands[0, 0], inverse[cands[0, 0]]])
    counts[:, identity] -= k
    ok = (counts == lam)
    ok[:, identity] = counts[:, identity] == 0
    return ok.all(axis=1)


def common_counts(a, b):
    """Pairwise overlap counts: out[i, j] = sum_t a[i, t] * b[j, t]."""
    return np.asarray(a, dtype=np.int32) @ np.asarray(b, dtype=np.int32).T


def convolve(table, a, b):
    """Group-ring product: out[table[f, g]] += a[f] * b[g]."""
    out = np.zeros(table.shape[0], dtype=np.int64)
    b64 = np.asarray(b, dtype=np.int64)
    for f in np.nonzero(a)[0]:
        # each table row is a permutation, so fancy += has no index collisions
        out[table[f]] += a[f] * b64
    return out
