"""Numpy evaluation of continuity and adjointness for a whole block of
functions ``X -> Y`` at once, over every ``Y`` of one size."""

from __future__ import annotations

import itertools

import numpy as np

from .topology import FiniteSpace

_CHUNK = 64


def block_verdicts(X: FiniteSpace, ys: list[FiniteSpace]):
    """Return ``(mappings, continuous, adjoint)``.

    ``mappings`` lists every function in lexicographic order; the two
    boolean arrays have shape ``(len(mappings), len(ys))``.
    """
    n_x = X.point_count
    n_y = ys[0].point_count if ys else 0
    mappings = list(itertools.product(range(n_y), repeat=n_x))
    m, k = len(mappings), len(ys)
    if m == 0 or k == 0:
        empty = np.zeros((m, k), dtype=bool)
        return mappings, empty, empty.copy()

    F = np.array(mappings, dtype=np.int64).reshape(m, n_x)
    point_bit = np.left_shift(1, np.arange(n_x, dtype=np.int64))

    # preimage of every subset t of Y: (m, 2**n_y)
    ts = np.arange(1 << n_y, dtype=np.int64)
    hits = (ts[None, :, None] >> F[:, None, :]) & 1
    pre_all = (hits * point_bit[None, None, :]).sum(axis=2)

    # image of every subset s of X: (m, 2**n_x)
    ss = np.arange(1 << n_x, dtype=np.int64)
    sel = (ss[:, None] >> np.arange(n_x, dtype=np.int64)[None, :]) & 1
    contrib = np.left_shift(1, F)
    img_all = np.bitwise_or.reduce(contrib[:, None, :] * sel[None, :, :], axis=2)

    closed_x = np.zeros(1 << n_x, dtype=bool)
    closed_x[list(X.closed_family)] = True
    cl_x = np.array(X.closure_table, dtype=np.int64)
    CX = np.array(X.closed_family, dtype=np.int64)
    img_u = img_all[:, CX]  # (m, |CX|)

    width = max(len(Y.closed_family) for Y in ys)
    full_y = (1 << n_y) - 1
    # Pad each family with repeats of the full set; repeats do not change a for-all.
    CY = np.full((k, width), full_y, dtype=np.int64)
    cl_y = np.empty((k, 1 << n_y), dtype=np.int64)
    for j, Y in enumerate(ys):
        CY[j, : len(Y.closed_family)] = Y.closed_family
        cl_y[j] = Y.closure_table

    cont = np.empty((m, k), dtype=bool)
    adj = np.empty((m, k), dtype=bool)
    for lo in range(0, k, _CHUNK):
        hi = min(k, lo + _CHUNK)
        cy = CY[lo:hi]
        pre = pre_all[:, cy]  # (m, c, L)
        cont[:, lo:hi] = closed_x[pre].all(axis=2)
        t_inv = cl_x[pre]  # (m, c, L)
        rows = np.arange(hi - lo)[None, :, None]
        t_dir = cl_y[lo:hi][rows, img_u[:, None, :]]  # (m, c, |CX|)
        left = (t_dir[:, :, :, None] & ~cy[None, :, None, :]) == 0
        right = (CX[None, None, :, None] & ~t_inv[:, :, None, :]) == 0
        adj[:, lo:hi] = (left == right).all(axis=(2, 3))
    return mappings, cont, adj
