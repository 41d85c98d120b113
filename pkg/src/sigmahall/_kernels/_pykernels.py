"""Numpy implementations of the Cayley-table kernels.

Same signatures and results as the compiled module; used when the
extension is not built or ``SIGMAHALL_KERNELS=python`` is set.
"""
import numpy as np


def closure(table, gens):
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.uint8)
    mask[0] = 1
    gens = np.asarray(gens, dtype=np.int32)
    if gens.size == 0:
        return mask, 1
    frontier = np.zeros(1, dtype=np.int32)
    size = 1
    while frontier.size:
        cand = np.unique(table[frontier][:, gens])
        cand = cand[mask[cand] == 0]
        mask[cand] = 1
        size += cand.size
        frontier = cand
    return mask, size


def product_mask(table, a, b):
    mask = np.zeros(table.shape[0], dtype=np.uint8)
    mask[table[np.ix_(a, b)].ravel()] = 1
    return mask


def permutes(table, a, b):
    ab = product_mask(table, a, b)
    return bool(ab[table[np.ix_(b, a)]].all())


def permutability_matrix(table, flat, offsets):
    s = len(offsets) - 1
    groups = [flat[offsets[i]:offsets[i + 1]] for i in range(s)]
    out = np.eye(s, dtype=np.uint8)
    for i in range(s):
        for j in range(i + 1, s):
            if permutes(table, groups[i], groups[j]):
                out[i, j] = out[j, i] = 1
    return out
