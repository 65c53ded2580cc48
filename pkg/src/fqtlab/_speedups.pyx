# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled pairwise-sum loops over packed uint64 polynomial codes.

See fqtlab.kernels for the packing layout and the matching pure-Python
implementations.  Results are bit-identical; these are just the quadratic
loops done in C with hash containers for deduplication.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set

import numpy as np


cdef uint64_t _ones_mask(int width, int ndigits):
    cdef uint64_t ones = 0
    cdef int k
    for k in range(ndigits):
        ones |= (<uint64_t>1) << (k * width)
    return ones


def pairwise_unique(a, b, int p, int width, int ndigits, long long cap):
    """Sorted unique codes {a + b}; None if the result would exceed cap."""
    cdef uint64_t[::1] av = a
    cdef uint64_t[::1] bv = b
    cdef Py_ssize_t na = av.shape[0], nb = bv.shape[0], i, j
    cdef unordered_set[uint64_t] seen
    cdef uint64_t x, z, t
    cdef uint64_t ones = 0, detect = 0
    cdef uint64_t up = <uint64_t>p
    cdef int shift = width - 1
    if p != 2:
        ones = _ones_mask(width, ndigits)
        detect = ones * (((<uint64_t>1) << (width - 1)) - up)
    if p == 2:
        for i in range(na):
            x = av[i]
            for j in range(nb):
                seen.insert(x ^ bv[j])
            if cap >= 0 and <long long>seen.size() > cap:
                return None
    else:
        for i in range(na):
            x = av[i]
            for j in range(nb):
                z = x + bv[j]
                t = z + detect
                z = z - ((t >> shift) & ones) * up
                seen.insert(z)
            if cap >= 0 and <long long>seen.size() > cap:
                return None
    out = np.empty(seen.size(), dtype=np.uint64)
    cdef uint64_t[::1] ov = out
    cdef unordered_set[uint64_t].iterator it = seen.begin()
    i = 0
    while it != seen.end():
        ov[i] = deref(it)
        inc(it)
        i += 1
    out.sort()
    return out


def pairwise_counts(a, b, int p, int width, int ndigits):
    """(sorted codes, aligned multiplicities) of a + b over all pairs."""
    cdef uint64_t[::1] av = a
    cdef uint64_t[::1] bv = b
    cdef Py_ssize_t na = av.shape[0], nb = bv.shape[0], i, j
    cdef unordered_map[uint64_t, int64_t] counts
    cdef uint64_t x, z, t
    cdef uint64_t ones = 0, detect = 0
    cdef uint64_t up = <uint64_t>p
    cdef int shift = width - 1
    if p != 2:
        ones = _ones_mask(width, ndigits)
        detect = ones * (((<uint64_t>1) << (width - 1)) - up)
    if p == 2:
        for i in range(na):
            x = av[i]
            for j in range(nb):
                z = x ^ bv[j]
                counts[z] = counts[z] + 1
    else:
        for i in range(na):
            x = av[i]
            for j in range(nb):
                z = x + bv[j]
                t = z + detect
                z = z - ((t >> shift) & ones) * up
                counts[z] = counts[z] + 1
    keys = np.empty(counts.size(), dtype=np.uint64)
    vals = np.empty(counts.size(), dtype=np.int64)
    cdef uint64_t[::1] kv = keys
    cdef int64_t[::1] vv = vals
    cdef unordered_map[uint64_t, int64_t].iterator it = counts.begin()
    i = 0
    while it != counts.end():
        kv[i] = deref(it).first
        vv[i] = deref(it).second
        inc(it)
        i += 1
    order = np.argsort(keys, kind="stable")
    return keys[order], vals[order]
