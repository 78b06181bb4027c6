# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_kernels_py``.

Coefficients stay Python ints (arbitrary precision, bit-identical results);
the win over the pure module is C-level loop and indexing overhead, which
dominates for the small degrees (1..32) this package works at.
"""

from math import gcd


def poly_mul(a, b, red, int deg):
    cdef int m, i, j, k, t
    if deg == 1:
        return (a[0] * b[0],)
    m = 2 * deg - 1
    cdef list c = [0] * m
    for i in range(deg):
        ai = a[i]
        if ai:
            for j in range(deg):
                bj = b[j]
                if bj:
                    c[i + j] = c[i + j] + ai * bj
    for k in range(m - 1, deg - 1, -1):
        ck = c[k]
        if ck:
            r = red[k - deg]
            for t in range(deg):
                rt = r[t]
                if rt:
                    c[t] = c[t] + ck * rt
    return tuple(c[:deg])


def mat_mul(A, B, int n, int deg, red):
    cdef int m, i, j, k, s, t, ibase, abase, bbase
    m = 2 * deg - 1
    cdef list out = []
    cdef list c
    for i in range(n):
        ibase = i * n * deg
        for j in range(n):
            c = [0] * m
            for k in range(n):
                abase = ibase + k * deg
                bbase = (k * n + j) * deg
                for s in range(deg):
                    av = A[abase + s]
                    if av:
                        for t in range(deg):
                            bv = B[bbase + t]
                            if bv:
                                c[s + t] = c[s + t] + av * bv
            for k in range(m - 1, deg - 1, -1):
                ck = c[k]
                if ck:
                    r = red[k - deg]
                    for t in range(deg):
                        rt = r[t]
                        if rt:
                            c[t] = c[t] + ck * rt
            for t in range(deg):
                out.append(c[t])
    return tuple(out)


def mat_vec(A, v, int n, int deg, red):
    cdef int m, i, k, s, t, ibase, abase, vbase
    m = 2 * deg - 1
    cdef list out = []
    cdef list c
    for i in range(n):
        ibase = i * n * deg
        c = [0] * m
        for k in range(n):
            abase = ibase + k * deg
            vbase = k * deg
            for s in range(deg):
                av = A[abase + s]
                if av:
                    for t in range(deg):
                        vv = v[vbase + t]
                        if vv:
                            c[s + t] = c[s + t] + av * vv
        for k in range(m - 1, deg - 1, -1):
            ck = c[k]
            if ck:
                r = red[k - deg]
                for t in range(deg):
                    rt = r[t]
                    if rt:
                        c[t] = c[t] + ck * rt
        for t in range(deg):
            out.append(c[t])
    return tuple(out)


def content_normalize(nums, den):
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if den < 0:
        g = -g
    if g == 1:
        return tuple(nums), den
    return tuple(v // g for v in nums), den // g


KERNEL_NAME = "compiled"
