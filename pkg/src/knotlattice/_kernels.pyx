# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled bounded-norm lattice enumeration; see ``_kernels_py`` for the reference."""

from libc.math cimport ceil, floor, sqrt

import numpy as np

cdef double _EPS = 1e-9

cdef enum:
    COLLECT = 0
    IRREDUCIBLE = 1
    SIMPLE = 2


cdef double[:, ::1] _decompose(long long[:, ::1] g):
    cdef Py_ssize_t n = g.shape[0], i, j, k, l
    cdef double[:, ::1] q = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(n):
            q[i, j] = <double>g[i, j]
    for i in range(n):
        if q[i, i] <= 0.0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j, i] = q[i, j]
            q[i, j] = q[i, j] / q[i, i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k, l] -= q[k, i] * q[i, l]
    return q


cdef class _Collector:
    cdef public object buf
    cdef public Py_ssize_t count

    def __init__(self, Py_ssize_t n):
        self.buf = np.empty((64, n), dtype=np.int64)
        self.count = 0

    cdef void push(self, long long[::1] x):
        cdef Py_ssize_t a, n = x.shape[0]
        cdef long long[:, ::1] view
        if self.count == self.buf.shape[0]:
            self.buf = np.concatenate([self.buf, np.empty_like(self.buf)])
        view = self.buf
        for a in range(n):
            view[self.count, a] = x[a]
        self.count += 1


cdef class _Work:
    cdef double[::1] mid, rem, c
    cdef long long[::1] lo, hi, gv, x

    def __init__(self, Py_ssize_t n):
        self.mid = np.empty(n, dtype=np.float64)
        self.rem = np.empty(n, dtype=np.float64)
        self.c = np.empty(n, dtype=np.float64)
        self.lo = np.empty(n, dtype=np.int64)
        self.hi = np.empty(n, dtype=np.int64)
        self.gv = np.empty(n, dtype=np.int64)
        self.x = np.empty(n, dtype=np.int64)


cdef bint _search(long long[:, ::1] g, double[:, ::1] q, double[::1] c, double radius,
                  long long[::1] v, int mode, long long bound, _Collector out,
                  long long[::1] x, _Work w):
    cdef Py_ssize_t n = g.shape[0], i, j, a, b
    cdef double[::1] mid = w.mid
    cdef double[::1] rem = w.rem
    cdef long long[::1] lo = w.lo
    cdef long long[::1] hi = w.hi
    cdef long long[::1] gv = w.gv
    cdef double tol = 1e-7 * (1.0 + radius), r, d, t, s
    cdef long long qx, bx, acc
    cdef bint differs

    if mode != COLLECT:
        for a in range(n):
            acc = 0
            for b in range(n):
                acc += g[a, b] * v[b]
            gv[a] = acc
    for a in range(n):
        x[a] = 0

    i = n - 1
    rem[i] = radius + tol
    mid[i] = c[i]
    r = sqrt(rem[i] / q[i, i]) + _EPS
    lo[i] = <long long>ceil(mid[i] - r)
    hi[i] = <long long>floor(mid[i] + r)
    x[i] = lo[i] - 1
    while True:
        x[i] += 1
        if x[i] > hi[i]:
            i += 1
            if i >= n:
                return False
            continue
        d = x[i] - mid[i]
        t = rem[i] - q[i, i] * d * d
        if t < -tol:
            continue
        if i > 0:
            i -= 1
            rem[i] = t
            s = 0.0
            for j in range(i + 1, n):
                s += q[i, j] * (x[j] - c[j])
            mid[i] = c[i] - s
            r = sqrt((t if t > 0.0 else 0.0) / q[i, i]) + _EPS
            lo[i] = <long long>ceil(mid[i] - r)
            hi[i] = <long long>floor(mid[i] + r)
            x[i] = lo[i] - 1
            continue
        qx = 0
        for a in range(n):
            if x[a] != 0:
                acc = 0
                for b in range(n):
                    acc += g[a, b] * x[b]
                qx += acc * x[a]
        if mode == COLLECT:
            if 0 < qx <= bound:
                out.push(x)
            continue
        bx = 0
        for a in range(n):
            bx += gv[a] * x[a]
        if mode == IRREDUCIBLE:
            if qx <= bx and qx != 0:
                differs = False
                for a in range(n):
                    if x[a] != v[a]:
                        differs = True
                        break
                if differs:
                    return True
        elif qx < bx:
            return True


def short_vectors(gram, long long bound):
    arr = np.asarray(gram, dtype=np.int64)
    cdef Py_ssize_t n = len(arr)
    if n == 0 or bound < 1:
        return np.zeros((0, n), dtype=np.int64)
    cdef long long[:, ::1] g = np.ascontiguousarray(arr.reshape(n, n))
    cdef double[:, ::1] q = _decompose(g)
    cdef _Collector out = _Collector(n)
    cdef long long[::1] x = np.zeros(n, dtype=np.int64)
    _search(g, q, np.zeros(n, dtype=np.float64), <double>bound, x, COLLECT, bound, out, x, _Work(n))
    return np.asarray(out.buf[:out.count]).copy()


cdef object _violator(long long[:, ::1] g, double[:, ::1] q, long long[::1] v, bint irreducible, _Work w):
    cdef Py_ssize_t n = g.shape[0], a, b
    cdef long long qv = 0
    cdef double[::1] c = w.c
    cdef long long[::1] x = w.x
    for a in range(n):
        c[a] = v[a] / 2.0
        for b in range(n):
            qv += g[a, b] * v[a] * v[b]
    if _search(g, q, c, qv / 4.0, v, IRREDUCIBLE if irreducible else SIMPLE, 0, None, x, w):
        return tuple(np.asarray(x).tolist())
    return None


def find_violator(gram, v, bint irreducible):
    cdef long long[::1] vv = np.ascontiguousarray(v, dtype=np.int64)
    cdef Py_ssize_t n = vv.shape[0]
    if n == 0:
        return None
    cdef long long[:, ::1] g = np.ascontiguousarray(gram, dtype=np.int64).reshape(n, n)
    return _violator(g, _decompose(g), vv, irreducible, _Work(n))


def batch_flags(gram, vectors):
    cdef long long[:, ::1] vs = np.ascontiguousarray(vectors, dtype=np.int64)
    cdef Py_ssize_t k = vs.shape[0], n = vs.shape[1], row, a
    irr = np.zeros(k, dtype=bool)
    simple = np.zeros(k, dtype=bool)
    if k == 0:
        return irr, simple
    if n == 0:
        simple[:] = True
        return irr, simple
    cdef long long[:, ::1] g = np.ascontiguousarray(gram, dtype=np.int64).reshape(n, n)
    cdef double[:, ::1] q = _decompose(g)
    cdef bint nonzero
    cdef _Work w = _Work(n)
    for row in range(k):
        nonzero = False
        for a in range(n):
            if vs[row, a] != 0:
                nonzero = True
                break
        if nonzero and _violator(g, q, vs[row], True, w) is None:
            irr[row] = True
            simple[row] = True
        else:
            simple[row] = _violator(g, q, vs[row], False, w) is None
    return irr, simple
