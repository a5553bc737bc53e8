"""Pure-Python bounded-norm lattice enumeration.

Same algorithm and visiting order as the compiled ``_kernels`` module:
Fincke-Pohst depth-first search with floating-point pruning and exact
integer acceptance at the leaves.
"""

import math

import numpy as np

_EPS = 1e-9

COLLECT, IRREDUCIBLE, SIMPLE = 0, 1, 2


def _decompose(g):
    n = len(g)
    q = [[float(x) for x in row] for row in g]
    for i in range(n):
        if q[i][i] <= 0.0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _search(g, q, c, radius, v, mode, bound, out):
    """Visit integer x with Q(x - c) <= radius; return a violator or None."""
    n = len(g)
    x = [0] * n
    lo = [0] * n
    hi = [0] * n
    mid = [0.0] * n
    rem = [0.0] * n
    gv = [sum(g[i][j] * v[j] for j in range(n)) for i in range(n)] if v is not None else None
    tol = 1e-7 * (1.0 + radius)

    i = n - 1
    rem[i] = radius + tol
    mid[i] = c[i]
    r = math.sqrt(rem[i] / q[i][i]) + _EPS
    lo[i] = math.ceil(mid[i] - r)
    hi[i] = math.floor(mid[i] + r)
    x[i] = lo[i] - 1
    while True:
        x[i] += 1
        if x[i] > hi[i]:
            i += 1
            if i >= n:
                return None
            continue
        d = x[i] - mid[i]
        t = rem[i] - q[i][i] * d * d
        if t < -tol:
            continue
        if i > 0:
            i -= 1
            rem[i] = t
            s = 0.0
            for j in range(i + 1, n):
                s += q[i][j] * (x[j] - c[j])
            mid[i] = c[i] - s
            r = math.sqrt(max(t, 0.0) / q[i][i]) + _EPS
            lo[i] = math.ceil(mid[i] - r)
            hi[i] = math.floor(mid[i] + r)
            x[i] = lo[i] - 1
            continue
        qx = 0
        for a in range(n):
            if x[a]:
                row = g[a]
                acc = 0
                for b in range(n):
                    acc += row[b] * x[b]
                qx += acc * x[a]
        if mode == COLLECT:
            if 0 < qx <= bound:
                out.append(tuple(x))
            continue
        bx = 0
        for a in range(n):
            bx += gv[a] * x[a]
        if mode == IRREDUCIBLE:
            if qx <= bx and qx != 0 and any(x[a] != v[a] for a in range(n)):
                return tuple(x)
        elif qx < bx:
            return tuple(x)


def short_vectors(gram, bound):
    g = [[int(x) for x in row] for row in np.asarray(gram, dtype=np.int64)]
    n = len(g)
    if n == 0 or bound < 1:
        return np.zeros((0, n), dtype=np.int64)
    q = _decompose(g)
    out = []
    _search(g, q, [0.0] * n, float(bound), None, COLLECT, int(bound), out)
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def find_violator(gram, v, irreducible):
    g = [[int(x) for x in row] for row in np.asarray(gram, dtype=np.int64)]
    n = len(g)
    v = [int(a) for a in v]
    if n == 0:
        return None
    q = _decompose(g)
    qv = sum(g[i][j] * v[i] * v[j] for i in range(n) for j in range(n))
    c = [a / 2.0 for a in v]
    return _search(g, q, c, qv / 4.0, v, IRREDUCIBLE if irreducible else SIMPLE, 0, None)


def batch_flags(gram, vectors):
    vectors = np.asarray(vectors, dtype=np.int64)
    k = vectors.shape[0]
    irr = np.zeros(k, dtype=bool)
    simple = np.zeros(k, dtype=bool)
    for row in range(k):
        v = vectors[row]
        if v.any() and find_violator(gram, v, True) is None:
            irr[row] = simple[row] = True
        else:
            simple[row] = find_violator(gram, v, False) is None
    return irr, simple
