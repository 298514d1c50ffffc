# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; the ints stay arbitrary precision."""


cpdef list convolve(list a, list b):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j
    cdef object ai
    cdef list out
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


cpdef object horner(list coeffs, object p, object q):
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t i
    cdef object acc, qpow
    if n == 0:
        return 0
    acc = coeffs[n - 1]
    qpow = 1
    for i in range(n - 2, -1, -1):
        qpow = qpow * q
        acc = acc * p + coeffs[i] * qpow
    return acc


cpdef list derive(list coeffs, Py_ssize_t order):
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t i, m
    cdef object f
    cdef list out
    if order == 0:
        return list(coeffs)
    if order >= n:
        return []
    out = [0] * (n - order)
    for i in range(order, n):
        f = 1
        for m in range(i - order + 1, i + 1):
            f = f * m
        out[i - order] = coeffs[i] * f
    return out


cpdef list affine_horner(list coeffs, object u, object v, object r):
    cdef Py_ssize_t n = len(coeffs)
    cdef Py_ssize_t i, m, la
    cdef object c, rpow
    cdef list acc, nxt
    if n == 0:
        return []
    acc = [coeffs[n - 1]]
    rpow = 1
    for i in range(n - 2, -1, -1):
        rpow = rpow * r
        la = len(acc)
        nxt = [0] * (la + 1)
        for m in range(la):
            c = acc[m]
            nxt[m] = nxt[m] + c * v
            nxt[m + 1] = nxt[m + 1] + c * u
        nxt[0] = nxt[0] + coeffs[i] * rpow
        acc = nxt
    return acc
