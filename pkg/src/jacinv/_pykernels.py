"""Pure-Python integer kernels backing :class:`jacinv.polyring.Poly`.

Every function works on plain lists of Python ints (numerators over a
shared denominator held by the caller). ``_ckernels.pyx`` mirrors this
module line for line; both must return identical results.
"""


def convolve(a, b):
    """Coefficients of the product of two integer polynomials."""
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] += ai * b[j]
    return out


def horner(coeffs, p, q):
    """Return sum(c_i * p**i * q**(d-i)) with d = len(coeffs) - 1.

    Evaluating at the rational p/q and multiplying by q**d keeps the
    whole computation in integers.
    """
    n = len(coeffs)
    if n == 0:
        return 0
    acc = coeffs[n - 1]
    qpow = 1
    for i in range(n - 2, -1, -1):
        qpow *= q
        acc = acc * p + coeffs[i] * qpow
    return acc


def derive(coeffs, order):
    """Multiply c_i by i(i-1)...(i-order+1) and drop the first ``order`` terms."""
    n = len(coeffs)
    if order == 0:
        return list(coeffs)
    if order >= n:
        return []
    out = [0] * (n - order)
    for i in range(order, n):
        f = 1
        for m in range(i - order + 1, i + 1):
            f *= m
        out[i - order] = coeffs[i] * f
    return out


def affine_horner(coeffs, u, v, r):
    """Return sum(c_i * r**(d-i) * (u*x + v)**i) as an integer coefficient list."""
    n = len(coeffs)
    if n == 0:
        return []
    acc = [coeffs[n - 1]]
    rpow = 1
    for i in range(n - 2, -1, -1):
        rpow *= r
        nxt = [0] * (len(acc) + 1)
        for m in range(len(acc)):
            c = acc[m]
            nxt[m] += c * v
            nxt[m + 1] += c * u
        nxt[0] += coeffs[i] * rpow
        acc = nxt
    return acc
