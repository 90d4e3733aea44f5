"""Pure-Python integer kernels.

Everything exact in this package (polynomials, factored rational
functions, truncated q-series) is stored as a list of integer numerators
over one shared denominator, so these inner loops only ever touch plain
Python ints.  ``_kernels_cy.pyx`` is the compiled twin; the two must
stay behaviourally identical (tests/test_backends.py checks that).
"""

from math import gcd


def conv(a, b):
    """Full product of two coefficient lists; [] is the zero polynomial."""
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                out[i + j] += ai * b[j]
    return out


def conv_trunc(a, b, n):
    """First ``n`` coefficients of a*b (may return fewer when the exact
    product is shorter)."""
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0 or n <= 0:
        return []
    m = min(n, la + lb - 1)
    out = [0] * m
    for i in range(min(la, m)):
        ai = a[i]
        if ai:
            jmax = min(lb, m - i)
            for j in range(jmax):
                out[i + j] += ai * b[j]
    return out


def divexact_linear(nums, j):
    """Quotient q with (1 - j*v)*q = nums, or None when not divisible."""
    n = len(nums)
    if n == 0:
        return []
    q = [0] * (n - 1)
    carry = 0
    for i in range(n - 1):
        carry = nums[i] + j * carry
        q[i] = carry
    if nums[n - 1] + j * carry != 0:
        return None
    return q


def eval_at_inv(nums, j):
    """j**deg * p(1/j) for the integer polynomial with coefficients ``nums``.

    Zero iff (1 - j*v) divides the polynomial, which is the only question
    the callers ask.
    """
    acc = 0
    for i in range(len(nums)):
        acc = acc * j + nums[i]
    return acc


def geom_coeffs(j, e, n):
    """First ``n`` coefficients of (1 - j*v)**(-e): binomial(i+e-1, e-1)*j**i."""
    if n <= 0:
        return []
    out = [0] * n
    out[0] = 1
    c = 1
    for i in range(1, n):
        # exact: c picks up the next binomial ratio times j
        c = c * j * (e + i - 1) // i
        out[i] = c
    return out


def series_inv_cleared(f, n):
    """Integers G with 1/(sum f_i v^i) = sum G_i / f[0]**(i+1) * v^i.

    Requires f[0] != 0; the caller handles its own outer denominator and
    normalisation.
    """
    f0 = f[0]
    lf = len(f)
    if n <= 0:
        return []
    g = [0] * n
    g[0] = 1
    pw = [1] * n  # pw[t] = f0**t
    for t in range(1, n):
        pw[t] = pw[t - 1] * f0
    for i in range(1, n):
        acc = 0
        tmax = min(i, lf - 1)
        for t in range(1, tmax + 1):
            ft = f[t]
            if ft:
                acc += ft * g[i - t] * pw[t - 1]
        g[i] = -acc
    return g


def content_gcd(nums, den):
    """gcd of ``den`` and every entry of ``nums`` (with early exit at 1)."""
    g = den
    for c in nums:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g
