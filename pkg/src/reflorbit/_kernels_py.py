"""Pure-Python reference kernels for power-basis cyclotomic arithmetic.

Everything in the package that is performance critical funnels through the
functions in this module (or their compiled twins in ``_kernels``): polynomial
multiply-and-reduce in Z[x]/Phi_n(x), flat matrix/vector products over such a
ring, and content normalisation of (numerator vector, denominator) pairs.

Conventions shared with the Cython twin:

* a ring element is a sequence of ``deg`` Python ints (power-basis numerators);
  the denominator is tracked separately by the caller, one per scalar/matrix.
* ``red`` is the reduction table: ``red[k]`` holds the ``deg`` coefficients of
  x**(deg+k) mod Phi_n, for k = 0 .. deg-2.  Phi_n is monic with integer
  coefficients, so the table is integral and folding never cascades.
* matrices are flat tuples of length n*n*deg, row major, ``deg`` coefficients
  per entry; vectors are flat tuples of length n*deg.

All arithmetic is arbitrary-precision; the compiled twin keeps coefficients as
Python objects too, so results are bit-identical.
"""

from math import gcd


def poly_mul(a, b, red, deg):
    """Product of two power-basis coefficient vectors, reduced mod Phi_n."""
    if deg == 1:
        return (a[0] * b[0],)
    m = 2 * deg - 1
    c = [0] * m
    for i in range(deg):
        ai = a[i]
        if ai:
            for j in range(deg):
                bj = b[j]
                if bj:
                    c[i + j] += ai * bj
    for k in range(m - 1, deg - 1, -1):
        ck = c[k]
        if ck:
            r = red[k - deg]
            for t in range(deg):
                rt = r[t]
                if rt:
                    c[t] += ck * rt
    return tuple(c[:deg])


def mat_mul(A, B, n, deg, red):
    """Flat n x n matrix product over Z[x]/Phi_n (numerators only)."""
    m = 2 * deg - 1
    out = []
    append = out.append
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
                                c[s + t] += av * bv
            for k in range(m - 1, deg - 1, -1):
                ck = c[k]
                if ck:
                    r = red[k - deg]
                    for t in range(deg):
                        rt = r[t]
                        if rt:
                            c[t] += ck * rt
            for t in range(deg):
                append(c[t])
    return tuple(out)


def mat_vec(A, v, n, deg, red):
    """Flat matrix-vector product over Z[x]/Phi_n (numerators only)."""
    m = 2 * deg - 1
    out = []
    append = out.append
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
                            c[s + t] += av * vv
        for k in range(m - 1, deg - 1, -1):
            ck = c[k]
            if ck:
                r = red[k - deg]
                for t in range(deg):
                    rt = r[t]
                    if rt:
                        c[t] += ck * rt
        for t in range(deg):
            append(c[t])
    return tuple(out)


def content_normalize(nums, den):
    """Divide out gcd(content(nums), den); returns (tuple, positive den)."""
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


KERNEL_NAME = "pure"
