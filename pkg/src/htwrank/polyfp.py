"""Dense univariate polynomials over the prime field F_p.

Polynomials are lists of ints in [0, p), lowest degree first, with no
trailing zeros; the zero polynomial is the empty list.
"""

from __future__ import annotations

from itertools import count

from .errors import NotMonic


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p):
    return trim([c % p for c in a])


def deg(a):
    return len(a) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a, b, p):
    return add(a, [-c % p for c in b], p)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return reduce(out, p)


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv % p
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return trim(q), trim(a)


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a, b, p):
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def derivative(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def powmod(base, e, m, p):
    result = [1]
    base = mod(base, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def pth_root(a, p):
    # over F_p, a(x) = b(x^p) implies a = b^p with the same coefficients
    return trim(a[::p])


def squarefree_decomposition(f, p):
    """Pairs (g, i) with g squarefree and f = prod g^i (f monic)."""
    out = []
    df = derivative(f, p)
    if not df:
        return [(g, i * p) for g, i in squarefree_decomposition(pth_root(f, p), p)]
    c = gcd(f, df, p)
    w = divmod_(f, c, p)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if deg(z) > 0:
            out.append((monic(z, p), i))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if deg(c) > 0:
        out.extend((g, j * p) for g, j in squarefree_decomposition(pth_root(c, p), p))
    return out


def distinct_degree(f, p):
    """Pairs (g, d): g is the product of all degree-d irreducible factors of squarefree monic f."""
    out = []
    x = [0, 1]
    h = x
    g = f
    d = 1
    while deg(g) >= 2 * d:
        h = powmod(h, p, g, p)
        gd = gcd(g, sub(h, x, p), p)
        if deg(gd) > 0:
            out.append((gd, d))
            g = divmod_(g, gd, p)[0]
            h = mod(h, g, p)
        d += 1
    if deg(g) > 0:
        out.append((monic(g, p), deg(g)))
    return out


def _candidates(n, p):
    # nonconstant polynomials of degree < n, enumerated by base-p value
    for s in count(p):
        digits = []
        while s:
            digits.append(s % p)
            s //= p
        if len(digits) > n:
            return
        yield digits


def equal_degree(f, d, p):
    """Split squarefree monic f, all of whose factors have degree d."""
    if deg(f) == d:
        return [f]
    for a in _candidates(deg(f), p):
        if p == 2:
            t = list(a)
            b = list(a)
            for _ in range(d - 1):
                b = mod(mul(b, b, p), f, p)
                t = add(t, b, p)
        else:
            t = sub(powmod(a, (p ** d - 1) // 2, f, p), [1], p)
        h = gcd(f, t, p)
        if 0 < deg(h) < deg(f):
            rest = divmod_(f, h, p)[0]
            return equal_degree(h, d, p) + equal_degree(monic(rest, p), d, p)
    raise RuntimeError("equal-degree splitting exhausted its candidates")


def factor(f, p):
    """Distinct monic irreducible factors of f over F_p, with multiplicities."""
    f = monic(reduce(f, p), p)
    out = {}
    for g, i in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p):
            for irr in equal_degree(h, d, p):
                out[tuple(irr)] = out.get(tuple(irr), 0) + i
    return out


def distinct_factor_count(f, p) -> int:
    """Number of distinct irreducible factors of an integer monic f modulo p."""
    f = trim(f)
    if not f or f[-1] != 1:
        raise NotMonic("polynomial must be monic")
    if deg(f) < 1:
        raise ValueError("polynomial must be nonconstant")
    return len(factor(f, p))
