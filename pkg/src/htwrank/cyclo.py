"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored by its coordinates in the power basis
1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial. That form
is canonical, so equality and hashing are coordinatewise. Coordinates are
Python ints when integral and Fractions otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import LevelMismatch, NotAUnit


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod_monic(a, b):
    """Quotient and remainder of integer polynomials, b monic."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n):
    return sum(1 for t in range(n) if gcd(t, n) == 1)


def units(n):
    """Residues t in range(n) with gcd(t, n) == 1 (for n == 1 this is [0])."""
    return [t for t in range(n) if gcd(t, n) == 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num, rem = poly_divmod_monic(num, list(cyclotomic_polynomial(d)))
        assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n):
    # coordinates of z^k for k in range(n)
    phi = cyclotomic_polynomial(n)
    m = len(phi) - 1
    table = []
    vec = [0] * m
    vec[0] = 1
    for _ in range(n):
        table.append(tuple(vec))
        # multiply by z: shift, then fold the z^m term using Phi_n
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(m):
                vec[j] -= top * phi[j]
    return tuple(table)


def power_basis_table(n):
    return _power_table(n)


class CycloNum:
    __slots__ = ("level", "coeffs", "_hash")

    def __init__(self, level: int, coeffs):
        coeffs = tuple(_norm(c) for c in coeffs)
        if len(coeffs) != len(cyclotomic_polynomial(level)) - 1:
            raise ValueError(f"level {level} needs {euler_phi(level)} coordinates, got {len(coeffs)}")
        self.level = level
        self.coeffs = coeffs
        self._hash = hash((level, coeffs))

    @classmethod
    def rational(cls, level, value):
        m = len(cyclotomic_polynomial(level)) - 1
        return cls(level, (value,) + (0,) * (m - 1))

    @classmethod
    def from_exponents(cls, level, counts):
        """Sum of ``counts[j]`` copies of z^j."""
        table = _power_table(level)
        m = len(table[0])
        acc = [0] * m
        for j, c in counts.items() if isinstance(counts, dict) else enumerate(counts):
            if c:
                row = table[j % level]
                for i in range(m):
                    acc[i] += c * row[i]
        return cls(level, acc)

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.level != self.level:
                raise LevelMismatch(f"levels {self.level} and {other.level} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self.level, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.level, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.level, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.level, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.level
        table = _power_table(n)
        m = len(self.coeffs)
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        acc = prod[:m]
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                row = table[k % n]
                for i in range(m):
                    acc[i] += c * row[i]
        return CycloNum(n, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.level, [Fraction(a) / other for a in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycloNum.rational(self.level, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.level == other.level and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return self._hash

    def is_zero(self):
        return not any(self.coeffs)

    def conjugate(self):
        return galois_apply(self, -1)

    def reduce_mod(self, q: int, root: int) -> int:
        """Image under z -> root in Z/q (denominators must be prime to q)."""
        acc = 0
        power = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                c = c.numerator * pow(c.denominator, -1, q)
            acc += c * power
            power = power * root % q
        return acc % q

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"CycloNum({self.level}, {self.coeffs})"


def root_of_unity(n: int, k: int = 1) -> CycloNum:
    if n < 1:
        raise ValueError("n must be >= 1")
    return CycloNum(n, _power_table(n)[k % n])


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def eq(a, b):
    if a.level != b.level:
        raise LevelMismatch(f"levels {a.level} and {b.level} differ")
    return a == b


def galois_apply(a: CycloNum, t: int) -> CycloNum:
    """Apply the automorphism z -> z^t."""
    n = a.level
    if gcd(t, n) != 1:
        raise NotAUnit(f"{t} is not a unit modulo {n}")
    table = _power_table(n)
    m = len(a.coeffs)
    acc = [0] * m
    for j, c in enumerate(a.coeffs):
        if c:
            row = table[(j * t) % n]
            for i in range(m):
                acc[i] += c * row[i]
    return CycloNum(n, acc)


def as_rational(a: CycloNum):
    """The value as an int/Fraction if it is rational, else None."""
    if any(a.coeffs[1:]):
        return None
    return a.coeffs[0]


def lift(a: CycloNum, level: int) -> CycloNum:
    """Re-express ``a`` at a level that is a multiple of its own."""
    if level % a.level:
        raise LevelMismatch(f"{a.level} does not divide {level}")
    step = level // a.level
    return CycloNum.from_exponents(level, {j * step: c for j, c in enumerate(a.coeffs) if c})


def fixed_by(a: CycloNum, ts) -> bool:
    return all(galois_apply(a, t) == a for t in ts)


def conductor(a: CycloNum) -> int:
    """Smallest m | level with a in Q(zeta_m)."""
    n = a.level
    us = units(n)
    for m in divisors(n):
        if fixed_by(a, [t for t in us if (t - 1) % m == 0]):
            return m
    return n


def descend(a: CycloNum, m: int) -> CycloNum:
    """Express ``a`` at level m, where m | level and a lies in Q(zeta_m)."""
    n = a.level
    if n % m:
        raise LevelMismatch(f"{m} does not divide {n}")
    step = n // m
    table = _power_table(n)
    k = euler_phi(m)
    basis = [table[(j * step) % n] for j in range(k)]
    # solve sum_j x_j basis[j] = a.coeffs (overdetermined, consistent)
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(a.coeffs[i])] for i in range(len(a.coeffs))]
    x = _solve_consistent(rows, k)
    if x is None:
        raise ValueError(f"value is not in Q(zeta_{m})")
    return CycloNum(m, x)


def _solve_consistent(rows, k):
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[k] != 0 for row in rows[r:]):
        return None
    x = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        x[c] = rows[i][k]
    return x


def _fmt_coeff_term(c, mon):
    if mon == "":
        return str(c)
    if c == 1:
        return mon
    return f"{c}*{mon}"


@lru_cache(maxsize=65536)
def render(a: CycloNum) -> str:
    """Render at the smallest level containing the value, e.g. ``-1 - z3``."""
    q = as_rational(a)
    if q is not None:
        return str(q)
    m = conductor(a)
    b = descend(a, m)
    terms = []
    for j, c in enumerate(b.coeffs):
        if not c:
            continue
        mon = "" if j == 0 else (f"z{m}" if j == 1 else f"z{m}^{j}")
        sign = "-" if c < 0 else "+"
        body = _fmt_coeff_term(abs(c), mon)
        if not terms:
            terms.append(("-" if sign == "-" else "") + body)
        else:
            terms.append(f" {sign} {body}")
    return "".join(terms)
