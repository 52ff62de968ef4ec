"""Exact complex character tables by the Dixon-Schneider method.

1. Class algebra constants give one integer matrix per conjugacy class.
2. Their common eigenvectors over F_q, q = 1 mod exp(G), are the central
   characters reduced mod q; each determines a character mod q.
3. Each value is lifted to Q(zeta_e) by a discrete Fourier transform over
   the e-th roots of unity in F_q. The multiplicities it recovers are
   integers in [0, chi(1)] with chi(1) < q, so the lift is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import linalg_fq
from .cyclo import CycloNum, power_basis_table, render
from .errors import InternalError, LiftOutOfRange
from .permgroup import ClassData, Group, exponent, power_maps, prime_factors

_PRIME_SEARCH_LIMIT = 10 ** 6


def is_prime(n):
    if n < 2:
        return False
    return prime_factors(n) == [n]


def dixon_prime(group_order: int, exp: int) -> int:
    """Smallest prime q = 1 (mod exp) with q > 2*floor(sqrt(|G|))."""
    bound = 2 * isqrt(group_order)
    q = exp + 1
    for _ in range(_PRIME_SEARCH_LIMIT):
        if q > bound and is_prime(q):
            return q
        q += exp
    raise InternalError("no Dixon prime found")


def primitive_root(q: int) -> int:
    factors = prime_factors(q - 1)
    for g in range(2, q + 1):
        if all(pow(g, (q - 1) // f, q) != 1 for f in factors):
            return g
    return 1  # q == 2


def class_matrix(g: Group, cd: ClassData, i: int) -> np.ndarray:
    """M[j, k] = #{(x, y) in C_i x C_j : x*y = rep_k}."""
    r = len(cd)
    m = np.zeros((r, r), dtype=np.int64)
    members = [g.elements[j] for j in cd.classes[i].members]
    inverses = [x.inverse() for x in members]
    for k, cls in enumerate(cd.classes):
        rep = cls.representative
        for x_inv in inverses:
            m[cd.class_of[g.index(x_inv * rep)], k] += 1
    return m


@dataclass(frozen=True)
class ModularTable:
    prime: int
    values: tuple  # values[chi][class], residues mod prime
    degrees: tuple


def character_table_mod_q(g: Group, cd: ClassData) -> ModularTable:
    n = g.order
    r = len(cd)
    q = dixon_prime(n, exponent(g))
    sizes = cd.sizes

    spaces = [np.eye(r, dtype=np.int64)]
    for i in range(1, r):
        if all(s.shape[0] == 1 for s in spaces):
            break
        mt = class_matrix(g, cd, i).T % q
        refined = []
        for w in spaces:
            if w.shape[0] == 1:
                refined.append(w)
            else:
                refined.extend(_split(w, mt, q))
        spaces = refined
    if any(s.shape[0] != 1 for s in spaces):
        raise InternalError("class matrices failed to separate the eigenspaces")

    inv_class = [cd.class_of[g.index(c.representative.inverse())] for c in cd.classes]
    values, degrees = [], []
    for s in spaces:
        w = s[0]
        w = w * linalg_fq.inv(w[0], q) % q
        # chi(1)^2 = |G| / sum_k w_k w_k' / |C_k|
        acc = 0
        for k in range(r):
            acc += int(w[k]) * int(w[inv_class[k]]) * pow(sizes[k], -1, q)
        target = n * pow(acc % q, -1, q) % q
        deg = next((d for d in range(1, isqrt(n) + 1) if d * d % q == target), None)
        if deg is None:
            raise InternalError("no degree matches the computed square")
        values.append(tuple(int(w[k]) * deg * pow(sizes[k], -1, q) % q for k in range(r)))
        degrees.append(deg)
    return ModularTable(q, tuple(values), tuple(degrees))


def _split(basis, mt, q):
    """Split span(basis) into eigenspaces of the column action of mt.T."""
    red, pivots = linalg_fq.rref(basis, q)
    images = red @ mt % q  # row s: image of basis vector s
    coords = images[:, pivots]
    poly = linalg_fq.charpoly(coords.T, q)
    d = red.shape[0]
    pieces = []
    total = 0
    for lam in linalg_fq.roots(poly, q):
        shifted = (coords.T - lam * np.eye(d, dtype=np.int64)) % q
        null = linalg_fq.nullspace(shifted, q)
        if null.shape[0] == 0:
            continue
        sub, _ = linalg_fq.rref(null @ red % q, q)
        pieces.append(sub)
        total += sub.shape[0]
    if total != d:
        raise InternalError("class matrix is not diagonalisable over F_q")
    return pieces


@dataclass(frozen=True)
class Character:
    values: tuple  # CycloNum per class

    @property
    def degree(self) -> int:
        return self.values[0].coeffs[0]

    def rendered(self) -> tuple:
        return tuple(render(v) for v in self.values)


@dataclass(frozen=True)
class CharacterTable:
    group_order: int
    classes: ClassData
    characters: tuple
    dixon_prime: int
    level: int
    root_mod_q: int  # image of zeta_level in F_q
    residues: tuple  # mod-q table aligned with ``characters``

    def __len__(self):
        return len(self.characters)


def lift_character_values(mod: ModularTable, cd: ClassData, maps, level: int) -> CharacterTable:
    """Lift a mod-q table to exact values at ``level`` = exp(G).

    ``maps[l]`` is the class power map for x -> x**l, l = 0..level-1.
    """
    q = mod.prime
    e = level
    root = pow(primitive_root(q), (q - 1) // e, q)
    table = np.array(power_basis_table(e), dtype=np.int64)
    vals = np.array(mod.values, dtype=np.int64).reshape(len(mod.values), len(cd))
    degrees = np.array(mod.degrees, dtype=np.int64)
    nchars = vals.shape[0]
    out = [[None] * len(cd) for _ in range(nchars)]
    for k, cls in enumerate(cd.classes):
        o = cls.element_order
        step = e // o
        w = pow(root, step, q)
        w_inv = pow(w, -1, q)
        o_inv = pow(o, -1, q)
        # dft[l, j] = w^(-j l) / o
        powers = [pow(w_inv, t, q) for t in range(o)]
        dft = np.array([[powers[(j * l) % o] * o_inv % q for j in range(o)] for l in range(o)], dtype=np.int64)
        x = vals[:, [maps[l][k] for l in range(o)]]
        mult = x @ dft % q
        if (mult > degrees[:, None]).any() or (mult.sum(axis=1) != degrees).any():
            raise LiftOutOfRange(f"multiplicities out of range at class {k}")
        coeffs = mult @ table[[j * step for j in range(o)]]
        for c in range(nchars):
            out[c][k] = CycloNum(e, [int(v) for v in coeffs[c]])
    chars = [Character(tuple(row)) for row in out]
    order = sorted(range(nchars), key=lambda c: (chars[c].degree, chars[c].rendered()))
    return CharacterTable(
        group_order=int(sum(cd.sizes)),
        classes=cd,
        characters=tuple(chars[c] for c in order),
        dixon_prime=q,
        level=e,
        root_mod_q=root,
        residues=tuple(mod.values[c] for c in order),
    )


def character_table(g: Group) -> CharacterTable:
    cd = g.classes
    mod = character_table_mod_q(g, cd)
    e = exponent(g)
    return lift_character_values(mod, cd, power_maps(g, cd, e), e)
