"""How a rational prime splits in a subfield of Q(zeta_n).

The subfield is given by the subgroup H of (Z/n)^x fixing it. With D the
decomposition group and I the inertia group of p in Q(zeta_n), the number
of primes above p in the fixed field of H is the index of D*H.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polyfp
from .cyclo import cyclotomic_polynomial, euler_phi, units
from .permgroup import prime_factors


@dataclass(frozen=True)
class DecompositionData:
    prime: int
    level: int
    inertia: frozenset
    frobenius: int
    decomposition: frozenset


def _split_off(n, p):
    pa = 1
    while n % p == 0:
        n //= p
        pa *= p
    return pa, n


def subgroup_generated(n, gens) -> frozenset:
    """Subgroup of (Z/n)^x generated by ``gens``."""
    one = 1 % n
    group = {one}
    frontier = [one]
    gens = [g % n for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % n
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


def set_product(a, b, n) -> frozenset:
    return frozenset(x * y % n for x in a for y in b)


def decomposition_data(n: int, p: int) -> DecompositionData:
    pa, m = _split_off(n, p)
    us = units(n)
    inertia = frozenset(t for t in us if (t - 1) % m == 0)
    # f = p mod m, f = 1 mod p^a
    frob = next(t for t in us if (t - p) % m == 0 and (t - 1) % pa == 0)
    decomp = set_product(inertia, subgroup_generated(n, [frob]), n)
    return DecompositionData(p, n, inertia, frob, decomp)


@dataclass(frozen=True)
class SplittingType:
    ramification: int
    residue_degree: int
    primes: int


def splitting_type(field, p: int) -> SplittingType:
    """(e, f, g) for p in the fixed field of ``field.stabilizer``."""
    n = field.level
    h = frozenset(field.stabilizer)
    dd = decomposition_data(n, p)
    ih = set_product(dd.inertia, h, n)
    dh = set_product(dd.decomposition, h, n)
    e = len(ih) // len(h)
    f = len(dh) // len(ih)
    g = euler_phi(n) // len(dh)
    assert e * f * g == field.degree
    return SplittingType(e, f, g)


def primes_above_count(field, p: int) -> int:
    n = field.level
    dh = set_product(decomposition_data(n, p).decomposition, field.stabilizer, n)
    return euler_phi(n) // len(dh)


def count_primes_dividing(field, N: int) -> int:
    if N < 1:
        raise ValueError("N must be >= 1")
    return sum(primes_above_count(field, p) for p in prime_factors(N))


def dedekind_factor_count_oracle(f, p: int) -> int:
    """Distinct irreducible factors of the monic integer polynomial f mod p.

    Counts primes above p only where Z[alpha] is the full ring of integers,
    which holds for Z[zeta_n].
    """
    return polyfp.distinct_factor_count(list(f), p)


def cyclotomic_oracle(n: int, p: int) -> int:
    return dedekind_factor_count_oracle(cyclotomic_polynomial(n), p)
