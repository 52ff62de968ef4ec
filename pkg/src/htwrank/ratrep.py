"""Rational irreducible representations as Galois orbits of characters."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import splitting
from .chartab import Character, CharacterTable
from .cyclo import divisors, euler_phi, galois_apply, units
from .errors import NonIntegerOmega, OddComplexDegree
from .permgroup import ClassData, prime_factors


@dataclass(frozen=True)
class AbelianFieldDescriptor:
    """Subfield of Q(zeta_level) fixed by ``stabilizer`` in (Z/level)^x."""

    level: int
    stabilizer: frozenset
    degree: int
    totally_real: bool

    @classmethod
    def from_stabilizer(cls, level, stabilizer):
        h = frozenset(t % level for t in stabilizer)
        phi = euler_phi(level)
        if phi % len(h):
            raise ValueError("stabilizer is not a subgroup")
        real = level <= 2 or (-1 % level) in h
        return cls(level, h, phi // len(h), real)

    @classmethod
    def from_generators(cls, level, gens):
        for t in gens:
            if gcd(t, level) != 1:
                raise ValueError(f"{t} is not a unit modulo {level}")
        return cls.from_stabilizer(level, splitting.subgroup_generated(level, gens))

    def conductor(self) -> int:
        us = units(self.level)
        for m in divisors(self.level):
            if all(t in self.stabilizer for t in us if (t - 1) % m == 0):
                return m
        return self.level

    def label(self) -> str:
        """``Q``, ``Q(z3)``, ``Q(z5)+`` (maximal real subfield) or ``Q(z7)^<2>``."""
        if self.degree == 1:
            return "Q"
        m = self.conductor()
        h = sorted({t % m for t in self.stabilizer})
        if h == [1]:
            return f"Q(z{m})"
        if h == [1, m - 1]:
            return f"Q(z{m})+"
        return f"Q(z{m})^<{','.join(map(str, h))}>"


@dataclass(frozen=True)
class RationalIrrep:
    orbit: tuple
    representative: int
    kernel_order: int
    complex_degree: int
    omega: int
    field: AbelianFieldDescriptor
    unit_rank: int
    v: int
    w: int
    t_by_prime: dict = field(hash=False)


def galois_stabilizer(chi: Character, n: int, maps=None) -> frozenset:
    """Units t mod n with sigma_t(chi) == chi.

    With the class power maps supplied, sigma_t(chi)(g) is read off as
    chi(g^t), which avoids cyclotomic arithmetic entirely.
    """
    if maps is None:
        return frozenset(t for t in units(n) if all(galois_apply(v, t) == v for v in chi.values))
    return frozenset(t for t in units(n) if all(chi.values[maps[t][k]] == v for k, v in enumerate(chi.values)))


def galois_orbits(tab: CharacterTable, maps) -> list:
    """Orbits of the Galois action, each sorted, ordered by their first index."""
    index = {c.values: i for i, c in enumerate(tab.characters)}
    seen = set()
    orbits = []
    for i, chi in enumerate(tab.characters):
        if i in seen:
            continue
        orbit = set()
        for t in units(tab.level):
            image = tuple(chi.values[maps[t][k]] for k in range(len(chi.values)))
            orbit.add(index[image])
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def kernel_order(chi: Character, cd: ClassData) -> int:
    one = chi.values[0]
    return sum(c.size for c, v in zip(cd.classes, chi.values) if v == one)


def omega(group_order: int, k: int, d: int) -> int:
    if group_order % (k * d):
        raise NonIntegerOmega(f"{group_order} is not divisible by {k}*{d}")
    return group_order // (k * d)


def field_descriptor(chi: Character, n: int, maps=None) -> AbelianFieldDescriptor:
    return AbelianFieldDescriptor.from_stabilizer(n, galois_stabilizer(chi, n, maps))


def unit_rank(f: AbelianFieldDescriptor) -> int:
    if f.totally_real:
        return f.degree - 1
    if f.degree % 2:
        raise OddComplexDegree(f"totally complex field of odd degree {f.degree}")
    return f.degree // 2 - 1


def rational_irreps(tab: CharacterTable, maps) -> list:
    """One RationalIrrep per Galois orbit, with splitting counts filled in.

    ``maps[t]`` must be the class power map for x -> x**t, t < tab.level.
    """
    n = tab.level
    order = tab.group_order
    primes = prime_factors(order)
    out = []
    for orbit in galois_orbits(tab, maps):
        rep = orbit[0]
        chi = tab.characters[rep]
        fd = field_descriptor(chi, n, maps)
        k = kernel_order(chi, tab.classes)
        d = chi.degree
        for j in orbit[1:]:
            other = tab.characters[j]
            assert other.degree == d and kernel_order(other, tab.classes) == k
        om = omega(order, k, d)
        out.append(
            RationalIrrep(
                orbit=orbit,
                representative=rep,
                kernel_order=k,
                complex_degree=d,
                omega=om,
                field=fd,
                unit_rank=unit_rank(fd),
                v=splitting.count_primes_dividing(fd, order),
                w=splitting.count_primes_dividing(fd, om),
                t_by_prime={p: splitting.primes_above_count(fd, p) for p in primes},
            )
        )
    return out
