"""Counting irreducible F_p-representations via p-regular F_p-conjugacy classes."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .permgroup import ClassData, Group, class_power_map, prime_factors


@dataclass(frozen=True)
class FpClassReport:
    prime: int
    regular_class_indices: tuple
    d: int
    exponent_group: tuple
    fused_class_count: int


def _orbit_count(nodes, maps):
    parent = {c: c for c in nodes}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for m in maps:
        for c in nodes:
            a, b = find(c), find(m[c])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return len({find(c) for c in nodes})


def fp_class_report(g: Group, cd: ClassData, p: int) -> FpClassReport:
    regular = tuple(i for i, c in enumerate(cd.classes) if c.element_order % p)
    d = 1
    for i in regular:
        o = cd.classes[i].element_order
        d = d * o // gcd(d, o)
    exps = []
    t = p % d
    while t not in exps:
        exps.append(t)
        t = t * p % d
    maps = [class_power_map(g, cd, t) for t in exps]
    return FpClassReport(p, regular, d, tuple(sorted(exps)), _orbit_count(regular, maps))


def fused_count_by_frobenius(g: Group, cd: ClassData, p: int) -> int:
    """Same count, fusing only along the single map C -> C^p."""
    regular = [i for i, c in enumerate(cd.classes) if c.element_order % p]
    return _orbit_count(regular, [class_power_map(g, cd, p)])


def berman_counts(g: Group, cd: ClassData) -> dict:
    return {p: fp_class_report(g, cd, p).fused_class_count for p in prime_factors(g.order)}


def epsilon(g: Group, cd: ClassData) -> int:
    return sum(berman_counts(g, cd).values())
