"""Finite permutation groups by full element enumeration.

Elements are stored explicitly, which keeps every later computation
(conjugacy classes, class algebra constants, power maps) a matter of
lookups. This is meant for groups of a few thousand elements at most.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .errors import CapExceeded, EmptyGenerators, NotAMember

DEFAULT_CAP = 20000


class Permutation:
    """A bijection of {1..degree}.

    ``p * q`` is composition with ``q`` applied first, so that
    ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        img = tuple(i - 1 for i in images)
        if not img:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection on 1..{len(img)}: {tuple(images)}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} appears twice")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def images(self) -> tuple:
        return tuple(i + 1 for i in self._img)

    @property
    def degree(self) -> int:
        return len(self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        a = self._img
        return Permutation._raw(tuple(a[j] for j in other._img))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = n * len(cyc) // gcd(n, len(cyc))
        return n

    def cycles(self) -> list:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self._img)):
            if start in seen or self._img[start] == start:
                continue
            cyc = [start + 1]
            seen.add(start)
            j = self._img[start]
            while j != start:
                cyc.append(j + 1)
                seen.add(j)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def extend(self, degree: int) -> "Permutation":
        if degree < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Permutation._raw(self._img + tuple(range(self.degree, degree)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


class Group:
    """Fully enumerated permutation group.

    ``elements`` is sorted lexicographically by image array, so the
    identity is always element 0.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x: Permutation) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise NotAMember(f"{x} is not an element of the group") from None

    @cached_property
    def classes(self) -> "ClassData":
        return conjugacy_classes(self)

    def __repr__(self):
        return f"<Group of order {self.order} on {self.degree} points>"


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    element_order: int
    members: tuple  # element indices into Group.elements, ascending


@dataclass(frozen=True)
class ClassData:
    classes: tuple
    class_of: tuple  # element index -> class index

    def __len__(self):
        return len(self.classes)

    @property
    def sizes(self) -> list:
        return [c.size for c in self.classes]

    @property
    def orders(self) -> list:
        return [c.element_order for c in self.classes]


def generate_group(generators: Sequence[Permutation], cap: int = DEFAULT_CAP, degree: int | None = None) -> Group:
    """Close ``generators`` under composition.

    Raises CapExceeded as soon as more than ``cap`` elements are found.
    An empty generator list is only accepted when ``degree`` is given, in
    which case the trivial group on that many points is returned.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    generators = list(generators)
    if not generators:
        if degree is None:
            raise EmptyGenerators("no generators and no degree given")
        return Group(degree, [], [Permutation.identity(degree)])
    deg = generators[0].degree
    if any(g.degree != deg for g in generators):
        raise ValueError("generators act on different numbers of points")
    if degree is not None and degree != deg:
        raise ValueError(f"generators have degree {deg}, expected {degree}")

    e = Permutation.identity(deg)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = x * s
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"group order exceeds cap {cap}")
                queue.append(y)
    return Group(deg, generators, sorted(seen))


def element_order(g: Group, x: Permutation) -> int:
    g.index(x)
    return x.order()


def exponent(g: Group) -> int:
    n = 1
    for c in g.classes.classes:
        n = n * c.element_order // gcd(n, c.element_order)
    return n


def conjugacy_classes(g: Group) -> ClassData:
    """Partition the elements into conjugacy classes.

    Classes are ordered by (element order, size, smallest member), which
    puts the identity class first.
    """
    elements = g.elements
    conj_by = [(s, s.inverse()) for s in g.generators]
    class_id = [-1] * g.order
    raw = []
    for start in range(g.order):
        if class_id[start] >= 0:
            continue
        cid = len(raw)
        class_id[start] = cid
        members = [start]
        queue = deque([elements[start]])
        while queue:
            x = queue.popleft()
            for s, s_inv in conj_by:
                j = g.index(s * x * s_inv)
                if class_id[j] < 0:
                    class_id[j] = cid
                    members.append(j)
                    queue.append(elements[j])
        members.sort()
        raw.append(members)

    def key(members):
        rep = elements[members[0]]
        return (rep.order(), len(members), rep)

    raw.sort(key=key)
    classes = []
    class_of = [0] * g.order
    for ci, members in enumerate(raw):
        rep = elements[members[0]]
        classes.append(ConjugacyClass(rep, len(members), rep.order(), tuple(members)))
        for j in members:
            class_of[j] = ci
    return ClassData(tuple(classes), tuple(class_of))


def class_power_map(g: Group, cd: ClassData, k: int) -> tuple:
    """Image of each class under x -> x**k."""
    return tuple(cd.class_of[g.index(c.representative ** k)] for c in cd.classes)


def power_maps(g: Group, cd: ClassData, count: int) -> list:
    """``[class_power_map(g, cd, l) for l in range(count)]``, computed incrementally."""
    reps = [c.representative for c in cd.classes]
    current = [g.identity] * len(reps)
    maps = []
    for _ in range(count):
        maps.append(tuple(cd.class_of[g.index(x)] for x in current))
        current = [x * r for x, r in zip(current, reps)]
    return maps


def inverse_classes(g: Group, cd: ClassData) -> tuple:
    return class_power_map(g, cd, -1)


def is_abelian(g: Group) -> bool:
    gens = g.generators
    return all(a * b == b * a for a in gens for b in gens)


def is_nilpotent(g: Group) -> bool:
    """A finite group is nilpotent iff each Sylow subgroup is normal,
    i.e. iff the p-elements number exactly the p-part of |G| for every p."""
    n = g.order
    for p in prime_factors(n):
        p_part = 1
        m = n
        while m % p == 0:
            p_part *= p
            m //= p
        count = sum(c.size for c in g.classes.classes if _is_power_of(c.element_order, p))
        if count != p_part:
            return False
    return True


def _is_power_of(k, p):
    while k % p == 0:
        k //= p
    return k == 1


def prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
