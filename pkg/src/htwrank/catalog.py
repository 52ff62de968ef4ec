"""Named group constructors and the ``.grp`` catalog format.

Catalog grammar, one entry per line::

    # comment
    Q8 := (1,2,3,4)(5,8,7,6), (1,5,3,7)(2,6,4,8)

The degree of an entry is the largest point it mentions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from itertools import product as iproduct
from math import factorial
from pathlib import Path
from typing import Iterable

from .errors import BadSpec, DuplicateName, ParseError
from .permgroup import Permutation

KINDS = (
    "trivial",
    "cyclic",
    "dihedral",
    "generalized_quaternion",
    "symmetric",
    "alternating",
    "sl2_3",
    "product",
    "file-entry",
)

SHIPPED = ("order_lt24.grp", "families.grp")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    parameter: int | None = None
    factors: tuple = ()
    name: str = ""
    generators: tuple = field(default=(), compare=False)  # file-entry only

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", self.default_name())

    def default_name(self):
        if self.kind == "product":
            return " x ".join(f.name for f in self.factors)
        if self.parameter is None:
            return self.kind
        return f"{self.kind}:{self.parameter}"

    def validate(self):
        k, n = self.kind, self.parameter
        if k not in KINDS:
            raise BadSpec(f"unknown group kind {k!r}")
        if k in ("cyclic", "symmetric", "alternating") and (n is None or n < 1):
            raise BadSpec(f"{k} needs a parameter >= 1")
        if k == "dihedral" and (n is None or n < 4 or n % 2):
            raise BadSpec("dihedral takes the group order, which must be even and >= 4")
        if k == "generalized_quaternion" and (n is None or n < 8 or n % 4):
            raise BadSpec("generalized_quaternion takes the group order, divisible by 4 and >= 8")
        if k == "product" and len(self.factors) < 2:
            raise BadSpec("a product needs at least two factors")
        if k == "file-entry" and not self.generators:
            raise BadSpec("a file entry needs generators")
        for f in self.factors:
            f.validate()

    def expected_order(self):
        k, n = self.kind, self.parameter
        if k in ("cyclic", "dihedral", "generalized_quaternion"):
            return n
        if k == "trivial":
            return 1
        if k == "symmetric":
            return factorial(n)
        if k == "alternating":
            return max(factorial(n) // 2, 1)
        if k == "sl2_3":
            return 24
        if k == "product":
            out = 1
            for f in self.factors:
                out *= f.expected_order()
            return out
        return None


def _cycle(points, degree):
    return Permutation.from_cycles([points], degree)


def cyclic(n):
    if n == 1:
        return [Permutation.identity(1)]
    return [_cycle(list(range(1, n + 1)), n)]


def dihedral(order):
    m = order // 2
    if m == 2:
        return [Permutation.from_cycles([(1, 2)], 4), Permutation.from_cycles([(3, 4)], 4)]
    rotation = _cycle(list(range(1, m + 1)), m)
    reflection = Permutation([1] + list(range(m, 1, -1)))
    return [rotation, reflection]


def generalized_quaternion(order):
    """Right regular action of <a, b | a^2m, b^2 = a^m, b a b^-1 = a^-1>.

    The element a^i b^j is point 1 + i + 2m*j.
    """
    m = order // 4
    two_m = 2 * m

    def point(i, j):
        return 1 + (i % two_m) + two_m * j

    a_img = [0] * (2 * two_m)
    b_img = [0] * (2 * two_m)
    for j in (0, 1):
        for i in range(two_m):
            src = point(i, j) - 1
            a_img[src] = point(i + (1 if j == 0 else -1), j)
            b_img[src] = point(i, 1) if j == 0 else point(i + m, 0)
    return [Permutation(a_img), Permutation(b_img)]


def symmetric(n):
    if n == 1:
        return [Permutation.identity(1)]
    if n == 2:
        return [_cycle([1, 2], 2)]
    return [_cycle([1, 2], n), _cycle(list(range(1, n + 1)), n)]


def alternating(n):
    if n < 3:
        return [Permutation.identity(n)]
    return [_cycle([1, 2, k], n) for k in range(3, n + 1)]


SL2_3_POINTS = [v for v in iproduct(range(3), repeat=2) if v != (0, 0)]


def sl2_3_element(matrix) -> Permutation:
    """Permutation of the 8 nonzero vectors of F_3^2 induced by v -> M v.

    Points are the vectors in lexicographic order, numbered from 1.
    """
    (a, b), (c, d) = matrix
    index = {v: i for i, v in enumerate(SL2_3_POINTS)}
    images = []
    for x, y in SL2_3_POINTS:
        images.append(index[((a * x + b * y) % 3, (c * x + d * y) % 3)] + 1)
    return Permutation(images)


def sl2_3():
    return [sl2_3_element(((1, 1), (0, 1))), sl2_3_element(((0, -1), (1, 0)))]


def direct_product(a, b):
    """Generators of A x B acting on the disjoint union of the point sets."""
    if not a or not b:
        raise BadSpec("direct product of an empty generator list")
    da, db = a[0].degree, b[0].degree
    deg = da + db
    gens = [x.extend(deg) for x in a]
    for y in b:
        gens.append(Permutation(list(range(1, da + 1)) + [i + da for i in y.images]))
    return gens


def construct(spec: GroupSpec) -> list:
    spec.validate()
    k, n = spec.kind, spec.parameter
    if k == "trivial":
        return [Permutation.identity(1)]
    if k == "cyclic":
        return cyclic(n)
    if k == "dihedral":
        return dihedral(n)
    if k == "generalized_quaternion":
        return generalized_quaternion(n)
    if k == "symmetric":
        return symmetric(n)
    if k == "alternating":
        return alternating(n)
    if k == "sl2_3":
        return sl2_3()
    if k == "file-entry":
        return list(spec.generators)
    gens = construct(spec.factors[0])
    for f in spec.factors[1:]:
        gens = direct_product(gens, construct(f))
    return gens


_ATOM = re.compile(r"^([a-z_23]+)(?::(\d+))?$")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``cyclic:4``, ``sl2_3`` or ``cyclic:2 x symmetric:3``."""
    parts = [p.strip() for p in re.split(r"\s+x\s+", text.strip())]
    specs = []
    for part in parts:
        m = _ATOM.match(part)
        if not m or m.group(1) not in KINDS or m.group(1) in ("product", "file-entry"):
            raise BadSpec(f"cannot parse group spec {part!r}")
        kind, num = m.group(1), m.group(2)
        if kind in ("trivial", "sl2_3"):
            if num is not None:
                raise BadSpec(f"{kind} takes no parameter")
            spec = GroupSpec(kind)
        else:
            if num is None:
                raise BadSpec(f"{kind} needs a parameter, e.g. {kind}:4")
            spec = GroupSpec(kind, int(num))
        spec.validate()
        specs.append(spec)
    if len(specs) == 1:
        return specs[0]
    return GroupSpec("product", factors=tuple(specs))


_CYCLE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)")


def _parse_generators(text, lineno):
    gens = []
    pos = 0
    n = len(text)
    while True:
        cycles = []
        matched = False
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            m = _CYCLE.match(text, pos)
            if not m:
                break
            matched = True
            if m.group(1):
                cycles.append([int(t) for t in m.group(1).split(",")])
            pos = m.end()
        if not matched:
            raise ParseError(lineno, f"expected a cycle near {text[pos:pos + 10]!r}")
        gens.append(cycles)
        if pos == n:
            break
        if text[pos] != ",":
            raise ParseError(lineno, f"unexpected {text[pos]!r} near {text[pos:pos + 10]!r}")
        pos += 1
    points = [p for g in gens for c in g for p in c]
    if any(p < 1 for p in points):
        raise ParseError(lineno, "points are numbered from 1")
    degree = max(points + [1])
    out = []
    for cycles in gens:
        try:
            out.append(Permutation.from_cycles(cycles, degree))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    return out


def parse_catalog(lines: Iterable[str]) -> list:
    """Parse catalog text into ``[(name, generators), ...]`` in file order."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    entries = []
    names = set()
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":=" not in line:
            raise ParseError(lineno, "expected 'name := generators'")
        name, rest = line.split(":=", 1)
        name = name.strip()
        if not name:
            raise ParseError(lineno, "empty name")
        if name in names:
            raise DuplicateName(f"line {lineno}: duplicate name {name!r}")
        names.add(name)
        entries.append((name, _parse_generators(rest, lineno)))
    return entries


def format_catalog(entries) -> str:
    return "".join(f"{name} := {', '.join(str(g) for g in gens)}\n" for name, gens in entries)


def load_catalog(path) -> list:
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh)


def shipped_catalog(name: str) -> list:
    text = resources.files("htwrank.data").joinpath(name).read_text(encoding="utf-8")
    return parse_catalog(text)


def resolve_catalog_path(path: str) -> Path | None:
    """The given path if it exists, else the shipped catalog of the same file name."""
    p = Path(path)
    if p.exists():
        return p
    if p.name in SHIPPED:
        return Path(str(resources.files("htwrank.data").joinpath(p.name)))
    return None
