"""Regenerate the shipped catalogs in src/htwrank/data/.

    python tools/build_catalogs.py

Groups without a convenient small permutation representation are given
by their regular representation, built from an explicit multiplication.
"""

from itertools import product
from pathlib import Path

from htwrank.catalog import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    format_catalog,
    generalized_quaternion,
    sl2_3,
    symmetric,
)
from htwrank.permgroup import Permutation, generate_group

OUT = Path(__file__).resolve().parent.parent / "src" / "htwrank" / "data"


def regular(elements, mul, gens):
    index = {x: i for i, x in enumerate(elements)}
    return [Permutation([index[mul(g, x)] + 1 for x in elements]) for g in gens]


def metacyclic(m, n, r):
    """C_m x| C_n with the generator of C_n acting by i -> r*i."""
    assert pow(r, n, m) == 1 % m
    elements = [(i, j) for j in range(n) for i in range(m)]

    def mul(a, b):
        return ((a[0] + pow(r, a[1], m) * b[0]) % m, (a[1] + b[1]) % n)

    return regular(elements, mul, [(1, 0), (0, 1)])


def c4c2_by_c2(action):
    """(C4 x C2) x| C2 where the C2 acts by the involution ``action``."""
    elements = [(x, y, c) for c in range(2) for y in range(2) for x in range(4)]

    def act(c, x, y):
        return action(x, y) if c else (x, y)

    def mul(a, b):
        x, y = act(a[2], b[0], b[1])
        return ((a[0] + x) % 4, (a[1] + y) % 2, (a[2] + b[2]) % 2)

    return regular(elements, mul, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def heisenberg(p):
    """Upper unitriangular 3x3 matrices over F_p as triples (a, b, c)."""
    elements = list(product(range(p), repeat=3))

    def mul(u, v):
        return ((u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p)

    return regular(elements, mul, [(1, 0, 0), (0, 1, 0)])


def gl2_3():
    points = [v for v in product(range(3), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(points)}

    def perm(m):
        (a, b), (c, d) = m
        return Permutation([index[((a * x + b * y) % 3, (c * x + d * y) % 3)] + 1 for x, y in points])

    return [perm(((1, 1), (0, 1))), perm(((0, 2), (1, 0))), perm(((2, 0), (0, 1)))]


def dp(*factors):
    gens = factors[0]
    for f in factors[1:]:
        gens = direct_product(gens, f)
    return gens


C = cyclic
D = dihedral
Q = generalized_quaternion

ORDER_LT24 = [
    ("C1", C(1)),
    ("C2", C(2)),
    ("C3", C(3)),
    ("C4", C(4)),
    ("C2xC2", dp(C(2), C(2))),
    ("C5", C(5)),
    ("C6", C(6)),
    ("S3", symmetric(3)),
    ("C7", C(7)),
    ("C8", C(8)),
    ("C4xC2", dp(C(4), C(2))),
    ("C2xC2xC2", dp(C(2), C(2), C(2))),
    ("D8", D(8)),
    ("Q8", Q(8)),
    ("C9", C(9)),
    ("C3xC3", dp(C(3), C(3))),
    ("C10", C(10)),
    ("D10", D(10)),
    ("C11", C(11)),
    ("Dic12", metacyclic(3, 4, 2)),
    ("C12", C(12)),
    ("A4", alternating(4)),
    ("D12", D(12)),
    ("C6xC2", dp(C(6), C(2))),
    ("C13", C(13)),
    ("C14", C(14)),
    ("D14", D(14)),
    ("C15", C(15)),
    ("C16", C(16)),
    ("C4xC4", dp(C(4), C(4))),
    ("(C4xC2):C2", c4c2_by_c2(lambda x, y: (x, (y + x) % 2))),
    ("C4:C4", metacyclic(4, 4, 3)),
    ("C8xC2", dp(C(8), C(2))),
    ("M16", metacyclic(8, 2, 5)),
    ("D16", D(16)),
    ("SD16", metacyclic(8, 2, 3)),
    ("Q16", Q(16)),
    ("C4xC2xC2", dp(C(4), C(2), C(2))),
    ("C2xD8", dp(C(2), D(8))),
    ("C2xQ8", dp(C(2), Q(8))),
    ("C4oD8", c4c2_by_c2(lambda x, y: ((x + 2 * y) % 4, y))),
    ("C2^4", dp(C(2), C(2), C(2), C(2))),
    ("C17", C(17)),
    ("C18", C(18)),
    ("C6xC3", dp(C(6), C(3))),
    ("D18", D(18)),
    ("C3xS3", dp(C(3), symmetric(3))),
    ("(C3xC3):C2", [Permutation.from_cycles(c, 6) for c in ([(1, 2, 3)], [(4, 5, 6)], [(2, 3), (5, 6)])]),
    ("C19", C(19)),
    ("Dic20", metacyclic(5, 4, 4)),
    ("C20", C(20)),
    ("F20", metacyclic(5, 4, 2)),
    ("D20", D(20)),
    ("C10xC2", dp(C(10), C(2))),
    ("C7:C3", metacyclic(7, 3, 2)),
    ("C21", C(21)),
    ("C22", C(22)),
    ("D22", D(22)),
    ("C23", C(23)),
]

FAMILIES = (
    [(f"C{n}", C(n)) for n in (24, 25, 27, 30, 32, 36, 45, 48, 60, 64, 100)]
    + [(f"D{n}", D(n)) for n in (24, 32, 36, 48, 60, 64, 100, 128, 200)]
    + [(f"Q{n}", Q(n)) for n in (24, 32, 48, 64, 100, 128, 200)]
    + [
        ("S4", symmetric(4)),
        ("S5", symmetric(5)),
        ("A5", alternating(5)),
        ("SL(2,3)", sl2_3()),
        ("SL(2,3)xC2", dp(sl2_3(), C(2))),
        ("SL(2,3)xC3", dp(sl2_3(), C(3))),
        ("GL(2,3)", gl2_3()),
        ("S3xS3", dp(symmetric(3), symmetric(3))),
        ("A4xC2", dp(alternating(4), C(2))),
        ("Heis27", heisenberg(3)),
        ("C9:C3", metacyclic(9, 3, 4)),
        ("C13:C3", metacyclic(13, 3, 3)),
        ("C11:C5", metacyclic(11, 5, 3)),
        ("C19:C3", metacyclic(19, 3, 7)),
        ("(C7:C3)xC3", dp(metacyclic(7, 3, 2), C(3))),
        ("C7:C9", metacyclic(7, 9, 2)),
    ]
)


def write(name, header, entries):
    for label, gens in entries:
        generate_group(gens)  # sanity: closes below the default cap
    (OUT / name).write_text(header + format_catalog(entries), encoding="utf-8")


if __name__ == "__main__":
    write(
        "order_lt24.grp",
        "# Every group of order < 24 up to isomorphism, one per line.\n"
        "# Generated by tools/build_catalogs.py.\n",
        ORDER_LT24,
    )
    write(
        "families.grp",
        "# Named families up to order 200, plus S5 and SL(2,3).\n"
        "# Generated by tools/build_catalogs.py.\n",
        FAMILIES,
    )
