import pytest

from htwrank.catalog import construct, parse_group_spec
from htwrank.chartab import character_table
from htwrank.errors import NonIntegerOmega, OddComplexDegree
from htwrank.permgroup import generate_group, power_maps
from htwrank.ratrep import (
    AbelianFieldDescriptor,
    galois_orbits,
    galois_stabilizer,
    kernel_order,
    omega,
    rational_irreps,
    unit_rank,
)

from conftest import all_catalog_groups, cached_table


def setup(spec):
    g = generate_group(construct(parse_group_spec(spec)))
    tab = character_table(g)
    return g, tab, power_maps(g, g.classes, tab.level)


def by_values(tab, *rendered):
    return next(i for i, c in enumerate(tab.characters) if c.rendered() == rendered)


def test_sl2_3_stabilizers_and_orbits():
    g, tab, maps = setup("sl2_3")
    stabs = [galois_stabilizer(c, 12, maps) for c in tab.characters]
    # the degree-1 characters with non-rational values are fixed by {1, 7} only
    nonrational = [s for c, s in zip(tab.characters, stabs) if c.degree == 1 and len(s) < 4]
    assert nonrational == [frozenset({1, 7}), frozenset({1, 7})]
    orbits = galois_orbits(tab, maps)
    assert sorted(len(o) for o in orbits) == [1, 1, 1, 2, 2]


def test_stabilizer_routes_agree():
    for name in ["S3", "Q8", "C7:C3", "Dic12", "C12", "SL(2,3)", "C13:C3"]:
        tab = cached_table(name)
        g = dict(all_catalog_groups())[name]
        maps = power_maps(g, g.classes, tab.level)
        for c in tab.characters:
            assert galois_stabilizer(c, tab.level) == galois_stabilizer(c, tab.level, maps)


def test_kernel_orders():
    g, tab, maps = setup("sl2_3")
    kernels = sorted(kernel_order(c, tab.classes) for c in tab.characters)
    assert kernels == [1, 1, 1, 2, 8, 8, 24]
    trivial = by_values(tab, *("1",) * 7)
    assert kernel_order(tab.characters[trivial], tab.classes) == 24


def test_omega():
    assert omega(24, 8, 1) == 3
    assert omega(24, 1, 2) == 12
    with pytest.raises(NonIntegerOmega):
        omega(24, 5, 1)


def test_unit_rank():
    assert unit_rank(AbelianFieldDescriptor.from_stabilizer(3, [1])) == 0
    assert unit_rank(AbelianFieldDescriptor.from_stabilizer(5, [1, 4])) == 1
    assert unit_rank(AbelianFieldDescriptor.from_stabilizer(5, [1])) == 1
    assert unit_rank(AbelianFieldDescriptor.from_stabilizer(7, [1])) == 2
    assert unit_rank(AbelianFieldDescriptor.from_stabilizer(1, [0])) == 0
    with pytest.raises(OddComplexDegree):
        unit_rank(AbelianFieldDescriptor(7, frozenset({1, 2, 4}), 3, False))


def test_field_labels():
    assert AbelianFieldDescriptor.from_stabilizer(12, [1, 5, 7, 11]).label() == "Q"
    assert AbelianFieldDescriptor.from_stabilizer(12, [1, 7]).label() == "Q(z3)"
    assert AbelianFieldDescriptor.from_stabilizer(5, [1, 4]).label() == "Q(z5)+"
    assert AbelianFieldDescriptor.from_stabilizer(7, [1, 2, 4]).label() == "Q(z7)^<1,2,4>"
    with pytest.raises(ValueError):
        AbelianFieldDescriptor.from_stabilizer(7, [1, 2, 4, 3])


def test_rational_irrep_invariants_over_catalog():
    for name, g in all_catalog_groups():
        tab = cached_table(name)
        maps = power_maps(g, g.classes, tab.level)
        irreps = rational_irreps(tab, maps)
        covered = sorted(i for rho in irreps for i in rho.orbit)
        assert covered == list(range(len(tab))), name
        assert sum(len(rho.orbit) * rho.complex_degree ** 2 for rho in irreps) == g.order, name
        for rho in irreps:
            assert len(rho.orbit) == rho.field.degree, name
            chi = tab.characters[rho.representative]
            self_conj = tuple(v.conjugate() for v in chi.values) == chi.values
            assert rho.field.totally_real == self_conj, name
            assert rho.omega * rho.kernel_order * rho.complex_degree == g.order
            assert 0 <= rho.w <= rho.v
