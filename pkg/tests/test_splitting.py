import pytest

from htwrank import polyfp
from htwrank.chartab import is_prime
from htwrank.cyclo import euler_phi, units
from htwrank.errors import NotMonic
from htwrank.ratrep import AbelianFieldDescriptor
from htwrank.splitting import (
    count_primes_dividing,
    cyclotomic_oracle,
    decomposition_data,
    dedekind_factor_count_oracle,
    primes_above_count,
    splitting_type,
)

PRIMES = [p for p in range(2, 31) if is_prime(p)]


def full(n):
    return AbelianFieldDescriptor.from_stabilizer(n, [1])


def test_q_zeta3_examples():
    f = full(3)
    assert primes_above_count(f, 3) == 1
    assert primes_above_count(f, 2) == 1
    assert splitting_type(f, 3) == splitting_type(f, 3).__class__(2, 1, 1)
    assert (splitting_type(f, 2).residue_degree, splitting_type(f, 7).primes) == (2, 2)
    assert count_primes_dividing(f, 24) == 2
    assert count_primes_dividing(f, 12) == 2
    assert count_primes_dividing(f, 3) == 1
    assert count_primes_dividing(f, 1) == 0


def test_rational_field_has_one_prime_each():
    q = AbelianFieldDescriptor.from_stabilizer(12, units(12))
    assert q.degree == 1
    assert count_primes_dividing(q, 24) == 2
    assert count_primes_dividing(AbelianFieldDescriptor.from_stabilizer(1, [0]), 30) == 3


def test_decomposition_data():
    dd = decomposition_data(12, 2)
    # 12 = 4 * 3: inertia is the kernel of reduction mod 3
    assert dd.inertia == frozenset({1, 7})
    assert dd.frobenius % 3 == 2 and dd.frobenius % 4 == 1
    assert dd.decomposition == frozenset(units(12))


@pytest.mark.parametrize("n", range(1, 31))
def test_efg_and_oracle(n):
    for p in PRIMES:
        f = full(n)
        st = splitting_type(f, p)
        assert st.ramification * st.residue_degree * st.primes == euler_phi(n)
        assert primes_above_count(f, p) == cyclotomic_oracle(n, p)
        if n % p:
            # unramified: g = phi(n) / ord_n(p)
            k = 1
            while pow(p, k, n) != 1 % n:
                k += 1
            assert st.ramification == 1 and st.primes == euler_phi(n) // k


@pytest.mark.parametrize("n", [5, 7, 12, 15, 21, 24])
def test_subfield_counts_bounded(n):
    for gens in ([1], [-1], [units(n)[1]]):
        f = AbelianFieldDescriptor.from_generators(n, gens)
        for p in PRIMES:
            g = primes_above_count(f, p)
            assert 1 <= g <= f.degree
            assert g <= primes_above_count(full(n), p)
            st = splitting_type(f, p)
            assert st.ramification * st.residue_degree * st.primes == f.degree


def test_real_subfield_of_q_zeta5():
    f = AbelianFieldDescriptor.from_generators(5, [4])
    assert f.degree == 2 and f.totally_real and f.label() == "Q(z5)+"
    assert primes_above_count(f, 5) == 1
    assert primes_above_count(f, 11) == 2
    assert primes_above_count(f, 2) == 1


def test_polyfp_factorisation():
    # x^4 + 1 splits into linear factors mod 17 and into quadratics mod 3
    f = [1, 0, 0, 0, 1]
    assert dedekind_factor_count_oracle(f, 17) == 4
    assert dedekind_factor_count_oracle(f, 3) == 2
    assert dedekind_factor_count_oracle(f, 2) == 1
    facs = polyfp.factor(f, 17)
    assert sorted(len(a) - 1 for a in facs) == [1, 1, 1, 1]
    prod = [1]
    for a, m in facs.items():
        for _ in range(m):
            prod = polyfp.mul(prod, a, 17)
    assert polyfp.reduce(prod, 17) == polyfp.reduce(f, 17)
    with pytest.raises(NotMonic):
        polyfp.distinct_factor_count([1, 2], 5)


def test_squarefree_decomposition_counts_repeated_factors_once():
    # (x+1)^3 (x+2) mod 5
    f = polyfp.mul(polyfp.mul(polyfp.mul([1, 1], [1, 1], 5), [1, 1], 5), [2, 1], 5)
    assert polyfp.distinct_factor_count(f, 5) == 2
