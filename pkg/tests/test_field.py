import pickle

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from symrank.errors import NonPrimeCharacteristic, ReduciblePolynomial
from symrank.field import (GF, OrderedBasis, check_irreducible, default_field,
                           prime_power, prime_power_field, trace_dual_basis,
                           trace_gram)

from oracles import NaiveField

SMALL = [
    (2, [1, 1, 1]),
    (2, [1, 1, 0, 1]),
    (3, [1, 0, 1]),
    (3, [2, 2, 1]),
    (2, [1, 1, 0, 0, 1]),
    (5, [2, 0, 1]),
    (3, [1, 2, 0, 1]),
]


@pytest.mark.parametrize("p,poly", SMALL)
def test_arithmetic_matches_naive_exhaustive(p, poly):
    F = GF(p, [poly])
    N = NaiveField(p, poly)
    for x in range(F.order):
        for y in range(F.order):
            assert F.mul(x, y) == N.mul(x, y)
            assert F.add(x, y) == N.add(x, y)
        assert F.neg(x) == N.neg(x)


@pytest.mark.parametrize("p,poly", [(3, [2, 0, 0, 2, 1]), (5, [2, 4, 4, 0, 1])])
def test_arithmetic_matches_naive_random(p, poly):
    F = GF(p, [poly])
    N = NaiveField(p, poly)
    rng = np.random.default_rng(1)
    for _ in range(2000):
        x, y = (int(v) for v in rng.integers(0, F.order, 2))
        assert F.mul(x, y) == N.mul(x, y)
        assert F.add(x, y) == N.add(x, y)
        if x:
            assert F.mul(x, F.inv(x)) == 1


def test_generic_path_matches_tables():
    T = GF(2, [[1, 1, 0, 0, 1]])
    G = GF(2, [[1, 1, 0, 0, 1]], table_limit=1)
    assert not G._tabled
    for x in range(16):
        for y in range(16):
            assert T.mul(x, y) == G.mul(x, y)
        assert T.frobenius(x, 1) == G.frobenius(x, 1)
        if x:
            assert T.inv(x) == G.inv(x)


def test_generic_path_for_large_field():
    F = default_field(2, 21)
    assert F.order == 1 << 21 and not F._tabled
    N = NaiveField(2, list(F.poly))
    rng = np.random.default_rng(3)
    for _ in range(50):
        x, y = (int(v) for v in rng.integers(1, F.order, 2))
        assert F.mul(x, y) == N.mul(x, y)
        assert F.mul(x, F.inv(x)) == 1


def test_tower_field_axioms():
    F = default_field(4, 4)
    assert (F.order, F.q, F.m) == (256, 4, 4)
    rng = np.random.default_rng(0)
    for _ in range(500):
        a, b, c = (int(v) for v in rng.integers(0, 256, 3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    # the subfield F_4 is the initial segment and closed under the step
    for a in range(4):
        for b in range(4):
            assert F.mul(a, b) == F.subfield.mul(a, b) < 4


def test_primitive_and_generator():
    F = GF(2, [[1, 1, 0, 0, 1]])
    assert F.primitive == 2
    assert F.generator == 2
    assert len({F.pow(F.primitive, k) for k in range(15)}) == 15
    assert default_field(3, 4).primitive == 3
    assert default_field(5, 4).primitive == 5
    assert default_field(4, 4).generator == 4


def test_frobenius_and_trace():
    F = default_field(3, 2)
    for x in F.elements():
        assert F.frobenius(x) == F.pow(x, 3)
        assert F.frobenius(x, 2) == x
        assert F.in_base(F.trace(x))
    F = default_field(4, 4)
    for x in range(0, 256, 7):
        assert F.frobenius(x) == F.pow(x, 4)
        assert F.trace(x) < 4


def test_trace_matches_naive():
    N = NaiveField(2, [1, 1, 0, 0, 1])
    F = GF(2, [[1, 1, 0, 0, 1]])
    for x in range(16):
        assert F.trace(x) == N.trace(x, 2)


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        GF(4)
    with pytest.raises(ReduciblePolynomial) as exc:
        GF(2, [[1, 0, 1]])
    assert exc.value.witness == [1, 1]
    with pytest.raises(ReduciblePolynomial):
        GF(2, [[0, 1, 1]])
    with pytest.raises(ValueError):
        prime_power(12)


def test_check_irreducible_counts():
    # 3 irreducible monic quartics over F_2, 18 cubics over F_3
    K2, K3 = GF(2), GF(3)
    quartics = sum(check_irreducible(K2, [a, b, c, d, 1])[0]
                   for a in range(2) for b in range(2) for c in range(2) for d in range(2))
    cubics = sum(check_irreducible(K3, [a, b, c, 1])[0]
                 for a in range(3) for b in range(3) for c in range(3))
    assert (quartics, cubics) == (3, 8)


def test_format_parse_roundtrip():
    for F in (default_field(2, 4), default_field(4, 4), default_field(3, 2), GF(5)):
        for x in range(0, F.order, max(1, F.order // 40)):
            assert F.parse(F.format(x)) == x
            assert F.parse(x) == x
    F = default_field(2, 4)
    assert F.format(2) == "[0,0,1,0]"
    assert F.parse("g^3") == 8
    assert default_field(4, 4).format(4) == "[[0,0],[0,0],[0,1],[0,0]]"
    with pytest.raises(ValueError):
        F.parse("[1,0]")


def test_json_pickle_and_equality():
    F = default_field(4, 4)
    G = GF.from_json(F.to_json())
    assert F == G and hash(F) == hash(G)
    H = pickle.loads(pickle.dumps(F))
    assert H == F and H.mul(77, 200) == F.mul(77, 200)
    assert F.with_base(0).q == 2 and F.with_base(0).m == 8
    assert F.with_base(0) != F


def test_prime_power_field():
    assert prime_power_field(4).order == 4
    assert prime_power_field(9).p == 3
    assert prime_power_field(7).order == 7


def test_trace_dual_basis_examples():
    F = default_field(2, 4)
    a = 2
    dual = trace_dual_basis(OrderedBasis.natural(F))
    assert list(dual.elements) == [F.pow(a, 14), F.pow(a, 2), a, 1]
    assert list(dual.coords(F.pow(a, 14))) == [1, 0, 0, 0]
    assert list(OrderedBasis.natural(F).coords(F.pow(a, 14))) == [1, 0, 0, 1]
    F9 = default_field(3, 2)
    a = 3
    dual = trace_dual_basis(OrderedBasis.natural(F9))
    assert list(dual.elements) == [a, F9.pow(a, 2)]


@pytest.mark.parametrize("q,m", [(2, 3), (3, 3), (4, 2), (2, 5), (4, 4)])
def test_trace_dual_definition(q, m):
    F = default_field(q, m)
    B = OrderedBasis.powers(F, F.generator)
    D = trace_dual_basis(B)
    M = np.array([[F.trace(F.mul(b, d)) for d in D.elements] for b in B.elements])
    assert np.array_equal(M, np.eye(m, dtype=np.int64))
    assert np.linalg.matrix_rank(trace_gram(B).astype(float)) >= 1


def test_dependent_basis_rejected():
    F = default_field(2, 3)
    with pytest.raises(ValueError):
        OrderedBasis(F, [1, 1, 2])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_f81_field_laws(a, b, c):
    F = default_field(3, 4)
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    assert F.trace(F.add(a, b)) == F.add(F.trace(a), F.trace(b))


def test_vectorised_ops_agree():
    for F in (default_field(3, 2), default_field(4, 4), default_field(2, 4)):
        rng = np.random.default_rng(5)
        a = rng.integers(0, F.order, 300)
        b = rng.integers(0, F.order, 300)
        assert list(F.vadd(a, b)) == [F.add(int(x), int(y)) for x, y in zip(a, b)]
        assert list(F.vmul(a, b)) == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
        assert list(F.vsub(a, b)) == [F.sub(int(x), int(y)) for x, y in zip(a, b)]
        assert list(F.vfrobenius(a, 1)) == [F.frobenius(int(x)) for x in a]
        nz = a[a > 0]
        assert list(F.vinv(nz)) == [F.inv(int(x)) for x in nz]
