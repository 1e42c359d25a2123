import numpy as np
import pytest

from symrank.decomp import (ConstrainedSystem, UniPoly, build_sigma,
                            build_sigma_star, certificate_from_alphas, construct,
                            frobenius_unique_criterion, m1_construct,
                            m2_condition, m2_construct, m2_det, m3_construct,
                            m3_det, m3_fT, m3_matrix, m4_construct,
                            m4_construct_from_exponents, m4_construct_from_table,
                            reduce_mod_field_poly, search, sigma_rows,
                            sigma_star_rows, solve_fq_constrained, table4_field)
from symrank.errors import (InvalidCertificate, UnsupportedQ, ZeroAlpha,
                            ZeroEta)
from symrank.field import GF, default_field, prime_power_field
from symrank.multtensor import verify_certificate
from symrank.reference import M4_SEARCHED, TABLE4, known

from oracles import NaiveField, perm_det, poly_function

M2_QS = [2, 3, 4, 5, 7, 8, 9, 11, 13]
M3_QS = [2, 3, 4, 5]


def test_sigma_rows():
    assert sigma_rows(3) == [(0, 0), (1, 0), (2, 0)]
    assert len(sigma_star_rows(2)) == 3
    assert len(sigma_star_rows(3)) == 6
    assert len(sigma_star_rows(4)) == 10
    q = 5
    vals = [q ** a + q ** b for a, b in sigma_star_rows(2)]
    assert vals == [2, 2 * q, q + 1]


def test_sigma_star_rows_closed_under_shift():
    for m in range(1, 7):
        rows = {frozenset(r) for r in sigma_star_rows(m)}
        assert len(rows) == len(sigma_star_rows(m)) == m * (m + 1) // 2
        for a, b in sigma_star_rows(m):
            assert frozenset(((a + 1) % m, (b + 1) % m)) in rows


def test_build_sigma_shapes_and_errors():
    F = default_field(2, 4)
    S = build_sigma(F, [1, 2, 3], 2, 1)
    assert S.shape == (4, 3) and S.rhs == (2, 0, 0, 0)
    T = build_sigma_star(F, [1, 2, 3], 2, 1)
    assert T.shape == (10, 3)
    assert [T.rhs[r] for r in range(4)] == [F.frobenius(2, j) for j in range(4)]
    with pytest.raises(ZeroAlpha):
        build_sigma(F, [1, 0], 2, 0)


def test_f9_sigma0_solvable():
    F = default_field(3, 2)
    eta = F.pow(3, 5)
    S = build_sigma(F, [1, eta, F.mul(eta, eta)], 3, 0)
    x = solve_fq_constrained(S)
    assert x is not None and all(0 <= v < 3 for v in x)
    # recombine: sum x_j alpha_j Tr(alpha_j x) == x
    A = S.matrix
    assert [F.sum(F.mul(int(x[j]), int(A[r, j])) for j in range(3))
            for r in range(2)] == [1, 0]


def test_trivial_systems():
    F = default_field(2, 3)
    zero = ConstrainedSystem(F, (1, 2), tuple(sigma_rows(3)), (0, 0, 0), 0)
    assert list(solve_fq_constrained(zero)) == [0, 0]
    xi = F.generator
    one = ConstrainedSystem(F, (1,), ((0, 0),), (xi,), 1)
    assert solve_fq_constrained(one) is None


def test_frobenius_criterion_singular_and_agreement():
    F = default_field(3, 2)
    S = build_sigma_star(F, [1, 1, 4], F.generator, 0)
    assert frobenius_unique_criterion(S) is None
    eta = F.pow(3, 5)
    alphas = [1, eta, F.mul(eta, eta)]
    for i in range(2):
        x = frobenius_unique_criterion(build_sigma_star(F, alphas, 3, i))
        assert x is not None
        assert np.array_equal(x, solve_fq_constrained(build_sigma(F, alphas, 3, i)))
    with pytest.raises(ValueError):
        frobenius_unique_criterion(build_sigma(F, alphas, 3, 0))


def test_m2_condition_values():
    F = default_field(3, 2)
    assert F.format(m2_condition(F, F.pow(3, 5))) == "[1,0]"
    F4 = default_field(2, 2)
    omega = 2
    # direct evaluation: omega^4 - 1 = omega + 1 in F_4
    assert m2_condition(F4, omega) == F4.add(omega, 1) == 3
    for q in M2_QS:
        F = default_field(q, 2)
        for a in range(1, q):
            assert m2_condition(F, a) == 0
    with pytest.raises(ZeroEta):
        m2_condition(F4, 0)


@pytest.mark.parametrize("q", M2_QS)
def test_m2_det_is_vandermonde(q):
    F = default_field(q, 2)
    for eta in range(1, F.order, max(1, F.order // 60)):
        t = F.pow(eta, q - 1)
        want = F.neg(F.mul(F.pow(eta, q + 5),
                           F.mul(F.pow(F.sub(t, 1), 3), F.add(t, 1))))
        assert m2_det(F, eta) == want


def test_m2_condition_not_sufficient_when_eta_squared_in_base():
    F = GF(5, [[2, 0, 1]])  # x^2 + 2
    eta = 5  # a, with a^2 = 3
    assert F.mul(eta, eta) == 3
    assert m2_condition(F, eta) != 0
    assert m2_det(F, eta) == 0
    assert certificate_from_alphas(F, F.generator, [1, eta, 3]) is None
    cert = m2_construct(F)
    assert verify_certificate(cert)


@pytest.mark.parametrize("q", M2_QS)
def test_m2_construct(q):
    cert = m2_construct(q=q)
    assert cert.R == 3 and verify_certificate(cert)
    assert known(q, 2).contains(cert.R)


def test_m2_q3_eta_admissible():
    F = default_field(3, 2)
    eta = F.pow(3, 5)
    cert = certificate_from_alphas(F, 3, [1, eta, F.mul(eta, eta)])
    assert cert is not None and verify_certificate(cert)


@pytest.mark.parametrize("q", M3_QS)
def test_m3_det_equals_f_at_xi(q):
    F = default_field(q, 3)
    P = m3_fT(q)
    rng = np.random.default_rng(q)
    xs = [int(x) for x in rng.integers(1, F.order, 100)]
    for xi in xs:
        alphas = [F.pow(xi, i) for i in range(6)]
        assert m3_det(F, alphas) == P.evaluate(xi, F)


def test_m3_det_against_permutation_oracle():
    F = default_field(3, 3)
    rng = np.random.default_rng(0)
    for _ in range(5):
        alphas = [int(x) for x in rng.integers(1, F.order, 6)]
        assert m3_det(F, alphas) == perm_det(F, m3_matrix(F, alphas))
    assert m3_det(F, [1, 1, 2, 4, 5, 7]) == 0
    assert m3_det(F, [1, 2, 1, 2, 1, 2]) == 0


@pytest.mark.parametrize("q,poly", [(2, [1, 1, 0, 1]), (3, [1, 2, 0, 1])])
def test_m3_fT_against_naive_determinant(q, poly):
    """f(t) agrees with the permutation determinant of the T-matrix
    evaluated in an independently implemented field."""
    N = NaiveField(q, poly)
    P = m3_fT(q)
    exps = [2, 2 * q, 2 * q * q, q + 1, q * q + q, q * q + 1]
    for t in range(1, N.order):
        M = [[N.pow(t, c * e) for c in range(6)] for e in exps]
        assert perm_det(N, M) == poly_function(P.coeffs, N, t)


def test_m3_fT_all_base_elements_are_roots():
    for q in M3_QS:
        P = m3_fT(q)
        K = prime_power_field(q)
        for a in range(q):
            assert P.evaluate(a, K) == 0


@pytest.mark.parametrize("q", [19, 23])
def test_m3_fT_degree_formula(q):
    P = m3_fT(q)
    assert P.degree == 17 * q * q + 9 * q + 4
    assert P.leading == q - 1


def _vec_eval(F, P, xs):
    acc = np.zeros_like(xs)
    for c in reversed(P.coeffs):
        acc = F.vadd(F.vmul(acc, xs), np.full_like(xs, c))
    return acc


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_reduce_preserves_function(q):
    F = default_field(q, 3)
    P = m3_fT(q, F.subfield)
    R = reduce_mod_field_poly(P, q, 3)
    assert R.degree < q ** 3
    xs = np.arange(F.order, dtype=np.int64)
    assert np.array_equal(_vec_eval(F, P, xs), _vec_eval(F, R, xs))


def test_reduce_small_cases():
    K = GF(2)
    assert reduce_mod_field_poly(UniPoly(K, [0] * 8 + [1]), 2, 3).coeffs == (0, 1)
    assert reduce_mod_field_poly(UniPoly(K, [0, 0, 0, 1]), 2, 3).coeffs == (0, 0, 0, 1)
    assert reduce_mod_field_poly(UniPoly(K, [1]), 2, 3).coeffs == (1,)
    assert reduce_mod_field_poly(m3_fT(2), 2, 3).leading_term() == "T^6"


@pytest.mark.parametrize("q", M3_QS)
def test_m3_construct(q):
    cert = m3_construct(q=q)
    assert cert.R == 6 and verify_certificate(cert)
    assert cert.R <= known(q, 3).hi + 1


@pytest.mark.parametrize("q", [2, 3, 5])
def test_m4_table_rows(q):
    cert = m4_construct_from_table(q)
    assert cert.R == TABLE4[q].R and verify_certificate(cert)
    assert known(q, 4).contains(cert.R)


def test_m4_table_q4_row_does_not_verify():
    with pytest.raises(InvalidCertificate):
        m4_construct_from_table(4)


def test_m4_searched_q4():
    cert = m4_construct_from_exponents(4, M4_SEARCHED[4])
    assert cert.R == 8 and verify_certificate(cert)
    assert m4_construct(4).R == 8
    assert known(4, 4).contains(8)


def test_m4_unsupported():
    with pytest.raises(UnsupportedQ):
        m4_construct_from_table(7)
    with pytest.raises(UnsupportedQ):
        construct(2, 5)


def test_m1():
    for q in (2, 3, 4):
        cert = construct(q, 1)
        assert cert.R == 1 and verify_certificate(cert)
    with pytest.raises(ValueError):
        m1_construct(default_field(2, 2))


def _constructions():
    for q in M2_QS:
        yield m2_construct(q=q)
    for q in M3_QS:
        yield m3_construct(q=q)
    for q in (2, 3, 4, 5):
        yield m4_construct(q)


def test_frobenius_stability_of_constructed_systems():
    for cert in _constructions():
        F = cert.field
        for i in range(F.m):
            S = build_sigma_star(F, cert.alphas, cert.xi, i)
            A = S.matrix
            rows = {frozenset(r): k for k, r in enumerate(S.exponents)}
            for r, (a, b) in enumerate(S.exponents):
                r2 = rows[frozenset(((a + 1) % F.m, (b + 1) % F.m))]
                assert list(F.vfrobenius(A[r], 1)) == list(A[r2])
                assert F.frobenius(S.rhs[r]) == S.rhs[r2]
            # any F_q solution of Sigma_i solves every conjugate system
            X = cert.coefficients[i]
            B = build_sigma(F, cert.alphas, cert.xi, i)
            M = B.matrix
            for j in range(F.m):
                Mj = F.vfrobenius(M, j)
                lhs = [F.sum(F.mul(int(X[c]), int(Mj[r, c])) for c in range(len(X)))
                       for r in range(M.shape[0])]
                assert lhs == [F.frobenius(v, j) for v in B.rhs]


def test_solver_equivalence_on_constructions():
    for q in M2_QS:
        cert = m2_construct(q=q)
        _equivalent(cert)
    for q in M3_QS:
        _equivalent(m3_construct(q=q))


def _equivalent(cert):
    F = cert.field
    for i in range(F.m):
        star = build_sigma_star(F, cert.alphas, cert.xi, i)
        x = frobenius_unique_criterion(star)
        assert x is not None
        assert np.array_equal(x, solve_fq_constrained(star))
        assert np.array_equal(x, solve_fq_constrained(build_sigma(F, cert.alphas, cert.xi, i)))


def test_search_examples():
    r = search(2, 2, 3)
    assert r.status == "found" and verify_certificate(r.certificate)
    assert search(2, 2, 2).status == "exhausted"
    assert search(2, 3, 5).status == "exhausted"
    r = search(2, 4, 9, "powers", budget=1,
               field=table4_field(2), seed_exponents=TABLE4[2].exponents)
    assert r.found and r.index == 0


def test_search_minimum_matches_known():
    for q, m in [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4)]:
        R = 1
        while not search(q, m, R).found:
            R += 1
        assert known(q, m).contains(R) and known(q, m).exact
        assert R == known(q, m).lo


def test_search_budget_and_random_determinism():
    r = search(2, 4, 9, "random", budget=2, seed=3)
    assert r.status in ("budget", "found")
    a = search(3, 3, 6, "random", budget=500, seed=7)
    b = search(3, 3, 6, "random", budget=500, seed=7)
    assert a.found and a.index == b.index
    assert a.certificate.alphas == b.certificate.alphas
    with pytest.raises(ValueError):
        search(2, 2, 3, "random")
    with pytest.raises(ValueError):
        search(2, 2, 3, "bogus")
    assert search(2, 3, 5, budget=20).status == "budget"
    assert search(2, 3, 5, budget=21).status == "exhausted"


def test_search_parallel_matches_serial():
    serial = search(2, 4, 9, "powers", budget=400, chunk=16)
    par = search(2, 4, 9, "powers", budget=400, workers=2, chunk=16)
    assert serial.found and serial.index > 16
    assert par.index == serial.index
    assert par.certificate.alphas == serial.certificate.alphas
    none_s = search(2, 3, 5, chunk=4)
    none_p = search(2, 3, 5, chunk=4, workers=2)
    assert none_s.status == none_p.status == "exhausted"
    assert none_s.examined == none_p.examined


def test_certificates_inside_known_intervals():
    for cert in _constructions():
        iv = known(cert.field.q, cert.m)
        assert iv.lo <= cert.R
