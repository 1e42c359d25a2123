"""Symmetric decompositions of multiplication in ``F_{q^m}``.

A set ``alpha_1..alpha_R`` gives a decomposition when, for every ``i < m``,
``xi^i x`` is an ``F_q``-combination of the polynomials
``alpha_j Tr(alpha_j x)``.  In coefficient form this is the linear system
``Sigma_i``: row ``k`` has entries ``alpha_j^(q^k + 1)``, the right-hand side
is ``(xi^i, 0, ..., 0)``, and the unknowns must lie in ``F_q``.

``Sigma_i*`` closes the rows under the Frobenius; when it is square and
nonsingular its unique solution is automatically in ``F_q``.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import (InvalidCertificate, SolutionNotInBase, UnsupportedQ,
                     ZeroAlpha, ZeroEta)
from .field import GF, default_field, prime_power_field
from .linpoly import projective_classes
from .multtensor import Certificate, first_failure
from .reference import M4_SEARCHED, TABLE4

log = logging.getLogger(__name__)


# -- systems -----------------------------------------------------------------

def sigma_rows(m: int) -> list[tuple[int, int]]:
    """Exponent pairs ``(a, b)`` (meaning ``q^a + q^b``) of ``Sigma_i``."""
    return [(k, 0) for k in range(m)]


def sigma_star_rows(m: int) -> list[tuple[int, int]]:
    """Rows of ``Sigma_i`` closed under ``(a, b) -> (a+1, b+1) mod m``.

    Orbits are listed in the order their seed row appears in ``Sigma_i``;
    a pair equal to one already listed (as an unordered pair) is dropped.
    """
    seen = set()
    rows = []
    for k in range(m):
        if frozenset((k, 0)) in seen:
            continue
        for j in range(m):
            pair = ((k + j) % m, j % m)
            key = frozenset(pair)
            if key in seen:
                continue
            seen.add(key)
            rows.append(pair)
    return rows


@dataclass(frozen=True)
class ConstrainedSystem:
    """``A X = b`` over ``F_{q^m}`` with ``X`` required in ``F_q^R``.

    Entry ``(r, j)`` of ``A`` is ``alpha_j^(q^a + q^b)`` for the row pair
    ``(a, b) = exponents[r]``.
    """

    field: GF
    alphas: tuple
    exponents: tuple
    rhs: tuple
    index: int

    @property
    def shape(self):
        return (len(self.exponents), len(self.alphas))

    @property
    def matrix(self) -> np.ndarray:
        F = self.field
        A = np.zeros(self.shape, dtype=np.int64)
        for j, a in enumerate(self.alphas):
            conj = [F.frobenius(a, t) for t in range(F.m)]
            for r, (x, y) in enumerate(self.exponents):
                A[r, j] = F.mul(conj[x], conj[y])
        return A

    def exponent_values(self) -> list[int]:
        q = self.field.q
        return [q ** a + q ** b for a, b in self.exponents]

    def expanded(self):
        """The equivalent system over ``F_q``: every equation split into
        its ``m`` natural coordinates."""
        F = self.field
        A = self.matrix
        rows, R = A.shape
        m = F.m
        E = np.zeros((rows * m, R), dtype=np.int64)
        e = np.zeros(rows * m, dtype=np.int64)
        for r in range(rows):
            for j in range(R):
                E[r * m:(r + 1) * m, j] = F.natural_coords(int(A[r, j]))
            e[r * m:(r + 1) * m] = F.natural_coords(self.rhs[r])
        return E, e


def _check_alphas(alphas):
    if any(int(a) == 0 for a in alphas):
        raise ZeroAlpha("every alpha must be nonzero")


def build_sigma(field: GF, alphas, xi: int, i: int) -> ConstrainedSystem:
    _check_alphas(alphas)
    rhs = [0] * field.m
    rhs[0] = field.pow(xi, i)
    return ConstrainedSystem(field, tuple(int(a) for a in alphas),
                             tuple(sigma_rows(field.m)), tuple(rhs), i)


def build_sigma_star(field: GF, alphas, xi: int, i: int) -> ConstrainedSystem:
    _check_alphas(alphas)
    rows = sigma_star_rows(field.m)
    xi_i = field.pow(xi, i)
    rhs = [field.frobenius(xi_i, a) if a == b else 0 for a, b in rows]
    return ConstrainedSystem(field, tuple(int(a) for a in alphas),
                             tuple(rows), tuple(rhs), i)


def solve_fq_constrained(sys: ConstrainedSystem):
    """An ``F_q`` solution (free variables zero) or ``None``."""
    E, e = sys.expanded()
    if E.shape[1] == 0:
        return np.zeros(0, dtype=np.int64) if not np.any(e) else None
    return linalg.solve(sys.field.subfield, E, e)


def frobenius_unique_criterion(sys_star: ConstrainedSystem):
    """Solve a square Frobenius-stable system over ``F_{q^m}``.

    Returns ``None`` when the matrix is singular.  A nonsingular system has
    a unique solution which must be fixed by the Frobenius, hence in
    ``F_q``; anything else is a construction bug.
    """
    rows, cols = sys_star.shape
    if rows != cols:
        raise ValueError(f"criterion needs a square system, got {rows}x{cols}")
    F = sys_star.field
    A = sys_star.matrix
    if linalg.rank(F, A) < cols:
        return None
    x = linalg.solve(F, A, np.array(sys_star.rhs, dtype=np.int64))
    if x is None or np.any(x >= F.q):
        raise SolutionNotInBase(
            f"solution {[F.format(int(v)) for v in x]} not in F_{F.q}")
    return x


def certificate_from_alphas(field: GF, xi: int, alphas, star: bool = False,
                            meta: dict | None = None) -> Certificate | None:
    """Solve ``Sigma_i`` (or ``Sigma_i*``) for every ``i``; ``None`` if any
    fails."""
    build = build_sigma_star if star else build_sigma
    rows = []
    for i in range(field.m):
        x = solve_fq_constrained(build(field, alphas, xi, i))
        if x is None:
            return None
        rows.append(x)
    X = np.array(rows, dtype=np.int64).reshape(field.m, len(alphas))
    return Certificate(field, xi, [int(a) for a in alphas], [1] * len(alphas),
                       X, dict(meta or {}))


def _verified(cert: Certificate) -> Certificate:
    bad = first_failure(cert)
    if bad is not None:
        raise InvalidCertificate(f"certificate fails at generator {bad}")
    return cert


# -- m = 1, 2 ----------------------------------------------------------------

def m1_construct(field: GF) -> Certificate:
    """``m = 1``: ``x = 1 * Tr(1 * x)``."""
    if field.m != 1:
        raise ValueError("field must have m = 1")
    cert = Certificate(field, 1, [1], [1], np.array([[1]], dtype=np.int64),
                       {"construction": "m=1"})
    return _verified(cert)


def m2_condition(field: GF, eta: int) -> int:
    """``eta^(2q) - eta^(2q-1) - eta^(q+1) + eta^(q-1) + eta - 1``."""
    if eta == 0:
        raise ZeroEta("eta must be nonzero")
    F, q = field, field.q
    terms = [F.pow(eta, 2 * q), F.neg(F.pow(eta, 2 * q - 1)),
             F.neg(F.pow(eta, q + 1)), F.pow(eta, q - 1), eta, F.neg(1)]
    return F.sum(terms)


def m2_det(field: GF, eta: int) -> int:
    """Determinant of the 3x3 matrix with rows ``eta^(e (0, 1, 2))`` for
    ``e = 2, 2q, q+1``.

    It is a Vandermonde determinant, so it vanishes exactly when
    ``eta^(q-1)`` is ``1`` or ``-1``.  The polynomial condition above can be
    nonzero while this vanishes (``eta^2`` in ``F_q`` for odd ``q``).
    """
    if eta == 0:
        raise ZeroEta("eta must be nonzero")
    alphas = [1, eta, field.mul(eta, eta)]
    return linalg.det(field, build_sigma_star(field, alphas, 1, 0).matrix)


def m2_construct(field: GF | None = None, q: int | None = None,
                 check_criterion: bool = True) -> Certificate:
    """Three-term decomposition ``{Tr(x), eta Tr(eta x), eta^2 Tr(eta^2 x)}``
    with the first admissible ``eta`` outside ``F_q``."""
    if field is None:
        field = default_field(q, 2)
    F = field
    if F.m != 2:
        raise ValueError("field must have m = 2")
    xi = F.generator
    for eta in range(F.q, F.order):
        if m2_condition(F, eta) != 0 and m2_det(F, eta) != 0:
            break
    else:  # pragma: no cover - existence is a theorem
        raise AssertionError("no admissible eta")
    alphas = [1, eta, F.mul(eta, eta)]
    cert = certificate_from_alphas(F, xi, alphas,
                                   meta={"construction": "m=2", "eta": F.format(eta)})
    if check_criterion:
        _cross_check(F, xi, alphas, cert)
    return _verified(cert)


def _cross_check(F, xi, alphas, cert):
    for i in range(F.m):
        x = frobenius_unique_criterion(build_sigma_star(F, alphas, xi, i))
        if x is None or not np.array_equal(x, cert.coefficients[i]):
            raise AssertionError(f"solver disagreement at i={i}")


# -- m = 3 -------------------------------------------------------------------

M3_ROWS = ((0, 0), (1, 1), (2, 2), (1, 0), (2, 1), (2, 0))


def m3_matrix(field: GF, alphas) -> np.ndarray:
    _check_alphas(alphas)
    if len(alphas) != 6:
        raise ValueError("need six alphas")
    return ConstrainedSystem(field, tuple(alphas), M3_ROWS, (0,) * 6, 0).matrix


def m3_det(field: GF, alphas) -> int:
    """Determinant of the 6x6 matrix with row exponents
    ``2, 2q, 2q^2, q+1, q^2+q, q^2+1``."""
    return linalg.det(field, m3_matrix(field, alphas))


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over ``F_q``, constant term first."""

    field: GF
    coeffs: tuple = dc_field(default=())

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def evaluate(self, x: int, ext: GF | None = None) -> int:
        """Value at ``x``; ``ext`` is the field ``x`` lives in (coefficients
        are embedded as subfield codes)."""
        F = ext or self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def leading_term(self) -> str:
        if not self.coeffs:
            return "0"
        c = self.field.format(self.leading)
        return f"{'' if self.leading == 1 else c}T^{self.degree}"


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def m3_fT(q: int, field: GF | None = None) -> UniPoly:
    """The determinant with entries ``(T^c)^(e_r)`` as a polynomial in T.

    Every entry is a monomial, so the determinant is the signed sum of the
    720 permutation products, collected by exponent over the integers and
    then reduced into ``F_p``.
    """
    K = field or prime_power_field(q)
    if K.order != q:
        raise ValueError("coefficient field must have order q")
    exps = [q ** a + q ** b for a, b in M3_ROWS]
    acc: dict[int, int] = {}
    for perm in itertools.permutations(range(6)):
        e = sum(perm[r] * exps[r] for r in range(6))
        acc[e] = acc.get(e, 0) + _perm_sign(perm)
    deg = max(acc)
    coeffs = [0] * (deg + 1)
    for e, c in acc.items():
        coeffs[e] = c % K.p  # integer coefficients land in F_p
    return UniPoly(K, coeffs)


def reduce_mod_field_poly(P: UniPoly, q: int, m: int) -> UniPoly:
    """Reduce modulo ``T^(q^m) - T``: ``T^e -> T^(((e-1) mod (q^m-1)) + 1)``
    for ``e >= 1``; the constant term is untouched."""
    K = P.field
    n1 = q ** m - 1
    top = min(P.degree, n1) if P.coeffs else 0
    out = [0] * (top + 1)
    for e, c in P.terms():
        k = e if e == 0 else (e - 1) % n1 + 1
        out[k] = K.add(out[k], c)
    return UniPoly(K, out)


def m3_construct(field: GF | None = None, q: int | None = None,
                 check_criterion: bool = True) -> Certificate:
    """Six-term decomposition ``{xi^i Tr(xi^i x) : i < 6}`` for the first
    ``xi`` outside ``F_q`` that is not a root of the determinant."""
    if field is None:
        field = default_field(q, 3)
    F = field
    if F.m != 3:
        raise ValueError("field must have m = 3")
    for xi in range(F.q, F.order):
        alphas = [F.pow(xi, i) for i in range(6)]
        if m3_det(F, alphas) != 0:
            break
    else:  # pragma: no cover - existence is a theorem
        raise AssertionError("every xi is a root")
    cert = certificate_from_alphas(F, xi, alphas,
                                   meta={"construction": "m=3", "xi": F.format(xi)})
    if check_criterion:
        _cross_check(F, xi, alphas, cert)
    return _verified(cert)


# -- m = 4 -------------------------------------------------------------------

def table4_field(q: int) -> GF:
    if q not in TABLE4:
        raise UnsupportedQ(f"no tabulated m=4 data for q={q}")
    row = TABLE4[q]
    return GF(row.p, [list(s) for s in row.tower])


def m4_construct_from_table(q: int) -> Certificate:
    """Tabulated ``m = 4`` decomposition: ``alpha_j = xi^(i_j)`` with ``xi``
    the root of the tabulated minimal polynomial, solved through the
    10-row Frobenius-closed systems.

    Raises :class:`InvalidCertificate` when the tabulated exponents do not
    solve every system (the ``q = 4`` row).
    """
    if q not in TABLE4:
        raise UnsupportedQ(f"no tabulated m=4 data for q={q}")
    return m4_construct_from_exponents(q, TABLE4[q].exponents, "m=4 table")


def m4_construct_from_exponents(q: int, exponents, label: str = "m=4") -> Certificate:
    F = table4_field(q)
    xi = F.step_root
    alphas = [F.pow(xi, e) for e in exponents]
    cert = certificate_from_alphas(
        F, xi, alphas, star=True,
        meta={"construction": label, "exponents": [int(e) for e in exponents]})
    if cert is None:
        raise InvalidCertificate(
            f"exponents {list(exponents)} for q={q} do not solve all four systems")
    return _verified(cert)


def m4_construct(q: int) -> Certificate:
    """Best available ``m = 4`` certificate: the tabulated row, or the
    search-derived exponent set where the tabulated one is invalid."""
    if q in M4_SEARCHED:
        return m4_construct_from_exponents(q, M4_SEARCHED[q], "m=4 search")
    return m4_construct_from_table(q)


def construct(q: int, m: int) -> Certificate:
    """Closed-form construction for ``m <= 3``; ``m = 4`` for ``q`` in 2..5."""
    if m == 1:
        return m1_construct(default_field(q, 1))
    if m == 2:
        return m2_construct(q=q)
    if m == 3:
        return m3_construct(q=q)
    if m == 4:
        return m4_construct(q)
    raise UnsupportedQ(f"no closed-form construction for m={m}; use search")


# -- search ------------------------------------------------------------------

STRATEGIES = ("powers", "random", "exhaustive")


@dataclass
class SearchResult:
    status: str  # "found" | "exhausted" | "budget"
    certificate: Certificate | None
    examined: int
    index: int | None = None  # stream index of the successful candidate

    @property
    def found(self):
        return self.status == "found"


class _Checker:
    """Per-class coefficient columns of ``Sigma_i`` expanded over ``F_q``;
    a candidate is a tuple of class indices."""

    def __init__(self, field: GF, xi: int, alphas):
        F = field
        self.K = F.subfield
        self.alphas = list(alphas)
        m = F.m
        cols = np.zeros((len(alphas), m * m), dtype=np.int64)
        for c, a in enumerate(alphas):
            for k in range(m):
                v = F.mul(F.frobenius(a, k), a)
                cols[c, k * m:(k + 1) * m] = F.natural_coords(v)
        self.cols = cols
        B = np.zeros((m * m, m), dtype=np.int64)
        for i in range(m):
            B[:m, i] = F.natural_coords(F.pow(xi, i))
        self.rhs = B

    def check(self, cand):
        A = self.cols[list(cand)].T
        sols = linalg.solve_many(self.K, A, self.rhs)
        if any(s is None for s in sols):
            return None
        return np.array(sols, dtype=np.int64)

    def first_hit(self, block):
        """``(offset, candidate, X)`` of the first success in ``block``."""
        for off, cand in enumerate(block):
            X = self.check(cand)
            if X is not None:
                return off, cand, X
        return None


def _run_block(args):
    checker, block = args
    return checker.first_hit(block)


def _candidate_stream(strategy, n, R, seed, seed_candidates):
    if strategy == "random":
        rng = np.random.default_rng(seed)
        while True:
            yield tuple(sorted(int(v) for v in rng.choice(n, R, replace=False)))
    for c in seed_candidates:
        yield tuple(c)
    yield from itertools.combinations(range(n), R)


def search(q: int, m: int, R: int, strategy: str = "exhaustive",
           budget: int | None = None, seed: int = 0, workers: int = 1,
           field: GF | None = None, seed_exponents=None,
           chunk: int = 256) -> SearchResult:
    """Look for ``R`` rank-one symmetric polynomials covering ``<x>``.

    Candidates are ``R``-sets of ``F_q^*``-classes of ``alpha`` (scaling
    ``alpha`` only rescales ``alpha Tr(alpha x)`` by a base scalar).

    * ``exhaustive``: all ``R``-subsets of class representatives in
      enumeration order; a full sweep is a definitive "no".
    * ``powers``: classes are exponents ``e`` of the primitive element
      modulo ``(q^m-1)/(q-1)``; ``seed_exponents`` are tried first.
    * ``random``: uniformly random ``R``-subsets from ``seed``; needs a
      budget.

    The first success in stream order is returned regardless of
    ``workers``.  ``budget`` bounds the number of candidates examined.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "random" and budget is None:
        raise ValueError("random strategy needs a budget")
    F = field or default_field(q, m)
    xi = F.generator
    n_cls = (F.order - 1) // (F.q - 1)
    seeds = []
    if strategy == "powers":
        g = F.primitive
        alphas = [F.pow(g, e) for e in range(n_cls)]
        for cand in [seed_exponents] if seed_exponents else []:
            if len(cand) == R:
                seeds.append(tuple(sorted(int(e) % n_cls for e in cand)))
    else:
        alphas = projective_classes(F)
    R_eff = min(R, n_cls)
    checker = _Checker(F, xi, alphas)
    stream = _candidate_stream(strategy, n_cls, R_eff, seed, seeds)
    if budget is not None:
        stream = itertools.islice(stream, budget)

    def blocks():
        while True:
            block = list(itertools.islice(stream, chunk))
            if not block:
                return
            yield block

    examined = 0
    hit = None
    if workers <= 1:
        for block in blocks():
            res = checker.first_hit(block)
            if res is not None:
                hit = (examined + res[0], res[1], res[2])
                break
            examined += len(block)
    else:
        hit, examined = _parallel_search(checker, blocks(), workers)

    if hit is not None:
        idx, cand, X = hit
        chosen = [alphas[c] for c in cand]
        cert = Certificate(F, xi, chosen, [1] * len(chosen), X,
                           {"construction": f"search/{strategy}", "index": idx,
                            "R": R})
        _verified(cert)
        return SearchResult("found", cert, idx + 1, idx)
    swept = math.comb(n_cls, R_eff) + len(seeds)
    if strategy != "random" and examined >= swept:
        return SearchResult("exhausted", None, examined)
    return SearchResult("budget", None, examined)


def _parallel_search(checker, blocks, workers):
    examined = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = []
        it = iter(blocks)
        done = False
        while True:
            while not done and len(pending) < 2 * workers:
                try:
                    block = next(it)
                except StopIteration:
                    done = True
                    break
                pending.append((len(block), pool.submit(_run_block, (checker, block))))
            if not pending:
                return None, examined
            size, fut = pending.pop(0)
            res = fut.result()
            if res is not None:
                for _, f in pending:
                    f.cancel()
                return (examined + res[0], res[1], res[2]), examined + res[0] + 1
            examined += size
