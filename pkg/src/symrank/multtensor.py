"""First-slice space of the multiplication tensor of ``F_{q^m}`` over ``F_q``.

The tensor itself is never built.  Its first slice spans the same space as
the Gram matrices of ``xi^i x`` (``i < m``), i.e. the one-dimensional
Gabidulin code ``<x>`` over ``F_{q^m}``, and a symmetric decomposition of
length ``R`` is a set of ``R`` rank-one symmetric matrices whose span
contains it.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import CapExceeded, DegenerateGenerator, NotRankOne, NotSymmetric
from .field import GF, OrderedBasis, trace_dual_basis
from .linpoly import LinPoly, rank_one_symmetric, to_gram

KRUSKAL_CAP = 1 << 20


@dataclass
class SliceSpace:
    field: GF
    basis: OrderedBasis
    dual: OrderedBasis
    xi: int
    generators: list  # m Gram matrices over F_q

    @property
    def m(self):
        return self.field.m

    def flat(self) -> np.ndarray:
        return np.array([G.ravel() for G in self.generators], dtype=np.int64)

    def dimension(self) -> int:
        return linalg.rank(self.field.subfield, self.flat())


def slice_space(field: GF, basis: OrderedBasis | None = None,
                xi: int | None = None) -> SliceSpace:
    """Generators ``to_gram(xi^i x, B)`` for ``i = 0..m-1``."""
    if basis is None:
        basis = OrderedBasis.natural(field)
    if xi is None:
        xi = field.generator
    if field.degree_over_base(xi) != field.m:
        raise DegenerateGenerator(
            f"{field.format(xi)} has degree {field.degree_over_base(xi)} < {field.m}")
    dual = trace_dual_basis(basis)
    gens = [to_gram(LinPoly.monomial(field, field.pow(xi, i)), basis, dual)
            for i in range(field.m)]
    return SliceSpace(field, basis, dual, xi, gens)


@dataclass(frozen=True)
class KruskalBound:
    value: int
    dimension: int
    min_rank: int
    enumerated: bool  # False: min rank taken as m analytically (beyond cap)


def kruskal_bound(s: SliceSpace, cap: int = KRUSKAL_CAP) -> KruskalBound:
    """``dim span + min nonzero rank - 1`` over the slice span.

    The minimum rank is found by enumerating all ``q^k - 1`` nonzero
    combinations when ``q^k <= cap``.  Beyond the cap the analytic value
    ``m`` is used (every nonzero ``a x`` is invertible) and the result is
    flagged as not enumerated.
    """
    K = s.field.subfield
    dim = s.dimension()
    total = K.order ** dim
    if total > cap:
        return KruskalBound(dim + s.m - 1, dim, s.m, False)
    mr = min_rank_of_span(K, s.generators, cap=cap)
    return KruskalBound(dim + mr - 1, dim, mr, True)


def span_elements(K, mats, cap: int = KRUSKAL_CAP, chunk: int = 1 << 14):
    """Yield blocks of nonzero ``F_q``-combinations of ``mats`` (first
    ``len(mats)`` coordinates enumerated base-``q``, zero skipped)."""
    mats = np.asarray(mats, dtype=np.int64)
    k = mats.shape[0]
    q = K.order
    total = q ** k
    if total > cap:
        raise CapExceeded(f"{total} span elements exceed cap {cap}")
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coef = (idx[:, None] // (q ** np.arange(k))[None, :]) % q
        acc = np.zeros((len(idx),) + mats.shape[1:], dtype=np.int64)
        for t in range(k):
            c = coef[:, t].reshape((-1,) + (1,) * (mats.ndim - 1))
            acc = K.vadd(acc, K.vmul(c, mats[t][None]))
        yield coef, acc


def min_rank_of_span(K, mats, cap: int = KRUSKAL_CAP) -> int:
    best = None
    for _, block in span_elements(K, mats, cap=cap):
        ranks = linalg.batch_rank(K, block)
        ranks = ranks[ranks > 0]
        if ranks.size:
            r = int(ranks.min())
            best = r if best is None else min(best, r)
    if best is None:
        raise ValueError("span has no nonzero element")
    return best


def is_symmetric_matrix(M) -> bool:
    M = np.asarray(M)
    return M.shape[0] == M.shape[1] and bool(np.all(M == M.T))


def express_in_span(K, targets, spanning):
    """Coefficient matrix ``X`` with ``targets[i] = sum_j X[i, j]
    spanning[j]`` over ``K``, or ``None`` if some target is outside the
    span.  Free coefficients are set to zero."""
    targets = [np.asarray(T, dtype=np.int64).ravel() for T in targets]
    R = len(spanning)
    if R == 0:
        if all(not np.any(t) for t in targets):
            return np.zeros((len(targets), 0), dtype=np.int64)
        return None
    A = np.array([np.asarray(S, dtype=np.int64).ravel() for S in spanning]).T
    B = np.array(targets, dtype=np.int64).T
    sols = linalg.solve_many(K, A, B)
    if any(x is None for x in sols):
        return None
    return np.array(sols, dtype=np.int64)


def verify_spanning(s: SliceSpace, rank_ones, symmetric: bool = True):
    """Check ``span(s) <= span(rank_ones)``.

    Every supplied matrix must have rank one (and be symmetric unless
    ``symmetric=False``, the unconstrained variant).  Returns the
    ``m x R`` coefficient matrix, or ``None`` if the span is not covered.
    """
    K = s.field.subfield
    for j, A in enumerate(rank_ones):
        A = np.asarray(A)
        if symmetric and not is_symmetric_matrix(A):
            raise NotSymmetric(j)
        if linalg.rank(K, A) != 1:
            raise NotRankOne(j)
    return express_in_span(K, s.generators, list(rank_ones))


# -- certificates ------------------------------------------------------------

@dataclass
class Certificate:
    """``xi^i x = sum_j X[i, j] c_j alpha_j Tr(alpha_j x)`` for ``i < m``."""

    field: GF
    xi: int
    alphas: list
    scalars: list
    coefficients: np.ndarray  # m x R over F_q
    meta: dict = dc_field(default_factory=dict)

    @property
    def R(self) -> int:
        return len(self.alphas)

    @property
    def m(self) -> int:
        return self.field.m

    def rank_ones(self) -> list[LinPoly]:
        return [rank_one_symmetric(a, c, self.field)
                for a, c in zip(self.alphas, self.scalars)]

    def grams(self, basis: OrderedBasis | None = None) -> list[np.ndarray]:
        if basis is None:
            basis = OrderedBasis.natural(self.field)
        dual = trace_dual_basis(basis)
        return [to_gram(f, basis, dual) for f in self.rank_ones()]

    def to_dict(self) -> dict:
        F = self.field
        K = F.subfield
        return {
            "field": F.spec(),
            "q": F.q,
            "m": F.m,
            "R": self.R,
            "xi": F.format(self.xi),
            "alphas": [F.format(a) for a in self.alphas],
            "scalars": [K.format(c) for c in self.scalars],
            "coefficients": [[K.format(int(x)) for x in row]
                             for row in np.asarray(self.coefficients)],
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        F = GF.from_spec(data["field"])
        K = F.subfield
        coeffs = np.array([[K.parse(x) for x in row] for row in data["coefficients"]],
                          dtype=np.int64).reshape(len(data["coefficients"]), -1)
        return cls(F, F.parse(data["xi"]),
                   [F.parse(a) for a in data["alphas"]],
                   [K.parse(c) for c in data["scalars"]],
                   coeffs, dict(data.get("meta", {})))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def first_failure(cert: Certificate) -> int | None:
    """Index of the first generator ``xi^i x`` whose stored identity fails
    (``-1`` for a structural defect), or ``None`` when all hold."""
    F = cert.field
    X = np.asarray(cert.coefficients, dtype=np.int64)
    if X.shape != (F.m, cert.R) or len(cert.scalars) != cert.R:
        return -1
    if any(a == 0 for a in cert.alphas):
        return -1
    if any(c == 0 or not F.in_base(c) for c in cert.scalars):
        return -1
    if np.any((X < 0) | (X >= F.q)):
        return -1
    if cert.xi == 0 or F.degree_over_base(cert.xi) != F.m:
        return -1
    polys = cert.rank_ones()
    for i in range(F.m):
        acc = [0] * F.m
        for j, f in enumerate(polys):
            x = int(X[i, j])
            if x:
                acc = [F.add(s, F.mul(x, a)) for s, a in zip(acc, f.coeffs)]
        target = [0] * F.m
        target[0] = F.pow(cert.xi, i)
        if acc != target:
            return i
    return None


def verify_certificate(cert: Certificate) -> bool:
    return first_failure(cert) is None


def certificate_slice_check(cert: Certificate, basis: OrderedBasis | None = None):
    """Matrix-model cross-check: the Gram matrices of the certificate's
    rank-one polynomials cover the slice space built from ``cert.xi``."""
    s = slice_space(cert.field, basis, cert.xi)
    return verify_spanning(s, cert.grams(s.basis))


def min_cover_size(K, targets, candidates, rmax: int):
    """Smallest ``R <= rmax`` such that some ``R``-subset of ``candidates``
    spans all ``targets``; ``None`` if none.  Plain enumeration, used as a
    brute-force oracle on tiny instances."""
    for R in range(0, rmax + 1):
        for sub in itertools.combinations(range(len(candidates)), R):
            if express_in_span(K, targets, [candidates[j] for j in sub]) is not None:
                return R
    return None
