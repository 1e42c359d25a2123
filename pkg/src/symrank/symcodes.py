"""Symmetric rank-metric codes inside ``Sym_q(m)``.

A code is an ``F_q``-subspace of symmetric ``m x m`` matrices, stored both
as symmetric linearized polynomials and as their Gram matrices in a fixed
basis.  Distances are ranks of nonzero codewords; the symmetric tensor rank
is the least number of rank-one symmetric matrices whose span contains the
code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import (BadCode, BadDistance, CapExceeded, InvalidCertificate,
                     NotSymmetric, OddDefect, SingularP)
from .field import DEFAULT_CAP, GF, OrderedBasis, default_field, trace_dual_basis
from .linpoly import LinPoly, from_gram, is_symmetric, to_gram
from .linpoly import from_json as linpoly_from_json
from .linpoly import to_json as linpoly_to_json
from .multtensor import Certificate, first_failure, span_elements

STRK_BUDGET = 10_000_000


@dataclass(frozen=True)
class CodeParams:
    m: int
    k: int
    d: int


@dataclass
class SymCode:
    """Independent symmetric generators in both models.

    ``polys[j]`` and ``grams[j]`` describe the same bilinear form in
    ``basis`` and its trace dual.
    """

    field: GF
    basis: OrderedBasis
    polys: list
    grams: list

    @property
    def q(self):
        return self.field.q

    @property
    def m(self):
        return self.field.m

    @property
    def k(self) -> int:
        return len(self.grams)

    def flat(self) -> np.ndarray:
        return np.array([G.ravel() for G in self.grams],
                        dtype=np.int64).reshape(self.k, self.m * self.m)

    def stacked(self) -> np.ndarray:
        return np.array(self.grams, dtype=np.int64).reshape(self.k, self.m, self.m)

    @classmethod
    def from_polys(cls, field: GF, polys, basis: OrderedBasis | None = None,
                   drop_dependent: bool = True) -> "SymCode":
        """Code spanned by symmetric polynomials.

        Dependent generators are dropped (or rejected with ``BadCode`` when
        ``drop_dependent`` is false).
        """
        basis = basis or OrderedBasis.natural(field)
        dual = trace_dual_basis(basis)
        ech = linalg.Echelon(field.subfield, field.m ** 2)
        keep_p, keep_g = [], []
        for j, f in enumerate(polys):
            if not is_symmetric(f):
                raise NotSymmetric(j)
            G = to_gram(f, basis, dual)
            if ech.try_add(G.ravel()):
                keep_p.append(f)
                keep_g.append(G)
            elif not drop_dependent:
                raise BadCode(f"generator {j} is dependent on the previous ones")
        return cls(field, basis, keep_p, keep_g)

    @classmethod
    def from_grams(cls, field: GF, mats, basis: OrderedBasis | None = None,
                   drop_dependent: bool = True) -> "SymCode":
        basis = basis or OrderedBasis.natural(field)
        polys = []
        for j, M in enumerate(mats):
            M = np.asarray(M, dtype=np.int64)
            if not np.array_equal(M, M.T):
                raise NotSymmetric(j)
            polys.append(from_gram(M, basis))
        return cls.from_polys(field, polys, basis, drop_dependent)

    def params(self, cap: int = DEFAULT_CAP) -> CodeParams:
        return CodeParams(self.m, self.k, min_distance(self, cap))

    def contains(self, M) -> bool:
        return _in_span(self.field.subfield, self.flat(), np.asarray(M).ravel())

    # -- JSON ------------------------------------------------------------

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.spec(),
            "basis": [F.format(b) for b in self.basis.elements],
            "generators": [linpoly_to_json(f) for f in self.polys],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "SymCode":
        F = GF.from_spec(data["field"])
        basis = None
        if data.get("basis"):
            basis = OrderedBasis(F, [F.parse(b) for b in data["basis"]])
        polys = [linpoly_from_json(g, F) for g in data["generators"]]
        return cls.from_polys(F, polys, basis)

    @classmethod
    def from_json(cls, text: str) -> "SymCode":
        return cls.from_dict(json.loads(text))


def _in_span(K, rows, v) -> bool:
    if rows.shape[0] == 0:
        return not np.any(v)
    return linalg.solve(K, rows.T, v) is not None


def singleton_bound(m: int, d: int) -> int:
    """Largest ``F_q``-dimension of a symmetric code with minimum distance
    ``d``."""
    if not 1 <= d <= m:
        raise BadDistance(f"need 1 <= d <= m, got d={d}, m={m}")
    if (m - d) % 2 == 0:
        return m * (m - d + 2) // 2
    return (m + 1) * (m - d + 1) // 2


def sqmd_generators(field: GF, d: int) -> list[LinPoly]:
    """``b x`` and ``b x^(q^j) + (b x)^(q^(m-j))`` for ``1 <= j <= (m-d)/2``,
    with ``b`` running over the natural basis."""
    F, m = field, field.m
    out = []
    for b in F.natural_basis():
        out.append(LinPoly.monomial(F, b, 0))
    for j in range(1, (m - d) // 2 + 1):
        for b in F.natural_basis():
            c = [0] * m
            c[j] = F.add(c[j], b)
            c[m - j] = F.add(c[m - j], F.frobenius(b, m - j))
            out.append(LinPoly(F, c))
    return out


def build_sqmd(q: int, m: int, d: int, field: GF | None = None,
               basis: OrderedBasis | None = None) -> SymCode:
    """The symmetric MRD code ``S_{q,m,d}`` (``m - d`` even)."""
    if not 1 <= d <= m:
        raise BadDistance(f"need 1 <= d <= m, got d={d}, m={m}")
    if (m - d) % 2:
        raise OddDefect(
            f"m - d = {m - d} is odd; only the even-defect construction is built")
    F = field or default_field(q, m)
    return SymCode.from_polys(F, sqmd_generators(F, d), basis, drop_dependent=False)


def gabidulin_code(field: GF, basis: OrderedBasis | None = None) -> SymCode:
    """``<x>`` over ``F_{q^m}``, i.e. ``S_{q,m,m}``."""
    return build_sqmd(field.q, field.m, field.m, field, basis)


def min_distance(code: SymCode, cap: int = DEFAULT_CAP) -> int:
    """Minimum rank over all nonzero codewords, by enumeration."""
    if code.k == 0:
        raise BadCode("a zero-dimensional code has no nonzero words")
    K = code.field.subfield
    total = K.order ** code.k
    if total > cap:
        raise CapExceeded(f"{total} codewords exceed cap {cap}")
    best = code.m
    for _, block in span_elements(K, code.stacked(), cap=cap):
        best = min(best, int(linalg.batch_rank(K, block).min()))
        if best == 1:
            break
    return best


def is_mrd(code: SymCode, cap: int = DEFAULT_CAP) -> bool:
    return code.k == singleton_bound(code.m, min_distance(code, cap))


def congruence_transform(code: SymCode, P) -> SymCode:
    """Apply ``A -> P^T A P`` to every generator."""
    K = code.field.subfield
    P = np.asarray(P, dtype=np.int64)
    if P.shape != (code.m, code.m) or linalg.rank(K, P) < code.m:
        raise SingularP("P must be an invertible m x m matrix over F_q")
    mats = [congruent(K, G, P) for G in code.grams]
    return SymCode.from_grams(code.field, mats, code.basis, drop_dependent=False)


def congruent(K, A, P) -> np.ndarray:
    return linalg.matmul(K, linalg.matmul(K, np.asarray(P).T, A), P)


# -- symmetric tensor rank ---------------------------------------------------

def projective_points(K, m: int) -> list[np.ndarray]:
    """Nonzero vectors of ``F_q^m`` with first nonzero entry 1, in
    enumeration order."""
    q = K.order
    out = []
    for t in range(1, q ** m):
        v = np.array([(t // q ** i) % q for i in range(m)], dtype=np.int64)
        if v[np.flatnonzero(v)[0]] == 1:
            out.append(v)
    return out


def outer(K, u, w) -> np.ndarray:
    return K.vmul(np.asarray(u)[:, None], np.asarray(w)[None, :])


def rank_one_symmetric_matrices(K, m: int) -> list[np.ndarray]:
    """One ``v v^T`` per scaling class of rank-one symmetric matrices."""
    return [outer(K, v, v) for v in projective_points(K, m)]


def rank_one_matrices(K, m: int) -> list[np.ndarray]:
    """One ``u w^T`` per scaling class of rank-one matrices."""
    pts = projective_points(K, m)
    return [outer(K, u, w) for u in pts for w in pts]


@dataclass
class StrkResult:
    """Outcome of an exact covering search.

    ``value`` is the exact covering number when it is at most ``rmax``.
    Otherwise ``value`` is ``None`` and ``lower`` is the proven lower bound
    (``rmax + 1`` after a complete sweep).  ``indeterminate`` marks a
    budget stop, in which case ``lower`` is only what was proven before
    it.
    """

    value: int | None
    lower: int
    witness: list = dc_field(default_factory=list)
    indeterminate: bool = False
    nodes: int = 0

    @property
    def definitive(self):
        return not self.indeterminate


class _Budget(Exception):
    pass


def cover_search(K, code_rows, candidates, rmax: int, budget: int = STRK_BUDGET,
                 rmin: int = 0) -> StrkResult:
    """Smallest ``R <= rmax`` with ``span(code) <= span`` of some ``R``
    candidates.

    Depth-first over increasing index subsets, one ``R`` at a time.  Only
    independent additions are explored, and a branch is cut once the
    deficit ``dim(S + C) - |S|``, which drops by at most one per added
    matrix, exceeds the remaining slots.
    """
    width = code_rows.shape[1]
    cands = [np.asarray(c, dtype=np.int64).ravel() for c in candidates]
    base_sc = linalg.Echelon(K, width)
    for r in code_rows:
        base_sc.try_add(r)
    k = len(base_sc)
    nodes = 0

    def dfs(start, S, SC, left):
        nonlocal nodes
        deficit = len(SC) - len(S)
        if deficit == 0:
            return []
        if deficit > left:
            return None
        for j in range(start, len(cands) - left + 1 if deficit == left else len(cands)):
            nodes += 1
            if nodes > budget:
                raise _Budget
            v = cands[j]
            S2 = S.copy()
            if not S2.try_add(v):
                continue
            SC2 = SC.copy()
            grew = SC2.try_add(v)
            if deficit == left and grew:
                continue
            got = dfs(j + 1, S2, SC2, left - 1)
            if got is not None:
                return [j] + got
        return None

    lo = max(k, rmin)
    for R in range(lo, rmax + 1):
        try:
            got = dfs(0, linalg.Echelon(K, width), base_sc.copy(), R)
        except _Budget:
            return StrkResult(None, R, [], True, nodes)
        if got is not None:
            return StrkResult(len(got), len(got), got, False, nodes)
    return StrkResult(None, max(lo, rmax + 1), [], False, nodes)


def strk_exact(code: SymCode, rmax: int, budget: int = STRK_BUDGET) -> StrkResult:
    """Symmetric tensor rank of ``code`` if it is at most ``rmax``."""
    K = code.field.subfield
    cands = rank_one_symmetric_matrices(K, code.m)
    res = cover_search(K, code.flat(), cands, rmax, budget)
    res.witness = [cands[j] for j in res.witness]
    return res


def trk(code: SymCode, rmax: int, budget: int = STRK_BUDGET) -> StrkResult:
    """Covering number with arbitrary (not necessarily symmetric) rank-one
    matrices; never exceeds :func:`strk_exact`."""
    K = code.field.subfield
    cands = rank_one_matrices(K, code.m)
    res = cover_search(K, code.flat(), cands, rmax, budget)
    res.witness = [cands[j] for j in res.witness]
    return res


def check_witness(code: SymCode, witness, symmetric: bool = True) -> bool:
    """Every witness matrix is rank one (and symmetric) and their span
    contains the code."""
    K = code.field.subfield
    rows = []
    for A in witness:
        A = np.asarray(A, dtype=np.int64)
        if symmetric and not np.array_equal(A, A.T):
            return False
        if linalg.rank(K, A) != 1:
            return False
        rows.append(A.ravel())
    W = np.array(rows, dtype=np.int64).reshape(len(rows), code.m ** 2)
    return all(_in_span(K, W, r) for r in code.flat())


def strk_upper_from_cert(cert: Certificate) -> int:
    """A valid decomposition certificate bounds ``strk`` of ``<x>`` by its
    length."""
    bad = first_failure(cert)
    if bad is not None:
        raise InvalidCertificate(f"certificate fails at generator {bad}")
    return cert.R


def random_invertible(K, m: int, rng) -> np.ndarray:
    return linalg.random_invertible(K, m, rng)


__all__ = [
    "CodeParams", "SymCode", "StrkResult", "singleton_bound", "sqmd_generators",
    "build_sqmd", "gabidulin_code", "min_distance", "is_mrd",
    "congruence_transform", "congruent", "projective_points",
    "rank_one_symmetric_matrices", "rank_one_matrices", "cover_search",
    "strk_exact", "trk", "check_witness", "strk_upper_from_cert",
    "random_invertible",
]
