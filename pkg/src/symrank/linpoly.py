"""Linearized polynomials ``sum_i a_i x^(q^i)`` over ``F_{q^m}``.

A :class:`LinPoly` is an ``F_q``-linear endomorphism of ``F_{q^m}``.  The
symmetric ones (equal to their trace adjoint) correspond to symmetric
bilinear forms and, after fixing a basis ``B`` and its trace-dual ``B*``,
to symmetric matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import CapExceeded, ScalarNotInBase, ZeroArgument
from .field import DEFAULT_CAP, GF, OrderedBasis, trace_dual_basis


@dataclass(frozen=True)
class LinPoly:
    field: GF
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.field.m:
            raise ValueError(f"expected {self.field.m} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, (0,) * field.m)

    @classmethod
    def monomial(cls, field, a: int, i: int = 0):
        """``a x^(q^i)``."""
        c = [0] * field.m
        c[i % field.m] = a
        return cls(field, c)

    @classmethod
    def trace_poly(cls, field):
        return cls(field, (1,) * field.m)

    @property
    def m(self):
        return self.field.m

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __add__(self, other):
        F = self.field
        return LinPoly(F, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        F = self.field
        return LinPoly(F, [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return LinPoly(self.field, [self.field.neg(a) for a in self.coeffs])

    def scale(self, c: int) -> "LinPoly":
        """Left multiplication by ``c`` in ``F_{q^m}``: ``c f(x)``."""
        F = self.field
        return LinPoly(F, [F.mul(c, a) for a in self.coeffs])

    def __matmul__(self, other):
        return compose(self, other)

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        return format_linpoly(self)


def evaluate(f: LinPoly, x: int) -> int:
    F = f.field
    if x == 0:
        return 0
    out = 0
    for i, a in enumerate(f.coeffs):
        if a:
            out = F.add(out, F.mul(a, F.frobenius(x, i)))
    return out


def compose(f: LinPoly, g: LinPoly) -> LinPoly:
    """``f(g(x))``: coefficient of ``x^(q^(i+j))`` gains ``a_i b_j^(q^i)``."""
    F, m = f.field, f.m
    out = [0] * m
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                k = (i + j) % m
                out[k] = F.add(out[k], F.mul(a, F.frobenius(b, i)))
    return LinPoly(F, out)


def adjoint(f: LinPoly) -> LinPoly:
    """Adjoint for the trace form: ``a_0 x + sum_i a_i^(q^(m-i)) x^(q^(m-i))``."""
    F, m = f.field, f.m
    out = [0] * m
    out[0] = f.coeffs[0]
    for i in range(1, m):
        out[m - i] = F.frobenius(f.coeffs[i], m - i)
    return LinPoly(F, out)


def is_symmetric(f: LinPoly) -> bool:
    return adjoint(f) == f


def map_matrix(f: LinPoly) -> np.ndarray:
    """Matrix of ``x -> f(x)`` over ``F_q`` in the natural basis
    (column ``j`` = image of the ``j``-th basis vector)."""
    F = f.field
    cols = [F.natural_coords(f(e)) for e in F.natural_basis()]
    return np.array(cols, dtype=np.int64).T


def rank(f: LinPoly) -> int:
    return linalg.rank(f.field.subfield, map_matrix(f))


def kernel_dimension(f: LinPoly) -> int:
    return f.m - rank(f)


def rank_one_symmetric(alpha: int, c: int, field: GF) -> LinPoly:
    """``c alpha Tr(alpha x)``; coefficient ``i`` is ``c alpha alpha^(q^i)``."""
    if alpha == 0 or c == 0:
        raise ZeroArgument("alpha and c must be nonzero")
    if not field.in_base(c):
        raise ScalarNotInBase(f"{field.format(c)} is not in F_{field.q}")
    ca = field.mul(c, alpha)
    return LinPoly(field, [field.mul(ca, field.frobenius(alpha, i))
                           for i in range(field.m)])


def trace_map(alpha: int, beta: int, field: GF) -> LinPoly:
    """``alpha Tr(beta x)``, not necessarily symmetric."""
    return LinPoly(field, [field.mul(alpha, field.frobenius(beta, i))
                           for i in range(field.m)])


def to_gram(f: LinPoly, basis: OrderedBasis, dual: OrderedBasis | None = None):
    """Matrix of the bilinear form ``Tr(x f(y))`` with entry ``(i, j)``
    equal to ``Tr(b*_i f(b*_j))``: column ``j`` holds the ``B``-coordinates
    of ``f(b*_j)``."""
    if dual is None:
        dual = trace_dual_basis(basis)
    cols = [basis.coords(f(y)) for y in dual.elements]
    return np.array(cols, dtype=np.int64).T


def from_gram(M, basis: OrderedBasis) -> LinPoly:
    """Inverse of :func:`to_gram`.

    With ``y_j = sum_i M[i, j] b_i = f(b*_j)`` one has
    ``f(x) = sum_j y_j Tr(b_j x)``.
    """
    F = basis.field
    M = np.asarray(M, dtype=np.int64)
    ys = [basis.combine(M[:, j]) for j in range(F.m)]
    out = [0] * F.m
    for y, b in zip(ys, basis.elements):
        if y:
            for k in range(F.m):
                out[k] = F.add(out[k], F.mul(y, F.frobenius(b, k)))
    return LinPoly(F, out)


def all_linpolys(field: GF, cap: int = DEFAULT_CAP):
    total = field.order ** field.m
    if total > cap:
        raise CapExceeded(f"{total} linearized polynomials exceed cap {cap}")
    N, m = field.order, field.m
    for t in range(total):
        yield LinPoly(field, [(t // N ** i) % N for i in range(m)])


def enumerate_rank_one_symmetric(field: GF, cap: int = DEFAULT_CAP):
    """Yield every rank-one symmetric polynomial ``c alpha Tr(alpha x)``
    exactly once, in order of first appearance over ``(alpha, c)``."""
    if field.order * (field.q - 1) > cap:
        raise CapExceeded(f"F_{field.order} exceeds the enumeration cap {cap}")
    seen = set()
    for alpha in field.nonzero():
        for c in range(1, field.q):
            f = rank_one_symmetric(alpha, c, field)
            if f.coeffs not in seen:
                seen.add(f.coeffs)
                yield f


def projective_classes(field: GF) -> list[int]:
    """One representative ``alpha`` per class ``F_q^* alpha`` (the least
    code in the class), in enumeration order.

    ``alpha Tr(alpha x)`` and ``(lam alpha) Tr(lam alpha x)`` differ by the
    base scalar ``lam^2``, so the classes index rank-one symmetric
    polynomials up to scaling.
    """
    F = field
    seen = bytearray(F.order)
    reps = []
    for a in F.nonzero():
        if seen[a]:
            continue
        reps.append(a)
        for lam in range(1, F.q):
            seen[F.mul(lam, a)] = 1
    return reps


# -- text form -------------------------------------------------------------

def _term_suffix(i):
    if i == 0:
        return "x"
    if i == 1:
        return "x^q"
    return f"x^q{i}"


def format_linpoly(f: LinPoly) -> str:
    F = f.field
    terms = [f"{F.format(a)}*{_term_suffix(i)}"
             for i, a in enumerate(f.coeffs) if a]
    return " + ".join(terms) if terms else "0"


_TERM_RE = re.compile(r"^(.*?)(?:\*x(?:\^q(\d*))?)?$")


def parse_linpoly(text: str, field: GF) -> LinPoly:
    """Inverse of :func:`format_linpoly`; a bare coefficient is the
    ``x`` term."""
    text = text.strip()
    out = [0] * field.m
    if text == "0":
        return LinPoly(field, out)
    for term in _split_terms(text):
        term = term.strip()
        m = _TERM_RE.match(term)
        coeff, exp = m.group(1), m.group(2)
        if term.endswith("*x"):
            i = 0
        elif exp is None:
            i = 0
        else:
            i = int(exp) if exp else 1
        out[i % field.m] = field.add(out[i % field.m], field.parse(coeff))
    return LinPoly(field, out)


def _split_terms(text):
    depth, cur, parts = 0, [], []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def to_json(f: LinPoly) -> list[str]:
    return [f.field.format(a) for a in f.coeffs]


def from_json(data, field: GF) -> LinPoly:
    return LinPoly(field, [field.parse(a) for a in data])
