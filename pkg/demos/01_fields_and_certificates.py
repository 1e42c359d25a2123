"""
Fields, linearized polynomials and certificates
===============================================

Elements of F_{q^m} are small ints.  A linearized polynomial is a row of
m coefficients, and in a fixed basis it becomes an m x m matrix over F_q.
"""

import numpy as np

from symrank.field import OrderedBasis, default_field, trace_dual_basis
from symrank.linpoly import LinPoly, adjoint, is_symmetric, rank, to_gram
from symrank.multtensor import verify_certificate
from symrank.decomp import m2_construct

# the field with 16 elements, built as F_2[x]/(pinned quartic)
F = default_field(2, 4)
print(F.spec(), "order", F.order)

# x^2 + x^4 as a map F_16 -> F_16
f = LinPoly(F, [0, 1, 1, 0])
print("rank", rank(f), "symmetric", is_symmetric(f))

# f and its adjoint agree under the trace form
g = adjoint(f)
print("adjoint coefficients", g.coeffs)

# x -> b x^q + (b x)^(q^(m-1)) is symmetric for every b
h = LinPoly(F, [0, 3, 0, F.frobenius(3, 3)])
B = OrderedBasis.natural(F)
G = to_gram(h, B, trace_dual_basis(B))
print("symmetric gram:", np.array_equal(G, G.T))
print(G)

# a rank-3 certificate for multiplication in F_{q^2}, checked slice by slice
cert = m2_construct(q=5)
print("R =", cert.R, "valid:", verify_certificate(cert))
