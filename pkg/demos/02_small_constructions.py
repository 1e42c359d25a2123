"""
Small-degree constructions
==========================

For m = 2 and m = 3 the rank-one elements come from a single field element
and its Frobenius orbit.  The systems only need to be solvable over F_q.
"""

from symrank.decomp import (build_sigma, m2_construct, m3_construct, m3_fT,
                            reduce_mod_field_poly, solve_fq_constrained)
from symrank.multtensor import verify_certificate
from symrank.reference import known

for q in (2, 3, 4, 5, 7, 9):
    c = m2_construct(q=q)
    print(f"m=2 q={q}: R={c.R} valid={verify_certificate(c)} known={known(q, 2)}")

for q in (2, 3, 4, 5):
    c = m3_construct(q=q)
    print(f"m=3 q={q}: R={c.R} valid={verify_certificate(c)} known={known(q, 3)}")

# the obstruction polynomial for m = 3, reduced modulo the field polynomial
for q in (2, 3, 5, 7):
    P = reduce_mod_field_poly(m3_fT(q), q, 3)
    print(f"q={q}: leading term {P.leading_term()}")

# one system by hand
c = m3_construct(q=3)
sys0 = build_sigma(c.field, c.alphas, c.xi, 0)
print("sigma_0 solution over F_3:", solve_fq_constrained(sys0))
