"""
Degree four and search
======================

Tabulated exponent sets give certificates for m = 4.  When no closed form
applies, search over subsets of projective classes.
"""

from symrank.decomp import m4_construct, m4_construct_from_table, search
from symrank.errors import InvalidCertificate
from symrank.multtensor import verify_certificate

for q in (2, 3, 4, 5):
    try:
        c = m4_construct_from_table(q)
        print(f"table q={q}: R={c.R} valid={verify_certificate(c)}")
    except InvalidCertificate as exc:
        print(f"table q={q}: does not verify ({exc})")
        c = m4_construct(q)
        print(f"  searched set for q={q}: R={c.R} valid={verify_certificate(c)}")

# exhaustive search proves there is no R=5 decomposition for F_8
res = search(2, 3, 5, "exhaustive")
print("q=2 m=3 R=5:", res.status, "after", res.examined, "candidates")

# a budgeted random search is reproducible from its seed
res = search(3, 3, 6, "random", budget=500, seed=1)
print("q=3 m=3 R=6:", res.status, "index", res.index)
