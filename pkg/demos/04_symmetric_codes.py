"""
Symmetric rank-metric codes
===========================

Spaces of symmetric matrices with a minimum rank, their Singleton-like
bound, and the symmetric tensor rank of small codes.
"""

from symrank.field import default_field
from symrank.symcodes import (build_sqmd, gabidulin_code, is_mrd,
                              min_distance, singleton_bound, strk_exact, trk)

for q, m, d in [(2, 3, 3), (2, 4, 2), (3, 4, 2), (2, 4, 4)]:
    code = build_sqmd(q, m, d)
    print(f"S_({q},{m},{d}): k={code.k} bound={singleton_bound(m, d)} "
          f"d={min_distance(code)} mrd={is_mrd(code)}")

# <x> over F_{q^m} has dimension m and full rank
for q, m in [(2, 2), (2, 3), (3, 3), (4, 3)]:
    code = gabidulin_code(default_field(q, m))
    s = strk_exact(code, 2 * m)
    t = trk(code, s.value)
    print(f"<x> over F_{q ** m}: strk={s.value} trk={t.value}")
