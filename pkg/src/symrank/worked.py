"""Published worked examples, as plain data.

All matrices are over ``F_q`` with entries in ``0..q-1`` and are stated for
the natural basis ``(1, a, ..., a^(m-1))`` of the pinned field and its
trace-dual basis.
"""

from __future__ import annotations

import numpy as np


def _m(rows):
    return np.array(rows, dtype=np.int64)


# F_16 = F_2[a]/(a^4 + a + 1): Gram matrices of x, a x, a^2 x, a^3 x.
F16_SLICE = [
    _m([[1, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
    _m([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]]),
    _m([[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    _m([[0, 0, 1, 0], [0, 1, 1, 0], [1, 1, 0, 0], [0, 0, 0, 1]]),
]
F16_DUAL_LOGS = (14, 2, 1, 0)  # trace-dual of (1, a, a^2, a^3) as powers of a

# F_9 = F_3[a]/(a^2 + 2a + 2), eta = a^5.
F9_ETA_LOG = 5
F9_CONDITION = "[1,0]"  # the element a
F9_DUAL_LOGS = (1, 2)
F9_SLICE = [_m([[0, 1], [1, 1]]), _m([[1, 1], [1, 2]])]
F9_RANK_ONES = [_m([[1, 0], [0, 0]]), _m([[0, 0], [0, 1]]), _m([[1, 1], [1, 1]])]
# X_1 = A_3 - A_1, X_2 = A_3 + A_2
F9_COMBINATIONS = [(2, 0, 1), (0, 1, 1)]

# F_16 again: rank-one matrices of xi^e Tr(xi^e x) for the tabulated q = 2,
# m = 4 exponents, and the code C spanned by F16_SLICE.
F16_RANK_ONES = [
    _m([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]),
    _m([[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 0, 0], [0, 1, 0, 1]]),
    _m([[1, 1, 1, 0], [1, 1, 1, 0], [1, 1, 1, 0], [0, 0, 0, 0]]),
    _m([[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 1, 1], [0, 1, 1, 1]]),
    _m([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]]),
]
# C_i as 0/1 combinations of A_1..A_9.
F16_COMBINATIONS = [
    (0, 0, 0, 0, 1, 1, 0, 1, 1),
    (1, 0, 0, 1, 1, 0, 0, 1, 0),
    (1, 1, 1, 1, 0, 1, 0, 1, 0),
    (0, 0, 1, 1, 1, 1, 1, 1, 0),
]
