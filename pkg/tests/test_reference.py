import math

import pytest

from symrank.reference import TABLE1, TABLE2, TABLE4, epsilon, known


def test_table1_shape():
    assert len(TABLE1) == 27
    assert all(a <= b for a, b in TABLE1.values())


@pytest.mark.parametrize("q,m,want", [
    ((2), 5, "[10, 13]"),
    (7, 4, "[7, 7]"),
    (4, 3, "[5, 5]"),
    (2, 4, "[9, 9]"),
    (3, 4, "[8, 9]"),
    (4, 4, "[8, 8]"),
    (5, 4, "[8, 8]"),
    (2, 2, "[3, 3]"),
    (11, 20, "[40, inf]"),
])
def test_known_examples(q, m, want):
    assert str(known(q, m)) == want


def test_known_rules_cited():
    iv = known(7, 4)
    assert any("2m-1" in r for r in iv.rules)
    assert known(5, 4).exact  # elliptic range forces 2m
    assert any("elliptic" in r for r in known(5, 4).rules)
    assert known(13, 1).exact


def test_known_consistent_on_grid():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27):
        for m in range(1, 25):
            iv = known(q, m)
            assert iv.lo <= iv.hi
            assert iv.lo >= 2 * m - 1 or m == 1


def test_epsilon():
    assert epsilon(4) == 4 and epsilon(9) == 6 and epsilon(16) == 8
    assert epsilon(2) == 1  # floor(2 sqrt 2) = 2 is not prime to 2
    assert epsilon(3) == 2
    assert epsilon(5) == 4
    assert epsilon(7) == 5
    for q in (2, 3, 5, 7, 11, 13):
        e = epsilon(q)
        assert e <= 2 * math.sqrt(q) and e % q != 0


def test_table2_and_table4_contents():
    assert TABLE2[2] == (1, 6) and TABLE2[13] == (12, 2178)
    assert len(TABLE2) == 11
    assert [TABLE4[q].R for q in (2, 3, 4, 5)] == [9, 9, 8, 8]
    assert TABLE4[3].exponents == TABLE4[4].exponents
