from fractions import Fraction

import pytest

from symcon.characters import (
    alternant_oracle,
    character_table,
    mn_character,
    schur_to_power,
    to_schur,
)
from symcon.errors import CapacityError, DegreeError, ParameterError
from symcon.partitions import conjugate, partitions_of, sign_exponent, syt_count, z_lambda
from symcon.symfunc import PExpr


def test_trivial_and_sign_characters():
    for n in range(1, 9):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_hook_values_on_full_cycle():
    assert mn_character((2, 2), (4,)) == 0
    assert mn_character((3, 1, 1), (5,)) == 1
    for n in (4, 5, 6, 7):
        for r in range(n):
            hook = (n - r,) + (1,) * r
            assert mn_character(hook, (n,)) == (-1) ** r
        for nu in partitions_of(n):
            if len(nu) > 1 and nu[0] + len(nu) - 1 != n:
                assert mn_character(nu, (n,)) == 0


def test_size_mismatch():
    with pytest.raises(ParameterError):
        mn_character((2, 1), (4,))


def test_small_table_row():
    t3 = character_table(3)
    assert t3.rows[t3.index[(2, 1)]] == (-1, 0, 2)
    t1 = character_table(1)
    assert t1.rows == ((1,),)


def test_table_capacity_error():
    with pytest.raises(CapacityError):
        character_table(11, max_n=10)


def test_column_orthogonality():
    for n in range(1, 11):
        table = character_table(n)
        parts = table.parts
        for i, lam in enumerate(parts):
            for j in range(i, len(parts)):
                s = sum(row[i] * row[j] for row in table.rows)
                assert s == (z_lambda(lam) if i == j else 0)


def test_degree_column_is_syt_count():
    for n in range(1, 11):
        table = character_table(n)
        for nu in table.parts:
            assert table.chi(nu, (1,) * n) == syt_count(nu)


def test_conjugate_row_sign_rule():
    for n in range(1, 11):
        table = character_table(n)
        for nu in table.parts:
            nut = conjugate(nu)
            for mu in table.parts:
                assert table.chi(nut, mu) == (-1) ** sign_exponent(mu) * table.chi(nu, mu)


def test_alternant_oracle_exhaustive():
    for n in range(1, 7):
        for nu in partitions_of(n):
            for mu in partitions_of(n):
                assert alternant_oracle(nu, mu) == mn_character(nu, mu)
    assert alternant_oracle((2, 1), (3,)) == -1
    with pytest.raises(CapacityError):
        alternant_oracle((7,), (7,))


def test_to_schur_examples():
    full3 = sum((PExpr.term(lam) for lam in partitions_of(3)), PExpr.zero())
    se = to_schur(full3)
    assert se.mults == {(3,): 3, (2, 1): 1, (1, 1, 1): 1}
    assert se.verdict == "POSITIVE"

    reg = to_schur(PExpr.p(*(1,) * 4))
    assert all(reg.mult(nu) == syt_count(nu) for nu in partitions_of(4))
    assert reg.verdict == "POSITIVE"

    # {(1^4)} plus the odd-sign classes: the sign multiplicity is negative
    fam = PExpr.term((1, 1, 1, 1)) + PExpr.term((4,)) + PExpr.term((2, 1, 1))
    mixed = to_schur(fam)
    assert mixed.mult((1, 1, 1, 1)) == -1
    assert mixed.verdict == "MIXED"


def test_to_schur_verdicts():
    assert to_schur(PExpr.p(2)).verdict == "MIXED"  # p2 = s2 - s11
    two_s2 = PExpr.p(1, 1) + PExpr.p(2)  # 2*s2, s11 absent
    assert to_schur(two_s2).verdict == "NONNEGATIVE"
    half = Fraction(1, 2) * PExpr.p(2)
    assert to_schur(half).verdict == "NON_INTEGRAL"
    with pytest.raises(DegreeError):
        to_schur(PExpr.p(1) + PExpr.p(2))


def test_schur_power_roundtrip():
    for n in range(1, 10):
        for nu in partitions_of(n):
            back = to_schur(schur_to_power(nu))
            assert back.mults == {nu: Fraction(1)}


def test_json_shape():
    se = to_schur(sum((PExpr.term(lam) for lam in partitions_of(3)), PExpr.zero()))
    assert se.to_json_dict() == {
        "n": 3,
        "mults": {"[3]": 3, "[2,1]": 1, "[1,1,1]": 1},
        "verdict": "POSITIVE",
    }
