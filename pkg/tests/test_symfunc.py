from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from symcon.errors import DegreeError, TruncationError
from symcon.partitions import partitions_of
from symcon.symfunc import (
    E_lambda,
    H_lambda,
    PExpr,
    dimension,
    e_n,
    h_n,
    inner_product,
    omega,
    p1_derivative,
    plethysm_e,
    plethysm_h,
    plethysm_p,
    plethystic_sum,
    product_expansion,
)

p = PExpr.p


def pexprs(max_deg=5):
    keys = [lam for n in range(0, max_deg + 1) for lam in partitions_of(n)]
    coeff = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
    return st.dictionaries(st.sampled_from(keys), coeff, max_size=4).map(PExpr)


# ---------------------------------------------------------------------------
# Ring structure


def test_mul_examples():
    assert p(2) * p(1, 1) == p(2, 1, 1)
    assert (p(1) + p(2)) * (p(1) - p(2)) == p(1, 1) - p(2, 2)
    f = p(3) + 2 * p(2, 1)
    assert f + PExpr.zero() == f


@settings(max_examples=60)
@given(pexprs(), pexprs(), pexprs())
def test_ring_laws(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(pexprs())
def test_omega_involution(f):
    assert omega(omega(f)) == f


def test_omega_examples():
    assert omega(p(2, 1)) == -p(2, 1)
    assert omega(p(3, 1)) == p(3, 1)
    for n in range(0, 8):
        assert omega(h_n(n)) == e_n(n)


def test_inner_product():
    assert inner_product(p(2, 1), p(2, 1)) == 2
    assert inner_product(p(3), p(2, 1)) == 0
    for n in range(1, 9):
        assert inner_product(h_n(n), h_n(n)) == 1
    with pytest.raises(DegreeError):
        inner_product(p(2), p(1))


@settings(max_examples=40)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.dictionaries(st.sampled_from(partitions_of(n)),
                        st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2)),
                        max_size=3).map(PExpr),
        st.dictionaries(st.sampled_from(partitions_of(n)),
                        st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2)),
                        max_size=3).map(PExpr),
    )
))
def test_inner_product_symmetric_bilinear(args):
    n, f, g = args
    assert inner_product(f, g) == inner_product(g, f)
    assert inner_product(f + f, g) == 2 * inner_product(f, g)


def test_p1_derivative():
    assert p1_derivative(p(1) ** 3) == 3 * p(1) ** 2
    assert p1_derivative(p(2, 2)) == PExpr.zero()
    assert p1_derivative(p(3, 1, 1)) == 2 * p(3, 1)


def test_dimension():
    for n in range(1, 11):
        full = sum((PExpr.term(lam) for lam in partitions_of(n)), PExpr.zero())
        assert dimension(full) == factorial(n)
    assert dimension(p(1, 1)) == 2
    # distinct-odd sums are degree zero for n >= 2
    for n in range(2, 11):
        do = sum(
            (PExpr.term(lam) for lam in partitions_of(n)
             if len(set(lam)) == len(lam) and all(q % 2 for q in lam)),
            PExpr.zero(),
        )
        assert dimension(do, n) == 0


# ---------------------------------------------------------------------------
# Plethysm


def test_plethysm_p_examples():
    assert plethysm_p(2, p(3)) == p(6)
    g = p(2, 1) + 3 * p(1)
    assert plethysm_p(1, g) == g
    assert plethysm_p(2, p(1) + p(2)) == p(2) + p(4)


@settings(max_examples=40)
@given(st.integers(1, 3), st.integers(1, 3), pexprs(4))
def test_plethysm_p_composes(a, b, g):
    assert plethysm_p(a, plethysm_p(b, g)) == plethysm_p(a * b, g)


def test_plethysm_h_e_base_cases():
    g = p(2) + p(1, 1)
    assert plethysm_h(0, g) == PExpr.one()
    assert plethysm_e(0, g) == PExpr.one()
    assert plethysm_h(1, g) == g
    assert plethysm_e(1, g) == g


def test_plethysm_h_example():
    assert plethysm_h(2, p(2)) == (p(2, 2) + p(4)) * Fraction(1, 2)


def test_plethysm_on_p1_gives_basis():
    for m in range(0, 7):
        assert plethysm_e(m, p(1)) == e_n(m)
        assert plethysm_h(m, p(1)) == h_n(m)


@settings(max_examples=25)
@given(st.integers(1, 5), pexprs(4))
def test_newton_telescoping(m, g):
    # sum_r (-1)^r e_r[g] h_{m-r}[g] == 0 for m >= 1
    acc = PExpr.zero()
    for r in range(m + 1):
        t = plethysm_e(r, g) * plethysm_h(m - r, g)
        acc = acc + (t if r % 2 == 0 else -t)
    assert acc == PExpr.zero()


# -- brute-force monomial oracle for plethysm ------------------------------


def _monomials(f: PExpr, nvars: int) -> dict[tuple[int, ...], Fraction]:
    """Expand a power-sum expression into monomials in nvars variables."""
    out: dict[tuple[int, ...], Fraction] = {}
    for lam, c in f.terms.items():
        poly = {(0,) * nvars: Fraction(1)}
        for part in lam:
            nxt: dict[tuple[int, ...], Fraction] = {}
            for expo, coeff in poly.items():
                for i in range(nvars):
                    key = expo[:i] + (expo[i] + part,) + expo[i + 1 :]
                    nxt[key] = nxt.get(key, Fraction(0)) + coeff
            poly = nxt
        for expo, coeff in poly.items():
            out[expo] = out.get(expo, Fraction(0)) + c * coeff
    return {k: v for k, v in out.items() if v}


def _ssyt_schur(shape, nvars) -> dict[tuple[int, ...], Fraction]:
    """Schur polynomial via semistandard tableaux enumeration."""
    rows = len(shape)
    out: dict[tuple[int, ...], Fraction] = {}
    tab = [[0] * shape[r] for r in range(rows)]

    def fill(r, c):
        if r == rows:
            expo = [0] * nvars
            for row in tab:
                for v in row:
                    expo[v - 1] += 1
            key = tuple(expo)
            out[key] = out.get(key, Fraction(0)) + 1
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, tab[r][c - 1])  # weakly increasing along rows
        if r > 0:
            lo = max(lo, tab[r - 1][c] + 1)  # strictly increasing down columns
        for v in range(lo, nvars + 1):
            tab[r][c] = v
            fill(nr, nc)

    fill(0, 0)
    return out


def test_h2_of_h2_against_monomial_oracle():
    nvars = 4
    # h2[h2] by raw monomial substitution: h2(x1..x4) is squarefree-or-square
    # degree-2 monomials; plethysm of h2 on a multiplicity-free monomial sum
    # is the sum over unordered pairs (with repetition) of products.
    h2_monoms = []
    for i, j in combinations_with_replacement(range(nvars), 2):
        expo = [0] * nvars
        expo[i] += 1
        expo[j] += 1
        h2_monoms.append(tuple(expo))
    brute: dict[tuple[int, ...], Fraction] = {}
    for a, b in combinations_with_replacement(h2_monoms, 2):
        key = tuple(x + y for x, y in zip(a, b))
        brute[key] = brute.get(key, Fraction(0)) + 1

    computed = _monomials(plethysm_h(2, h_n(2)), nvars)
    assert computed == brute

    schur_side = _ssyt_schur((4,), nvars)
    for k, v in _ssyt_schur((2, 2), nvars).items():
        schur_side[k] = schur_side.get(k, Fraction(0)) + v
    assert computed == schur_side

    from symcon.characters import to_schur

    assert to_schur(plethysm_h(2, h_n(2))).mults == {(4,): 1, (2, 2): 1}


def test_h_e_match_monomial_expansions():
    nvars = 3
    for n in range(0, 5):
        assert _monomials(h_n(n), nvars) == _ssyt_schur((n,) if n else (), nvars)
    # e_n = s_(1^n)
    for n in range(0, 4):
        shape = (1,) * n
        assert _monomials(e_n(n), nvars) == _ssyt_schur(shape, nvars)


# ---------------------------------------------------------------------------
# Partition-indexed products and series


def _totient_series(trunc):
    from symcon.repmodels import foulkes_series

    return foulkes_series(0, trunc)


def test_H_lambda_examples():
    F = _totient_series(8)
    for n in range(3, 8):
        assert H_lambda((n - 1, 1), F) == F.component(n - 1) * F.component(1)
    # equal for distinct-part shapes
    for n in range(1, 9):
        for lam in partitions_of(n):
            if len(set(lam)) == len(lam):
                assert H_lambda(lam, F) == E_lambda(lam, F)
    # column shape with f1 = p1 gives the elementary function
    for n in range(1, 7):
        assert E_lambda((1,) * n, F) == e_n(n)
    assert H_lambda((), F) == PExpr.one()


def test_series_component_truncation_error():
    F = _totient_series(5)
    with pytest.raises(TruncationError):
        F.component(6)


def test_product_expansion_families():
    for n in range(0, 9):
        sym = product_expansion([(m, -1, -1) for m in range(1, n + 1)], n)
        assert sym == sum((PExpr.term(lam) for lam in partitions_of(n)), PExpr.zero())
        ext = product_expansion([(m, -1, -1) for m in range(1, n + 1, 2)], n)
        assert ext == sum(
            (PExpr.term(lam) for lam in partitions_of(n) if all(q % 2 for q in lam)),
            PExpr.zero(),
        )
        alt = product_expansion([(m, 1, 1) for m in range(1, n + 1)], n)
        assert alt == sum(
            (PExpr.term(lam) for lam in partitions_of(n) if len(set(lam)) == len(lam)),
            PExpr.zero(),
        )


def test_two_path_generating_functions():
    # partition-indexed sums match the product forms with exponents from the
    # one-variable evaluations, for the weight families k = 0, 1, 2
    from symcon.repmodels import f_eval, foulkes_series

    for k in (0, 1, 2):
        F = foulkes_series(k, 10)
        for n in range(0, 11):
            sym = plethystic_sum(F, n, "h")
            prod_sym = product_expansion(
                [(m, -f_eval(m, k, 1), -1) for m in range(1, n + 1)], n
            )
            assert sym == prod_sym, (k, n)
            ext = plethystic_sum(F, n, "e")
            prod_ext = product_expansion(
                [(m, f_eval(m, k, -1), -1) for m in range(1, n + 1)], n
            )
            assert ext == prod_ext, (k, n)


def test_subset_factorization():
    # restricting the family to a part-degree subset S factors the symmetric
    # power through the signed exterior power of the complement
    F = _totient_series(8)
    for keep in (lambda d: d % 2 == 1, lambda d: d == 1):
        FS = F.restrict(keep)
        FSbar = F.restrict(lambda d, k=keep: not k(d))
        for n in range(0, 9):
            lhs = plethystic_sum(FS, n, "h")
            rhs = PExpr.zero()
            for a in range(n + 1):
                epm = plethystic_sum(FSbar, a, "e", signed="length")
                if epm:
                    rhs = rhs + epm * plethystic_sum(F, n - a, "h")
            assert lhs == rhs, n
            lhs_e = plethystic_sum(FS, n, "e")
            rhs_e = PExpr.zero()
            for a in range(n + 1):
                hpm = plethystic_sum(FSbar, a, "h", signed="length")
                if hpm:
                    rhs_e = rhs_e + hpm * plethystic_sum(F, n - a, "e")
            assert lhs_e == rhs_e, n


def test_derivative_recurrence():
    # d/dp1 of the degree-(n+1) symmetric/exterior power telescopes
    from symcon.repmodels import foulkes

    F = _totient_series(10)
    for n in range(1, 10):
        assert p1_derivative(foulkes(n, 0)) == p(1) ** (n - 1)
    p1 = p(1)
    for kind in ("h", "e"):
        for n in range(0, 9):
            lhs = p1_derivative(plethystic_sum(F, n + 1, kind))
            rhs = PExpr.zero()
            for i in range(n + 1):
                rhs = rhs + plethystic_sum(F, n - i, kind) * p1**i
            assert lhs == rhs, (kind, n)


def test_series_inverse():
    F = _totient_series(8)
    from symcon.symfunc import series_H

    G = series_H(F)
    prod = G * G.inverse()
    assert prod.component(0) == PExpr.one()
    for d in range(1, 9):
        assert prod.component(d) == PExpr.zero()


def test_json_roundtrip():
    f = Fraction(1, 2) * p(2, 1) + 3 * p(1, 1, 1)
    assert PExpr.from_json_dict(f.to_json_dict()) == f
