"""Characteristics of the conjugacy-type representations.

The building block is the cyclic-induction family with weight function
psi_k: f_n = (1/n) * sum_{d|n} psi_k(d) * p_d^(n/d), where psi_k(d) is
the Ramanujan sum c_d(k).  k = 0 is the conjugation case (psi = totient);
k = 1 is the Moebius case (the free Lie character).

Every named module is produced two ways: a closed power-sum combination,
and a plethystic sum of h_m[f_i] / e_m[f_i] products over partitions.
The two routes agreeing exactly is part of the verification contract.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ParameterError
from .numbertheory import divisors, ramanujan_sum
from .partitions import FamilySpec, members, parse_family
from .symfunc import (
    PExpr,
    Series,
    omega,
    plethystic_sum,
    series_E,
    series_H,
)

DEFAULT_TRUNC = 16


def cyclic_weight(d: int, k: int) -> int:
    """psi_k(d): the Ramanujan sum c_d(k); c_d(0) is the totient."""
    return ramanujan_sum(d, k)


@lru_cache(maxsize=None)
def foulkes(n: int, k: int) -> PExpr:
    """Characteristic of the k-th cyclic character induced from C_n to S_n."""
    if n < 1:
        raise ParameterError(f"foulkes needs n >= 1, got {n}")
    if k < 0:
        raise ParameterError(f"foulkes needs k >= 0, got {k}")
    terms = {}
    for d in divisors(n):
        c = cyclic_weight(d, k)
        if c:
            terms[(d,) * (n // d)] = Fraction(c, n)
    return PExpr(terms)


def f_eval_direct(n: int, k: int, sign: int) -> Fraction:
    """Direct evaluation of the one-variable polynomial f_n at +-1."""
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    total = Fraction(0)
    for d in divisors(n):
        total += Fraction(cyclic_weight(d, k), n) * sign ** (n // d)
    return total


def f_eval(n: int, k: int, sign: int) -> int:
    """f_n(+-1) by the closed case tables.

    k = 0 (conjugation): f_n(1) = 1; f_n(-1) = -1 for odd n, else 0.
    k >= 1: f_n(1) = 1 iff n | k; f_n(-1) = -1 if n odd and n | k,
    +1 if n even with (n/2) | k but n not | k, else 0.
    """
    if n < 1:
        raise ParameterError(f"f_eval needs n >= 1, got {n}")
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    if k == 0:
        if sign == 1:
            return 1
        return -1 if n % 2 == 1 else 0
    if sign == 1:
        return 1 if k % n == 0 else 0
    if n % 2 == 1:
        return -1 if k % n == 0 else 0
    if k % (n // 2) == 0 and k % n != 0:
        return 1
    return 0


class FoulkesFamily:
    """The graded family f_1, f_2, ... for one weight parameter k."""

    def __init__(self, k: int):
        if k < 0:
            raise ParameterError(f"family parameter k must be >= 0, got {k}")
        self.k = k

    def component(self, n: int) -> PExpr:
        return foulkes(n, self.k)

    def series(self, trunc: int) -> Series:
        return foulkes_series(self.k, trunc)

    def eval(self, n: int, sign: int) -> int:
        return f_eval(n, self.k, sign)


@lru_cache(maxsize=None)
def foulkes_series(k: int, trunc: int) -> Series:
    """Graded series of foulkes(i, k) for 1 <= i <= trunc (shared, read-only)."""
    return Series.from_function(lambda i: foulkes(i, k), trunc)


def power_sum_family(spec: FamilySpec, n: int) -> PExpr:
    """sum of p_lam over the members of the family among partitions of n."""
    return PExpr({lam: Fraction(1) for lam in members(spec, n)})


def _pf(kind: str, n: int, **kw) -> PExpr:
    return power_sum_family(FamilySpec(kind, **kw), n)


# ---------------------------------------------------------------------------
# Named modules

MODULE_IDS = (
    "psi",
    "eps",
    "psi-a",
    "psi-abar",
    "eps-a",
    "eps-abar",
    "u-plus",
    "u-minus",
    "u-do",
    "alt-induced",
)

HALF = Fraction(1, 2)


def module_char(mid: str, n: int) -> PExpr:
    """Closed power-sum form of a named module's characteristic."""
    if n < 1:
        raise ParameterError(f"module characteristics need n >= 1, got {n}")
    if mid == "psi":
        return _pf("all", n)
    if mid == "eps":
        return _pf("odd-parts", n)
    if mid == "psi-a":
        return HALF * (_pf("do", n) + _pf("all", n))
    if mid == "psi-abar":
        return HALF * _pf("not-do", n)
    if mid == "eps-a":
        return omega(HALF * (_pf("odd-parts", n) + _pf("distinct", n)))
    if mid == "eps-abar":
        return omega(HALF * (_pf("odd-parts", n) - _pf("distinct", n)))
    if mid == "u-plus":
        return _pf("not-do-even-sign", n)
    if mid == "u-minus":
        return _pf("odd-sign", n)
    if mid == "u-do":
        return _pf("do", n)
    if mid == "alt-induced":
        return 2 * _pf("do", n) + _pf("not-do-even-sign", n)
    if mid.startswith("w:"):
        return w_route_a(n, int(mid.split(":", 1)[1]))
    if mid.startswith("family:"):
        return power_sum_family(parse_family(mid.split(":", 1)[1]), n)
    raise ParameterError(f"unknown module id {mid!r}")


def module_char_plethystic(mid: str, n: int) -> PExpr:
    """The same characteristic as an explicit sum of induced centralizer pieces."""
    if n < 1:
        raise ParameterError(f"module characteristics need n >= 1, got {n}")
    F = foulkes_series(0, n)
    if mid == "psi":
        return plethystic_sum(F, n, "h")
    if mid == "eps":
        return plethystic_sum(F, n, "e")
    if mid == "psi-a":
        return plethystic_sum(F, n, "h", parity=0)
    if mid == "psi-abar":
        return plethystic_sum(F, n, "h", parity=1)
    if mid == "eps-a":
        return plethystic_sum(F, n, "e", parity=0)
    if mid == "eps-abar":
        return plethystic_sum(F, n, "e", parity=1)
    if mid == "u-plus":
        odd = plethystic_sum(F, n, "h", parity=1)
        return odd + omega(odd)
    if mid == "u-minus":
        full = plethystic_sum(F, n, "h")
        return HALF * (full - omega(full))
    if mid == "u-do":
        return plethystic_sum(F, n, "h", signed="sign-exponent")
    if mid == "alt-induced":
        even = plethystic_sum(F, n, "h", parity=0)
        return even + omega(even)
    if mid.startswith("w:"):
        return w_route_b(n, int(mid.split(":", 1)[1]))
    raise ParameterError(f"no plethystic route for module id {mid!r}")


def parse_module(text: str) -> str:
    """Validate a CLI module string and return it in canonical form."""
    if text in MODULE_IDS:
        return text
    if text.startswith("w:"):
        k = text.split(":", 1)[1]
        try:
            kk = int(k)
        except ValueError as exc:
            raise ParameterError(f"w needs an integer parameter, got {k!r}") from exc
        if kk < 2:
            raise ParameterError("w needs k >= 2")
        return text
    if text.startswith("family:"):
        parse_family(text.split(":", 1)[1])
        return text
    raise ParameterError(f"unknown module or family {text!r}")


# ---------------------------------------------------------------------------
# The parts-in-{1,k} module, two routes


def w_route_a(n: int, k: int) -> PExpr:
    """sum_r p_k^r * p_1^(n - k*r)."""
    if n < 0 or k < 2:
        raise ParameterError("w needs n >= 0 and k >= 2")
    total = PExpr.zero()
    for r in range(n // k + 1):
        key = (k,) * r + (1,) * (n - k * r)
        total = total + PExpr.term(key)
    return total


def w_route_b(n: int, k: int) -> PExpr:
    """p_1^t times the binomial closed form on the full k-multiple block.

    With n = m*k + t, alpha = p_1^k - p_k and beta = p_1^k + p_k:
    block = 2^(-m) * sum over odd j of C(m+1, j) * beta^(m+1-j) * alpha^(j-1).
    """
    if n < 0 or k < 2:
        raise ParameterError("w needs n >= 0 and k >= 2")
    m, t = divmod(n, k)
    alpha = PExpr.p(1) ** k - PExpr.p(k)
    beta = PExpr.p(1) ** k + PExpr.p(k)
    block = PExpr.zero()
    for j in range(1, m + 2, 2):
        block = block + comb(m + 1, j) * beta ** (m + 1 - j) * alpha ** (j - 1)
    return PExpr.p(1) ** t * block * Fraction(1, 2**m) if t else block * Fraction(1, 2**m)


# ---------------------------------------------------------------------------
# Series identities for the Moebius (free Lie) family


def lie_series(trunc: int) -> Series:
    """L(t): the Moebius-weighted family, k = 1."""
    return foulkes_series(1, trunc)


def pi_alt_series(trunc: int) -> Series:
    """pi^alt(t) = sum (-1)^(i-1) * omega(L_i); degree-i component carries its sign."""
    L = lie_series(trunc)
    return L.omega().alternate()


def h_minus_one_series(trunc: int) -> Series:
    """sum_{i>=1} h_i as a graded series."""
    from .symfunc import h_n

    return Series.from_function(h_n, trunc)


def lie_series_identities(n_max: int) -> list[tuple[str, int, bool, str]]:
    """Degreewise checks of the free-Lie generating identities.

    Returns (identity name, degree, ok, detail) tuples for:
      pbw:      sum_lam H_lam[L] at degree n equals p_1^n;
      cadogan:  sum_lam H_lam[pi^alt] vanishes beyond degree 1 (and is h_1 there);
      cadogan-inverse: pi^alt composed into sum h_i returns p_1;
      lie-ext:  sum_lam E_lam[L] at degree n equals the coefficient of
                (1 - t^2 p_2)/(1 - t p_1);
      pi-ext:   sum_lam E_lam[pi^alt] matches (1 + t p_1)/(1 + t^2 p_2).
    """
    out = []
    L = lie_series(n_max)
    PA = pi_alt_series(n_max)
    p1 = PExpr.p(1)

    HL = series_H(L)
    for n in range(n_max + 1):
        want = p1**n
        out.append(("pbw", n, HL.component(n) == want, "H[L] vs p1^n"))

    HPA = series_H(PA)
    for n in range(n_max + 1):
        want = PExpr.one() if n == 0 else (p1 if n == 1 else PExpr.zero())
        out.append(("cadogan", n, HPA.component(n) == want, "H[pi-alt] vs 1 + h1"))

    from .symfunc import plethysm_into

    HM = h_minus_one_series(n_max)
    composed = Series({}, n_max)
    for i in range(1, n_max + 1):
        composed = composed + plethysm_into(PA.component(i), HM)
    for n in range(1, n_max + 1):
        want = p1 if n == 1 else PExpr.zero()
        out.append(
            ("cadogan-inverse", n, composed.component(n) == want, "pi-alt o (H-1) vs h1")
        )

    EL = series_E(L)
    one_minus_p2 = Series({0: PExpr.one(), 2: -PExpr.p(2)}, n_max)
    geom_p1 = Series(
        {d: PExpr.term((1,) * d) for d in range(n_max + 1)}, n_max
    )
    rhs = one_minus_p2 * geom_p1
    for n in range(n_max + 1):
        out.append(("lie-ext", n, EL.component(n) == rhs.component(n), "E[L] vs (1-t2p2)/(1-tp1)"))

    EPA = series_E(PA)
    one_plus_p2 = Series({0: PExpr.one(), 2: PExpr.p(2)}, n_max)
    num = Series({0: PExpr.one(), 1: p1}, n_max)
    rhs2 = num * one_plus_p2.inverse()
    for n in range(n_max + 1):
        out.append(
            ("pi-ext", n, EPA.component(n) == rhs2.component(n), "E[pi-alt] vs (1+tp1)/(1+t2p2)")
        )
    return out


def exterior_from_symmetric(G: Series) -> Series:
    """G / G[p_2]: the exterior-power series of whatever G is the symmetric power of."""
    sub = G.substitute_p(2).truncate(G.trunc)
    return G * sub.inverse()


def foulkes_products(n: int, k: int) -> list[tuple[str, int, bool, str]]:
    """Degree-n product-form checks for the weight-k family.

    Verifies that the symmetric powers collect the partitions into
    divisors of k, that the twisted exterior powers collect the
    odd-divisor/even-once family, the two alternating variants, and (for
    k = 2) the Schur-nonnegativity of the half-sum combinations.
    """
    if n < 0 or k < 1:
        raise ParameterError("foulkes_products needs n >= 0 and k >= 1")
    from .symfunc import product_expansion

    F = foulkes_series(k, max(n, 1))
    out = []
    sym = plethystic_sum(F, n, "h")
    out.append(
        ("divisor-family", n, sym == _pf("divides-k", n, k=k), "sum H vs family")
    )
    twisted = omega(plethystic_sum(F, n, "e"))
    out.append(
        ("even-once-family", n, twisted == _pf("thm59", n, k=k), "omega sum E vs family")
    )
    divs = [m for m in range(1, n + 1) if k % m == 0]
    odd_divs = [m for m in divs if m % 2 == 1]
    special = [m for m in range(2, n + 1, 2) if k % (m // 2) == 0 and k % m != 0]
    alt_ext = omega(plethystic_sum(F, n, "e", signed="sign-exponent"))
    out.append(
        (
            "alternating-exterior", n,
            alt_ext == product_expansion([(m, 1, 1) for m in divs], n),
            "distinct divisor parts",
        )
    )
    alt_sym = plethystic_sum(F, n, "h", signed="sign-exponent")
    out.append(
        (
            "alternating-symmetric", n,
            alt_sym
            == product_expansion(
                [(m, 1, 1) for m in odd_divs] + [(m, -1, -1) for m in special], n
            ),
            "odd-once / even-free parts",
        )
    )
    if k == 2:
        from .characters import to_schur

        w = w_route_a(n, 2)
        out.append(("block-sum", n, sym == w, "sum H vs parts-in-{1,2}"))
        g = product_expansion([(1, 1, 1), (4, -1, -1)], n)
        out.append(("signed-closed-form", n, g == alt_sym, "(1+p1)/(1-p4) coefficient"))
        for name, f in (("half-plus", HALF * (w + g)), ("half-minus", HALF * (w - g))):
            se = to_schur(f, n)
            out.append(
                (name, n, se.verdict in ("POSITIVE", "NONNEGATIVE"), "Schur-nonnegative")
            )
    return out
