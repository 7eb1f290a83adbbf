"""Identity catalog and batch verification harness.

Every checkable claim is an Entry: a stable id, a group tag, the degrees
it applies to, and a runner returning a CheckResult.  Ids follow the
external naming contract (thm/prop/cor/lem prefixes with equation-style
suffixes, k-parameterized entries carrying ':k<k>').  Entries are
independent and may run concurrently; results are always emitted in
catalog order.

Statuses: PASS/FAIL for theorem-backed claims, REPORT for scans that are
observations rather than assertions (counterexample confirmations,
segment scans, per-class coverage).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import SchurExpansion, to_schur
from .errors import CatalogError, ParameterError
from .numbertheory import ramanujan_sum, ramanujan_sum_oracle, totient
from .partitions import (
    FamilySpec,
    Partition,
    maj_multiplicity,
    members,
    multiplicities,
    partitions_of,
    sign_exponent,
)
from .repmodels import (
    MODULE_IDS,
    f_eval,
    f_eval_direct,
    foulkes,
    foulkes_series,
    module_char,
    module_char_plethystic,
    power_sum_family,
    w_route_a,
    w_route_b,
)
from .symfunc import (
    E_lambda,
    H_lambda,
    PExpr,
    Series,
    dimension,
    omega,
    p1_derivative,
    plethystic_sum,
    product_expansion,
)
from . import tables_data

CATALOG_TRUNC = 12
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CheckResult:
    id: str
    n: int
    status: str  # PASS | FAIL | REPORT
    detail: dict | None = None

    def to_json_dict(self) -> dict:
        out = {"id": self.id, "n": self.n, "status": self.status}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Entry:
    id: str
    group: str
    ns: object  # callable max_n -> iterable of degrees
    run: object  # callable n -> CheckResult
    tags: tuple[str, ...] = ()

    def matches(self, selector: str) -> bool:
        if selector in ("all", self.id, self.group) or selector in self.tags:
            return True
        return self.id.startswith(selector + ".") or self.id.startswith(
            selector + ":"
        )


def _span(lo: int, hi: int, capped: bool = True):
    def ns(max_n: int):
        top = min(hi, max_n) if capped else hi
        return range(lo, top + 1)

    return ns


def _fixed(values):
    vals = tuple(values)

    def ns(max_n: int):
        return [v for v in vals if v <= max_n]

    return ns


# ---------------------------------------------------------------------------
# Result helpers


def _diff_witness(lhs: PExpr, rhs: PExpr, limit: int = 4) -> dict:
    diff = lhs - rhs
    keys = sorted(diff.terms, key=lambda k: (sum(k), k), reverse=True)[:limit]
    return {
        "mismatch": [
            {"p": list(k), "lhs-rhs": str(diff.terms[k])} for k in keys
        ]
    }


def _eq(check_id: str, n: int, pairs) -> CheckResult:
    """PASS iff every (label, lhs, rhs) pair agrees exactly."""
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            detail = {"failed": label}
            detail.update(_diff_witness(lhs, rhs))
            return CheckResult(check_id, n, "FAIL", detail)
    return CheckResult(check_id, n, "PASS")


def _schur(f: PExpr, n: int) -> SchurExpansion:
    return to_schur(f, n)


@lru_cache(maxsize=None)
def _module_schur(mid: str, n: int) -> SchurExpansion:
    return _schur(module_char(mid, n), n)


def check_positivity(
    spec_or_expr,
    n: int,
    mode: str = "NONNEG",
    exceptions: tuple[Partition, ...] = (),
    check_id: str = "positivity",
) -> CheckResult:
    """Schur-positivity check of a family sum (or explicit expression).

    NONNEG: all multiplicities integral and >= 0.
    STRICT: additionally every nu |- n occurs (mult >= 1).
    STRICT_EXCEPT: strict outside `exceptions`; excepted shapes only need
    nonnegativity (their absence is allowed, not required).
    """
    if isinstance(spec_or_expr, FamilySpec):
        f = power_sum_family(spec_or_expr, n)
    else:
        f = spec_or_expr
    se = _schur(f, n)
    bad = []
    for nu in partitions_of(n):
        m = se.mult(nu)
        if m.denominator != 1 or m < 0:
            bad.append((nu, m))
        elif mode == "STRICT" and m < 1:
            bad.append((nu, m))
        elif mode == "STRICT_EXCEPT" and nu not in exceptions and m < 1:
            bad.append((nu, m))
    if bad:
        return CheckResult(
            check_id,
            n,
            "FAIL",
            {"witness": [{"nu": list(nu), "mult": str(m)} for nu, m in bad[:6]]},
        )
    return CheckResult(check_id, n, "PASS")


# ---------------------------------------------------------------------------
# Shared series and sums


def _F(k: int) -> Series:
    return foulkes_series(k, CATALOG_TRUNC)


def _pf(kind: str, n: int, **kw) -> PExpr:
    return power_sum_family(FamilySpec(kind, **kw), n)


def _sum_h(n, k=0, **kw) -> PExpr:
    return plethystic_sum(_F(k), n, "h", **kw)


def _sum_e(n, k=0, **kw) -> PExpr:
    return plethystic_sum(_F(k), n, "e", **kw)


def _totient_factors(n: int, flavor: str):
    """Factor lists for the four product forms of the conjugation family."""
    if flavor == "sym":  # prod (1 - t^m p_m)^-1
        return [(m, -1, -1) for m in range(1, n + 1)]
    if flavor == "ext":  # prod over odd m of (1 - t^m p_m)^-1
        return [(m, -1, -1) for m in range(1, n + 1, 2)]
    if flavor == "alt-ext":  # prod (1 + t^m p_m)
        return [(m, 1, 1) for m in range(1, n + 1)]
    if flavor == "alt-sym":  # prod over odd m of (1 + t^m p_m)
        return [(m, 1, 1) for m in range(1, n + 1, 2)]
    raise ParameterError(flavor)


def _general_factors(n: int, k: int, flavor: str):
    """Factor lists for the product forms of the weight-k family."""
    exps = {m: f_eval(m, k, 1) for m in range(1, n + 1)}
    exps_neg = {m: f_eval(m, k, -1) for m in range(1, n + 1)}
    if flavor == "sym":  # prod (1 - t^m p_m)^(-f_m(1))
        return [(m, -exps[m], -1) for m in exps if exps[m]]
    if flavor == "ext":  # prod (1 - t^m p_m)^(f_m(-1))
        return [(m, exps_neg[m], -1) for m in exps_neg if exps_neg[m]]
    if flavor == "alt-ext":  # prod (1 + t^m p_m)^(f_m(1))
        return [(m, exps[m], 1) for m in exps if exps[m]]
    if flavor == "alt-sym":  # prod (1 + t^m p_m)^(-f_m(-1))
        return [(m, -exps_neg[m], 1) for m in exps_neg if exps_neg[m]]
    if flavor == "signed-sym":  # omega of alt-sym: (1 - t^m p_m)^(-f_m(-1)) on even m
        return [
            (m, -exps_neg[m], 1 if m % 2 else -1)
            for m in exps_neg
            if exps_neg[m]
        ]
    if flavor == "mixed-ext":  # prod (1 + (-1)^(m-1) t^m p_m)^(f_m(1))
        return [(m, exps[m], 1 if m % 2 else -1) for m in exps if exps[m]]
    if flavor == "mixed-sym":  # prod (1 + (-1)^(m-1) t^m p_m)^(-f_m(-1))
        return [(m, -exps_neg[m], 1 if m % 2 else -1) for m in exps_neg if exps_neg[m]]
    raise ParameterError(flavor)


# ---------------------------------------------------------------------------
# Identity runners


def _run_thm42(eq: int, n: int) -> CheckResult:
    cid = f"thm4.2.{eq}"
    if eq in (1, 2):
        lhs = _sum_h(n)
        rhs = (
            product_expansion(_totient_factors(n, "sym"), n)
            if eq == 1
            else _pf("all", n)
        )
    elif eq in (3, 4):
        lhs = _sum_e(n)
        rhs = (
            product_expansion(_totient_factors(n, "ext"), n)
            if eq == 3
            else _pf("odd-parts", n)
        )
    elif eq in (5, 6):
        lhs = omega(_sum_e(n, signed="sign-exponent"))
        rhs = (
            product_expansion(_totient_factors(n, "alt-ext"), n)
            if eq == 5
            else _pf("distinct", n)
        )
    else:
        lhs = omega(_sum_h(n, signed="sign-exponent"))
        rhs = (
            product_expansion(_totient_factors(n, "alt-sym"), n)
            if eq == 7
            else _pf("do", n)
        )
    return _eq(cid, n, [("lhs == rhs", lhs, rhs)])


def _run_thm411(eq: int, n: int) -> CheckResult:
    cid = f"thm4.11.{eq}"
    if eq == 1:
        pairs = [
            ("split", _sum_h(n), _sum_h(n, parity=0) + _sum_h(n, parity=1)),
            ("power-sum", _sum_h(n), _pf("all", n)),
        ]
    elif eq == 2:
        pairs = [("even H", _sum_h(n, parity=0), HALF * (_pf("do", n) + _pf("all", n)))]
    elif eq == 3:
        pairs = [("odd H", _sum_h(n, parity=1), HALF * _pf("not-do", n))]
    elif eq == 4:
        psi = _pf("all", n)
        pairs = [("half sum", HALF * (psi + omega(psi)), _pf("even-sign", n))]
    elif eq == 5:
        pairs = [
            ("split", _sum_e(n), _sum_e(n, parity=0) + _sum_e(n, parity=1)),
            ("power-sum", _sum_e(n), _pf("odd-parts", n)),
        ]
    elif eq == 6:
        pairs = [
            (
                "omega even E",
                omega(_sum_e(n, parity=0)),
                HALF * (_pf("odd-parts", n) + _pf("distinct", n)),
            )
        ]
    else:
        pairs = [
            (
                "omega odd E",
                omega(_sum_e(n, parity=1)),
                HALF * (_pf("odd-parts", n) - _pf("distinct", n)),
            )
        ]
    return _eq(cid, n, pairs)


def _run_prop413(eq: int, n: int) -> CheckResult:
    cid = f"prop4.13.{eq}"
    u_do = _pf("do", n)
    u_plus = _pf("not-do-even-sign", n)
    u_minus = _pf("odd-sign", n)
    psi = _pf("all", n)
    psi_a = _sum_h(n, parity=0)
    psi_abar = _sum_h(n, parity=1)
    if eq == 1:
        pairs = [
            ("alternating H", _sum_h(n, signed="sign-exponent"), u_do),
            ("self-conjugate", omega(u_do), u_do),
        ]
    elif eq == 2:
        pairs = [
            ("u+ self-conjugate", omega(u_plus), u_plus),
            ("u- anti", omega(u_minus), -u_minus),
        ]
    elif eq == 3:
        pairs = [("sum", psi, u_plus + u_minus + u_do)]
    elif eq == 4:
        pairs = [("omega sum", omega(psi), u_plus - u_minus + u_do)]
    elif eq == 5:
        pairs = [("even block", psi_a, HALF * (u_plus + u_minus) + u_do)]
    elif eq == 6:
        pairs = [("odd block", psi_abar, HALF * (u_plus + u_minus))]
    elif eq == 7:
        pairs = [("2 u-", 2 * u_minus, psi - omega(psi))]
    elif eq == 8:
        pairs = [("difference", u_do, psi_a - psi_abar)]
    elif eq == 9:
        pairs = [("u+", u_plus, psi_abar + omega(psi_abar))]
    else:
        pairs = [
            ("u+ + u-do", u_plus + u_do, psi_a + omega(psi_abar)),
            ("half", u_plus + u_do, HALF * (psi + omega(psi))),
        ]
    return _eq(cid, n, pairs)


def _run_thm415(eq: int, n: int) -> CheckResult:
    cid = f"thm4.15.{eq}"
    u_do = _pf("do", n)
    u_plus = _pf("not-do-even-sign", n)
    psi = _pf("all", n)
    psi_a = _sum_h(n, parity=0)
    psi_abar = _sum_h(n, parity=1)
    if eq == 1:
        odd_sum = PExpr.zero()
        for lam in partitions_of(n):
            if sign_exponent(lam) % 2 == 1:
                h = H_lambda(lam, _F(0))
                odd_sum = odd_sum + h + omega(h)
        pairs = [
            ("termwise", u_plus, odd_sum),
            ("coset form", u_plus, psi_abar + omega(psi_abar)),
        ]
    elif eq == 2:
        pairs = [
            ("even-sign family", u_plus + u_do, _pf("even-sign", n)),
            ("coset form", u_plus + u_do, psi_a + omega(psi_abar)),
        ]
    elif eq == 3:
        pairs = [("half", u_plus + u_do, HALF * (psi + omega(psi)))]
    else:
        pairs = [("swapped coset form", u_plus + u_do, omega(psi_a) + psi_abar)]
    return _eq(cid, n, pairs)


def _run_prop65(eq: int, n: int) -> CheckResult:
    cid = f"prop6.5.{eq}"
    alt = 2 * _pf("do", n) + _pf("not-do-even-sign", n)
    psi = _pf("all", n)
    psi_a = _sum_h(n, parity=0)
    u_do = _pf("do", n)
    u_plus = _pf("not-do-even-sign", n)
    if eq == 1:
        pairs = [("induced", alt, psi_a + omega(psi_a))]
    elif eq == 2:
        pairs = [("u decomposition", alt, u_plus + 2 * u_do)]
    elif eq == 3:
        pairs = [("doubled", 2 * alt, psi + omega(psi) + 2 * u_do)]
    else:
        pairs = [("u+ recovery", u_plus, psi + omega(psi) - alt)]
    return _eq(cid, n, pairs)


def _thm59_family(k: int, n: int) -> PExpr:
    return _pf("thm59", n, k=k)


def _run_thm59(eq: int, k: int, n: int) -> CheckResult:
    cid = f"thm5.9.{eq}:k{k}"
    divs = [m for m in range(1, n + 1) if k % m == 0]
    odd_divs = [m for m in divs if m % 2 == 1]
    special_even = [
        m for m in range(2, n + 1, 2) if k % (m // 2) == 0 and k % m != 0
    ]
    if eq == 1:
        lhs = _sum_h(n, k)
        rhs = product_expansion([(m, -1, -1) for m in divs], n)
    elif eq == 2:
        lhs = _sum_h(n, k)
        rhs = _pf("divides-k", n, k=k)
    elif eq == 3:
        lhs = _sum_e(n, k)
        rhs = product_expansion(
            [(m, -1, -1) for m in odd_divs] + [(m, 1, -1) for m in special_even], n
        )
    elif eq == 4:
        lhs = omega(_sum_e(n, k))
        rhs = product_expansion(
            [(m, -1, -1) for m in odd_divs] + [(m, 1, 1) for m in special_even], n
        )
    elif eq == 5:
        lhs = omega(_sum_e(n, k))
        rhs = _thm59_family(k, n)
    elif eq == 6:
        lhs = omega(_sum_e(n, k, signed="sign-exponent"))
        rhs = product_expansion([(m, 1, 1) for m in divs], n)
    elif eq == 7:
        lhs = omega(_sum_h(n, k, signed="sign-exponent"))
        rhs = product_expansion(
            [(m, 1, 1) for m in odd_divs] + [(m, -1, 1) for m in special_even], n
        )
    else:
        lhs = _sum_h(n, k, signed="sign-exponent")
        rhs = product_expansion(
            [(m, 1, 1) for m in odd_divs] + [(m, -1, -1) for m in special_even], n
        )
    return _eq(cid, n, [("lhs == rhs", lhs, rhs)])


@lru_cache(maxsize=None)
def _lie_reports(n_max: int) -> dict[tuple[str, int], bool]:
    from .repmodels import lie_series_identities

    return {(name, n): ok for name, n, ok, _ in lie_series_identities(n_max)}


_LIE_IDS = {
    "cor5.2.1": "pbw",
    "cor5.2.2": ("cadogan", "cadogan-inverse"),
    "cor5.2.3": "lie-ext",
    "prop5.4": "pi-ext",
}


def _run_lie(cid: str, n: int) -> CheckResult:
    reports = _lie_reports(CATALOG_TRUNC)
    names = _LIE_IDS[cid]
    if isinstance(names, str):
        names = (names,)
    for name in names:
        if not reports.get((name, n), True):
            return CheckResult(cid, n, "FAIL", {"failed": name})
    return CheckResult(cid, n, "PASS")


def _run_lem55(k: int, n: int) -> CheckResult:
    from .repmodels import exterior_from_symmetric

    cid = f"lem5.5:k{k}"
    G = _series_h_cached(k)
    E = _series_e_cached(k)
    Q = exterior_from_symmetric(G)
    return _eq(cid, n, [("G/G[p2] == E[F]", Q.component(n), E.component(n))])


@lru_cache(maxsize=None)
def _series_h_cached(k: int) -> Series:
    from .symfunc import series_H

    return series_H(_F(k))


@lru_cache(maxsize=None)
def _series_e_cached(k: int) -> Series:
    from .symfunc import series_E

    return series_E(_F(k))


def _run_prop36(n: int) -> CheckResult:
    cid = "prop3.6"
    pairs = []
    p1 = PExpr.p(1)
    for kind in ("h", "e"):
        comp = lambda d: plethystic_sum(_F(0), d, kind)
        lhs = p1_derivative(comp(n + 1))
        rhs = PExpr.zero()
        for i in range(n + 1):
            rhs = rhs + comp(n - i) * p1**i
        pairs.append((f"{kind} recurrence", lhs, rhs))
    return _eq(cid, n, pairs)


def _run_prop23(which: str, n: int) -> CheckResult:
    cid = f"prop2.3.{which}"
    F = _F(0)
    keep = (lambda d: d % 2 == 1) if which == "odd" else (lambda d: d == 1)
    FS = F.restrict(keep)
    FSbar = F.restrict(lambda d: not keep(d))
    pairs = []
    lhs_h = plethystic_sum(FS, n, "h")
    rhs_h = PExpr.zero()
    for a in range(n + 1):
        epm = plethystic_sum(FSbar, a, "e", signed="length")
        if epm:
            rhs_h = rhs_h + epm * plethystic_sum(F, n - a, "h")
    pairs.append(("H restricted", lhs_h, rhs_h))
    lhs_e = plethystic_sum(FS, n, "e")
    rhs_e = PExpr.zero()
    for a in range(n + 1):
        hpm = plethystic_sum(FSbar, a, "h", signed="length")
        if hpm:
            rhs_e = rhs_e + hpm * plethystic_sum(F, n - a, "e")
    pairs.append(("E restricted", lhs_e, rhs_e))
    return _eq(cid, n, pairs)


def _run_thm34(item: int, k: int, n: int) -> CheckResult:
    cid = f"thm3.4.{item}:k{k}"
    prod_ext = product_expansion(_general_factors(n, k, "ext"), n)
    prod_mixed_ext = product_expansion(_general_factors(n, k, "mixed-ext"), n)
    prod_sym = product_expansion(_general_factors(n, k, "sym"), n)
    prod_mixed_sym = product_expansion(_general_factors(n, k, "mixed-sym"), n)
    if item == 5:
        lhs = _sum_e(n, k, parity=0)
        rhs = HALF * (prod_ext + prod_mixed_ext)
    elif item == 6:
        lhs = _sum_e(n, k, parity=1)
        rhs = HALF * (prod_ext - prod_mixed_ext)
    elif item == 7:
        lhs = _sum_h(n, k, parity=0)
        rhs = HALF * (prod_sym + prod_mixed_sym)
    else:
        lhs = _sum_h(n, k, parity=1)
        rhs = HALF * (prod_sym - prod_mixed_sym)
    res = _eq(cid, n, [("half-sum identity", lhs, rhs)])
    if res.status != "PASS":
        return res
    return check_positivity(lhs, n, "NONNEG", check_id=cid)


def _run_cor510(n: int) -> CheckResult:
    cid = "cor5.10"
    w = w_route_a(n, 2)
    sum_h2 = _sum_h(n, 2)
    g = product_expansion([(1, 1, 1), (4, -1, -1)], n)
    signed = _sum_h(n, 2, signed="sign-exponent")
    res = _eq(
        cid,
        n,
        [("W == sum H", w, sum_h2), ("alternating form", g, signed)],
    )
    if res.status != "PASS":
        return res
    for label, f in (("half-plus", HALF * (w + g)), ("half-minus", HALF * (w - g))):
        sub = check_positivity(f, n, "NONNEG", check_id=cid)
        if sub.status != "PASS":
            return sub
    return CheckResult(cid, n, "PASS")


# ---------------------------------------------------------------------------
# Positivity and strictness entries


_THM11_FAMILIES: list[tuple[str, FamilySpec, int]] = (
    [
        ("thm1.1.all", FamilySpec("all"), 1),
        ("thm1.1.odd-parts", FamilySpec("odd-parts"), 1),
        ("thm1.1.even-sign", FamilySpec("even-sign"), 1),
        ("thm1.1.not-do-even-sign", FamilySpec("not-do-even-sign"), 2),
        ("thm1.1.not-do", FamilySpec("not-do"), 2),
    ]
    + [(f"thm1.1.one-or-k:{k}", FamilySpec("one-or-k", k=k), 1) for k in range(1, 7)]
    + [(f"thm1.1.divides-k:{k}", FamilySpec("divides-k", k=k), 1) for k in range(1, 7)]
    + [(f"thm1.1.thm59:{k}", FamilySpec("thm59", k=k), 1) for k in range(1, 7)]
    + [(f"thm1.1.prime-family:{p}", FamilySpec("prime-family", p=p), 1) for p in (3, 5, 7)]
)


def _run_thm45(n: int) -> CheckResult:
    cid = "thm4.5"
    se = _module_schur("psi", n)
    if n == 2:
        ok = se.mult((1, 1)) == 0 and se.mult((2,)) >= 1
        detail = {"expected-exception": {"nu": [1, 1], "mult": str(se.mult((1, 1)))}}
        return CheckResult(cid, n, "PASS" if ok else "FAIL", detail)
    return check_positivity(module_char("psi", n), n, "STRICT", check_id=cid)


def _run_strict(cid: str, mid: str, n: int, except_sign: bool = False) -> CheckResult:
    f = module_char(mid, n)
    if except_sign:
        sign = (1,) * n
        res = check_positivity(f, n, "STRICT_EXCEPT", exceptions=(sign,), check_id=cid)
        if res.status != "PASS":
            return res
        if _module_schur(mid, n).mult(sign) != 0:
            return CheckResult(
                cid, n, "FAIL", {"witness": [{"nu": list(sign), "mult": "nonzero"}]}
            )
        return CheckResult(cid, n, "PASS")
    return check_positivity(f, n, "STRICT", check_id=cid)


def _run_thm419_even(n: int) -> CheckResult:
    cid = "thm4.19.1"
    if n == 4:
        se = _module_schur("eps-a", 4)
        ok = se.mult((2, 2)) == 0 and all(
            se.mult(nu) >= 1 for nu in partitions_of(4) if nu != (2, 2)
        )
        detail = {"expected-exception": {"nu": [2, 2], "mult": str(se.mult((2, 2)))}}
        return CheckResult(cid, n, "PASS" if ok else "FAIL", detail)
    return check_positivity(module_char("eps-a", n), n, "STRICT", check_id=cid)


def _run_thm64(n: int) -> CheckResult:
    cid = "thm6.4"
    f = module_char("alt-induced", n)
    pairs = [("self-conjugate", omega(f), f)]
    res = _eq(cid, n, pairs)
    if res.status != "PASS":
        return res
    if dimension(f, n) != factorial(n):
        return CheckResult(cid, n, "FAIL", {"failed": "dimension"})
    if n == 3:
        expected = 2 * PExpr.p(3) + PExpr.p(1) ** 3
        se = _module_schur("alt-induced", 3)
        ok = f == expected and se.mult((2, 1)) == 0
        return CheckResult(
            cid, n, "PASS" if ok else "FAIL", {"expected-exception": {"nu": [2, 1]}}
        )
    return check_positivity(f, n, "STRICT", check_id=cid)


# ---------------------------------------------------------------------------
# Dimension / self-conjugacy / structural entries


_DIM_SPECS = {
    "psi": (1, "full", False),
    "eps": (1, "full", True),
    "psi-a": (2, "half", False),
    "psi-abar": (2, "half", False),
    "eps-a": (2, "half", False),
    "eps-abar": (2, "half", False),
    "u-plus": (2, "full", True),
    "u-minus": (1, "zero", False),
    "u-do": (2, "zero", True),
    "alt-induced": (2, "full", True),
}


def _run_dims(mid: str, n: int) -> CheckResult:
    cid = f"dims.{mid}"
    f = module_char(mid, n)
    lo, kind, self_conj = _DIM_SPECS[mid]
    want = {
        "full": Fraction(factorial(n)),
        "half": Fraction(factorial(n), 2),
        "zero": Fraction(0),
    }[kind]
    if dimension(f, n) != want:
        return CheckResult(
            cid, n, "FAIL", {"failed": "dimension", "got": str(dimension(f, n))}
        )
    if self_conj and omega(f) != f:
        return CheckResult(cid, n, "FAIL", {"failed": "self-conjugacy"})
    if mid == "u-do":
        g = module_char("u-plus", n) + f
        if omega(g) != g:
            return CheckResult(cid, n, "FAIL", {"failed": "u+ + u-do self-conjugacy"})
    return CheckResult(cid, n, "PASS")


def _run_dims_w(k: int, n: int) -> CheckResult:
    cid = f"dims.w:{k}"
    f = w_route_a(n, k)
    if dimension(f, n) != factorial(n):
        return CheckResult(cid, n, "FAIL", {"failed": "dimension"})
    return CheckResult(cid, n, "PASS")


def _run_cor414(n: int) -> CheckResult:
    cid = "cor4.14"
    se = _module_schur("psi", n)
    u_minus = _schur(_pf("odd-sign", n), n)
    from .partitions import conjugate

    for nu in partitions_of(n):
        nut = conjugate(nu)
        if nu == nut:
            if u_minus.mult(nu) != 0:
                return CheckResult(
                    cid, n, "FAIL", {"witness": [{"nu": list(nu), "where": "u-minus"}]}
                )
        elif (se.mult(nu) - se.mult(nut)) % 2 != 0:
            return CheckResult(
                cid, n, "FAIL", {"witness": [{"nu": list(nu), "where": "parity"}]}
            )
    return CheckResult(cid, n, "PASS")


def _run_prop421(n: int) -> CheckResult:
    cid = "prop4.21"
    se = _module_schur("psi", n)
    pairs = [
        ("trivial", se.mult((n,)), Fraction(len(partitions_of(n)))),
        ("sign", se.mult((1,) * n), Fraction(len(members(FamilySpec("do"), n)))),
    ]
    if n >= 2:
        want = sum(len(set(lam)) - 1 for lam in partitions_of(n))
        pairs.append(("near-trivial", se.mult((n - 1, 1)), Fraction(want)))
    for label, got, want in pairs:
        if got != want:
            return CheckResult(
                cid, n, "FAIL", {"failed": label, "got": str(got), "want": str(want)}
            )
    return CheckResult(cid, n, "PASS")


def _run_prop422(n: int) -> CheckResult:
    cid = "prop4.22"
    se = _module_schur("eps", n)
    odd_count = len(members(FamilySpec("odd-parts"), n))
    distinct_count = len(members(FamilySpec("distinct"), n))
    checks = [
        ("euler", odd_count == distinct_count),
        ("trivial", se.mult((n,)) == odd_count),
        ("sign", se.mult((1,) * n) == odd_count),
    ]
    if n >= 2:
        want = sum(len(lam) - 1 for lam in members(FamilySpec("distinct"), n)) + sum(
            1
            for lam in partitions_of(n)
            if sorted(multiplicities(lam).values(), reverse=True)[0] == 2
            and list(multiplicities(lam).values()).count(2) == 1
            and all(m <= 2 for m in multiplicities(lam).values())
        )
        checks.append(("near-trivial", se.mult((n - 1, 1)) == want))
        checks.append(("near-sign", se.mult((2,) + (1,) * (n - 2)) == want))
    for label, ok in checks:
        if not ok:
            return CheckResult(cid, n, "FAIL", {"failed": label})
    return CheckResult(cid, n, "PASS")


def _run_lem47(n: int) -> CheckResult:
    cid = "lem4.7"
    se = _schur(foulkes(n, 0), n)
    checks = [("trivial once", se.mult((n,)) == 1)]
    if n >= 2:
        checks.append(("near-trivial absent", se.mult((n - 1, 1)) == 0))
        checks.append(
            ("sign iff odd", se.mult((1,) * n) == (1 if n % 2 == 1 else 0))
        )
        checks.append(
            (
                "near-sign iff even",
                se.mult((2,) + (1,) * (n - 2)) == (1 if n % 2 == 0 else 0),
            )
        )
    if n in (3, 5, 7):  # odd primes: everything else present
        hooks_out = {(n - 1, 1), (2,) + (1,) * (n - 2)}
        checks.append(
            (
                "prime coverage",
                all(
                    se.mult(nu) >= 1
                    for nu in partitions_of(n)
                    if nu not in hooks_out
                ),
            )
        )
    for label, ok in checks:
        if not ok:
            return CheckResult(cid, n, "FAIL", {"failed": label})
    return CheckResult(cid, n, "PASS")


# ---------------------------------------------------------------------------
# Route and oracle entries


def _run_routes(mid: str, n: int) -> CheckResult:
    cid = f"routes.{mid}"
    return _eq(
        cid,
        n,
        [("power-sum vs plethystic", module_char(mid, n), module_char_plethystic(mid, n))],
    )


def _run_routes_w(k: int, n: int) -> CheckResult:
    cid = f"routes.w:{k}"
    return _eq(cid, n, [("route A vs route B", w_route_a(n, k), w_route_b(n, k))])


def _run_mn_alternant(n: int) -> CheckResult:
    from .characters import alternant_oracle, mn_character

    cid = "oracles.mn-alternant"
    for nu in partitions_of(n):
        for mu in partitions_of(n):
            if mn_character(nu, mu) != alternant_oracle(nu, mu):
                return CheckResult(
                    cid, n, "FAIL", {"witness": [{"nu": list(nu), "mu": list(mu)}]}
                )
    return CheckResult(cid, n, "PASS")


def _run_ramanujan(d: int) -> CheckResult:
    cid = "oracles.ramanujan"
    for k in range(0, 61):
        if ramanujan_sum(d, k) != ramanujan_sum_oracle(d, k):
            return CheckResult(cid, d, "FAIL", {"witness": [{"d": d, "k": k}]})
    if ramanujan_sum(d, 0) != totient(d):
        return CheckResult(cid, d, "FAIL", {"failed": "c_d(0) == phi(d)"})
    for k in range(0, 121):
        if ramanujan_sum(d, k) != ramanujan_sum(d, k % d):
            return CheckResult(cid, d, "FAIL", {"failed": "periodicity"})
    return CheckResult(cid, d, "PASS")


def _run_maj(n: int) -> CheckResult:
    cid = "oracles.maj"
    se = _schur(foulkes(n, 0), n)
    for nu in partitions_of(n):
        if se.mult(nu) != maj_multiplicity(nu, n, 0):
            return CheckResult(cid, n, "FAIL", {"witness": [{"nu": list(nu)}]})
    return CheckResult(cid, n, "PASS")


def _run_lem33(n: int) -> CheckResult:
    cid = "lem3.3"
    for k in range(0, 13):
        lhs = f_eval_direct(n, k, -1)
        if n % 2 == 1:
            rhs = -f_eval_direct(n, k, 1)
        else:
            rhs = f_eval_direct(n // 2, k, 1) - f_eval_direct(n, k, 1)
        if lhs != rhs:
            return CheckResult(cid, n, "FAIL", {"witness": [{"k": k}]})
    return CheckResult(cid, n, "PASS")


def _run_feval_lemma(cid: str, n: int) -> CheckResult:
    ks = {"lem4.1": (0,), "lem5.1": (1,), "lem5.7": tuple(range(1, 13))}[cid]
    for k in ks:
        for sign in (1, -1):
            if Fraction(f_eval(n, k, sign)) != f_eval_direct(n, k, sign):
                return CheckResult(cid, n, "FAIL", {"witness": [{"k": k, "sign": sign}]})
    return CheckResult(cid, n, "PASS")


# ---------------------------------------------------------------------------
# Tables, counterexamples, scans


def reproduce_table(kind: str, n: int) -> CheckResult:
    """Compare the computed decomposition with the transcribed fixture."""
    kind = kind.lower()
    if kind not in tables_data.TABLE_KINDS:
        raise ParameterError(f"unknown table {kind!r}")
    lo, hi = tables_data.table_range(kind)
    cid = f"tables.{kind}"
    if not lo <= n <= hi:
        raise ParameterError(f"table {kind} has no fixture column for n={n}")
    if kind in ("t1", "t2"):
        fixture = (tables_data.T1 if kind == "t1" else tables_data.T2)[n]
        parts = partitions_of(n)
        if len(fixture) == len(parts):
            se = _module_schur("psi" if kind == "t1" else "eps", n)
            computed = [se.mult(nu) for nu in parts]
        else:
            # partial column: compute only the recorded leading rows
            from .characters import mn_character

            computed = [
                sum(mn_character(parts[i], mu) for mu in parts)
                for i in range(len(fixture))
            ]
        for i, want in enumerate(fixture):
            if computed[i] != want:
                return CheckResult(
                    cid,
                    n,
                    "FAIL",
                    {
                        "witness": [
                            {
                                "nu": list(parts[i]),
                                "computed": str(computed[i]),
                                "fixture": want,
                            }
                        ]
                    },
                )
        return CheckResult(cid, n, "PASS")
    fixtures = (tables_data.T3 if kind == "t3" else tables_data.T4)[n]
    mids = ("psi-a", "psi-abar") if kind == "t3" else ("eps-a", "eps-abar")
    for block, mid in zip(fixtures, mids):
        se = _module_schur(mid, n)
        fix = dict(block)
        for nu in partitions_of(n):
            if se.mult(nu) != fix.get(nu, 0):
                return CheckResult(
                    cid,
                    n,
                    "FAIL",
                    {
                        "witness": [
                            {
                                "block": mid,
                                "nu": list(nu),
                                "computed": str(se.mult(nu)),
                                "fixture": fix.get(nu, 0),
                            }
                        ]
                    },
                )
    return CheckResult(cid, n, "PASS")


def table_decomposition(kind: str, n: int) -> dict[str, SchurExpansion]:
    """Computed decomposition(s) rendered by the CLI `table` command."""
    kind = kind.lower()
    if kind == "t1":
        return {"psi": _module_schur("psi", n)}
    if kind == "t2":
        return {"eps": _module_schur("eps", n)}
    if kind == "t3":
        return {
            "psi-a": _module_schur("psi-a", n),
            "psi-abar": _module_schur("psi-abar", n),
        }
    if kind == "t4":
        return {
            "eps-a": _module_schur("eps-a", n),
            "eps-abar": _module_schur("eps-abar", n),
        }
    raise ParameterError(f"unknown table {kind!r}")


_CEX_B = FamilySpec(
    "explicit",
    items=((1,) * 6, (2, 1, 1, 1, 1), (3, 3), (4, 2), (4, 1, 1)),
)
_CEX_C = FamilySpec(
    "explicit",
    items=((1,) * 6, (2, 2, 2), (3, 1, 1, 1), (4, 1, 1), (4, 2)),
)


def _run_cex(which: str, n: int) -> CheckResult:
    cid = f"cex.{which}"
    if which == "a":
        f = _pf("odd-sign", n) + PExpr.term((1,) * n)
        nu = (1,) * n
        odd_count = len(members(FamilySpec("odd-sign"), n))
        want = Fraction(1 - odd_count)
    elif which == "b":
        f = power_sum_family(_CEX_B, n)
        nu = (2, 1, 1, 1, 1)
        want = Fraction(-1)
    else:
        f = power_sum_family(_CEX_C, n)
        nu = (3, 3)
        want = Fraction(-1)
    got = _schur(f, n).mult(nu)
    status = "REPORT" if got == want else "FAIL"
    return CheckResult(
        cid, n, status, {"nu": list(nu), "mult": str(got), "expected": str(want)}
    )


def counterexamples() -> list[CheckResult]:
    """Confirm the three documented failures of naive positivity."""
    out = [_run_cex("a", n) for n in (4, 5, 6)]
    out.append(_run_cex("b", 6))
    out.append(_run_cex("c", 6))
    return out


def _run_conjecture(n: int) -> CheckResult:
    cid = "conjecture1.5"
    violations = []
    parts = partitions_of(n)
    tail = PExpr.zero()
    for mu in reversed(parts):  # grow the segment from (1^n) upward
        tail = tail + PExpr.term(mu)
        se = _schur(tail, n)
        bad = [
            nu
            for nu in parts
            if se.mult(nu) < 0 or se.mult(nu).denominator != 1
        ]
        if bad:
            violations.append({"from": list(mu), "nu": [list(b) for b in bad[:3]]})
    return CheckResult(
        cid, n, "REPORT", {"segments": len(parts), "violations": violations}
    )


def conjecture_scan(n: int) -> list[CheckResult]:
    """Schur-nonnegativity of every final reverse-lex segment sum (report only)."""
    return [_run_conjecture(n)]


def _run_coverage(n: int) -> CheckResult:
    cid = "remark4.20"
    F = _F(0)
    full_h, full_e = [], []
    for lam in partitions_of(n):
        if _schur(H_lambda(lam, F), n).verdict == "POSITIVE":
            full_h.append(list(lam))
        if _schur(E_lambda(lam, F), n).verdict == "POSITIVE":
            full_e.append(list(lam))
    return CheckResult(cid, n, "REPORT", {"h-covering": full_h, "e-covering": full_e})


def per_class_coverage(n: int) -> CheckResult:
    """Classes whose single-orbit (twisted) conjugation piece hits every irreducible."""
    return _run_coverage(n)


# ---------------------------------------------------------------------------
# Catalog assembly


def _build_catalog() -> list[Entry]:
    es: list[Entry] = []
    idt = ("identities",)

    for eq in range(1, 9):
        es.append(
            Entry(
                f"thm4.2.{eq}", "thm4.2", _span(1, 10),
                (lambda e: lambda n: _run_thm42(e, n))(eq), idt,
            )
        )
    for eq in range(1, 8):
        es.append(
            Entry(
                f"thm4.11.{eq}", "thm4.11", _span(1, 10),
                (lambda e: lambda n: _run_thm411(e, n))(eq), idt,
            )
        )
    for eq in range(1, 11):
        es.append(
            Entry(
                f"prop4.13.{eq}", "prop4.13", _span(1, 10),
                (lambda e: lambda n: _run_prop413(e, n))(eq), idt,
            )
        )
    for eq in range(1, 5):
        es.append(
            Entry(
                f"thm4.15.{eq}", "thm4.15", _span(1, 10),
                (lambda e: lambda n: _run_thm415(e, n))(eq), idt,
            )
        )
    for eq in range(1, 5):
        es.append(
            Entry(
                f"prop6.5.{eq}", "prop6.5", _span(1, 10),
                (lambda e: lambda n: _run_prop65(e, n))(eq), idt,
            )
        )
    for eq in range(1, 9):
        for k in range(1, 7):
            es.append(
                Entry(
                    f"thm5.9.{eq}:k{k}", "thm5.9", _span(1, 10),
                    (lambda e, kk: lambda n: _run_thm59(e, kk, n))(eq, k), idt,
                )
            )
    for cid in ("cor5.2.1", "cor5.2.2", "cor5.2.3"):
        es.append(
            Entry(
                cid, "cor5.2", _span(1, 10),
                (lambda c: lambda n: _run_lie(c, n))(cid), idt,
            )
        )
    es.append(Entry("prop5.4", "prop5.4", _span(1, 10), lambda n: _run_lie("prop5.4", n), idt))
    for k in (0, 1, 2):
        es.append(
            Entry(
                f"lem5.5:k{k}", "lem5.5", _span(1, 10),
                (lambda kk: lambda n: _run_lem55(kk, n))(k), idt,
            )
        )
    es.append(Entry("prop3.6", "prop3.6", _span(1, 10), _run_prop36, idt))
    for which in ("odd", "one"):
        es.append(
            Entry(
                f"prop2.3.{which}", "prop2.3", _span(1, 10),
                (lambda w: lambda n: _run_prop23(w, n))(which), idt,
            )
        )
    for item in (5, 6, 7, 8):
        for k in (0, 1, 2):
            es.append(
                Entry(
                    f"thm3.4.{item}:k{k}", "thm3.4", _span(1, 10),
                    (lambda it, kk: lambda n: _run_thm34(it, kk, n))(item, k), idt,
                )
            )
    es.append(Entry("cor5.10", "cor5.10", _span(1, 10), _run_cor510, idt))

    for cid, spec, lo in _THM11_FAMILIES:
        es.append(
            Entry(
                cid, "thm1.1", _span(lo, 12),
                (lambda s, c: lambda n: check_positivity(s, n, "NONNEG", check_id=c))(
                    spec, cid
                ),
                ("positivity",),
            )
        )

    st = ("strict",)
    es.append(Entry("thm4.5", "strict", _span(2, 12), _run_thm45, st))
    es.append(
        Entry(
            "thm4.9", "strict", _span(1, 12),
            lambda n: _run_strict("thm4.9", "eps", n), st,
        )
    )
    es.append(
        Entry(
            "thm4.17.1", "strict", _span(4, 12),
            lambda n: _run_strict("thm4.17.1", "psi-a", n), st,
        )
    )
    es.append(
        Entry(
            "thm4.17.2", "strict", _span(2, 12),
            lambda n: _run_strict("thm4.17.2", "psi-abar", n, except_sign=True), st,
        )
    )
    es.append(Entry("thm4.19.1", "strict", _span(4, 12), _run_thm419_even, st))
    es.append(
        Entry(
            "thm4.19.2", "strict", _span(2, 12),
            lambda n: _run_strict("thm4.19.2", "eps-abar", n, except_sign=True), st,
        )
    )
    es.append(
        Entry(
            "cor4.18", "strict", _span(4, 12),
            lambda n: _run_strict("cor4.18", "u-plus", n), st,
        )
    )
    es.append(
        Entry(
            "cor4.12", "strict",
            lambda max_n: [n for n in range(1, min(12, max_n) + 1) if n != 2],
            lambda n: check_positivity(
                FamilySpec("even-sign"), n, "STRICT", check_id="cor4.12"
            ),
            st,
        )
    )
    es.append(Entry("thm6.4", "strict", _span(2, 12), _run_thm64, st))

    dm = ("dims",)
    for mid, (lo, _, _) in _DIM_SPECS.items():
        es.append(
            Entry(
                f"dims.{mid}", "dims", _span(lo, 10),
                (lambda m: lambda n: _run_dims(m, n))(mid), dm,
            )
        )
    for k in range(2, 7):
        es.append(
            Entry(
                f"dims.w:{k}", "dims", _span(0, 10),
                (lambda kk: lambda n: _run_dims_w(kk, n))(k), dm,
            )
        )
    es.append(Entry("cor4.14", "dims", _span(1, 10), _run_cor414, dm))
    es.append(Entry("prop4.21", "dims", _span(1, 10), _run_prop421, dm))
    es.append(Entry("prop4.22", "dims", _span(1, 10), _run_prop422, dm))
    es.append(Entry("lem4.7", "dims", _span(1, 10), _run_lem47, dm))

    rt = ("routes",)
    for mid in MODULE_IDS:
        es.append(
            Entry(
                f"routes.{mid}", "routes", _span(1, 10),
                (lambda m: lambda n: _run_routes(m, n))(mid), rt,
            )
        )
    for k in range(2, 7):
        es.append(
            Entry(
                f"routes.w:{k}", "routes", _span(0, 12),
                (lambda kk: lambda n: _run_routes_w(kk, n))(k), rt,
            )
        )

    orc = ("oracles",)
    es.append(Entry("oracles.mn-alternant", "oracles", _span(1, 6), _run_mn_alternant, orc))
    es.append(
        Entry("oracles.ramanujan", "oracles", _span(1, 60, capped=False), _run_ramanujan, orc)
    )
    es.append(Entry("oracles.maj", "oracles", _span(1, 9), _run_maj, orc))

    lm = ("lemmas",)
    es.append(Entry("lem3.3", "lemmas", _span(1, 30, capped=False), _run_lem33, lm))
    for cid in ("lem4.1", "lem5.1", "lem5.7"):
        es.append(
            Entry(
                cid, "lemmas", _span(1, 30, capped=False),
                (lambda c: lambda n: _run_feval_lemma(c, n))(cid), lm,
            )
        )

    tb = ("tables",)
    es.append(
        Entry(
            "tables.t1", "tables",
            lambda max_n: range(1, max(10, min(max_n, 16)) + 1),
            lambda n: reproduce_table("t1", n), tb,
        )
    )
    es.append(
        Entry(
            "tables.t2", "tables",
            lambda max_n: range(1, 11),
            lambda n: reproduce_table("t2", n), tb,
        )
    )
    for kind in ("t3", "t4"):
        es.append(
            Entry(
                f"tables.{kind}", "tables",
                (lambda kk: lambda max_n: range(2, min(max_n, 8) + 1))(kind),
                (lambda kk: lambda n: reproduce_table(kk, n))(kind), tb,
            )
        )

    cx = ("counterexamples",)
    es.append(Entry("cex.a", "counterexamples", _fixed((4, 5, 6)), lambda n: _run_cex("a", n), cx))
    es.append(Entry("cex.b", "counterexamples", _fixed((6,)), lambda n: _run_cex("b", n), cx))
    es.append(Entry("cex.c", "counterexamples", _fixed((6,)), lambda n: _run_cex("c", n), cx))

    es.append(
        Entry(
            "conjecture1.5", "conjecture",
            lambda max_n: range(1, min(max_n, 8) + 1), _run_conjecture, ("scans",),
        )
    )
    es.append(
        Entry(
            "remark4.20", "coverage",
            lambda max_n: range(1, min(max_n, 10) + 1), _run_coverage, ("scans",),
        )
    )
    return es


CATALOG: list[Entry] = _build_catalog()
_BY_ID = {e.id: e for e in CATALOG}


def check_identity(check_id: str, n: int) -> CheckResult:
    """Run one catalog entry at degree n."""
    entry = _BY_ID.get(check_id)
    if entry is None:
        raise CatalogError(f"unknown catalog id {check_id!r}")
    return entry.run(n)


def select_entries(selector: str) -> list[Entry]:
    chosen = [e for e in CATALOG if e.matches(selector)]
    if not chosen:
        raise CatalogError(f"selector {selector!r} matches no catalog entries")
    return chosen


def run_selector(selector: str, max_n: int = 12, threads: int = 1):
    """Yield CheckResults for all matching entries, in catalog order."""
    tasks = [
        (entry, n) for entry in select_entries(selector) for n in entry.ns(max_n)
    ]
    if threads == 0:
        threads = min(8, os.cpu_count() or 1)
    if threads <= 1:
        for entry, n in tasks:
            yield entry.run(n)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(lambda t: t[0].run(t[1]), tasks)


def catalog_ids() -> list[str]:
    return [e.id for e in CATALOG]
