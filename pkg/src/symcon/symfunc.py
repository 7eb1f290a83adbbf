"""Exact symmetric-function arithmetic in the power-sum basis.

An expression is a finite sum  sum_lam c_lam * p_lam  with rational
coefficients, stored sparsely as {partition: Fraction}.  Conventions:

  * p_lam has degree |lam| and p_lam * p_mu = p_{lam union mu}
    (multiset union of parts);
  * omega(p_lam) = (-1)^(|lam| - len(lam)) * p_lam;
  * the Hall pairing is <p_lam, p_mu> = z_lam * delta_{lam, mu};
  * plethysm by a power sum replaces each part i of every key by a*i,
    leaving coefficients untouched.

Graded series (class Series) collect one homogeneous expression per
degree up to a truncation bound; the formal variable t is never
materialized because every t-power equals the degree it multiplies.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import DegreeError, ParameterError, TruncationError
from .partitions import Partition, partitions_of, sign_exponent, z_lambda

Scalar = Fraction | int


def _merge_keys(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


class PExpr:
    """Sparse symmetric function in the power-sum basis."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for key, val in terms.items():
                c = Fraction(val)
                if c:
                    clean[key] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "PExpr":
        return PExpr()

    @staticmethod
    def one() -> "PExpr":
        return PExpr({(): Fraction(1)})

    @staticmethod
    def p(*parts: int) -> "PExpr":
        """p_{(parts)}; PExpr.p(2,1) is the monomial p_2 p_1."""
        key = tuple(sorted(parts, reverse=True))
        if any(k < 1 for k in key):
            raise ParameterError(f"power-sum indices must be >= 1, got {parts}")
        return PExpr({key: Fraction(1)})

    @staticmethod
    def term(lam: Partition, c: Scalar = 1) -> "PExpr":
        return PExpr({tuple(lam): Fraction(c)})

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, PExpr):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "PExpr") -> "PExpr":
        if not isinstance(other, PExpr):
            if other == 0:  # permits sum()
                return self
            return NotImplemented
        out = dict(self.terms)
        for key, val in other.terms.items():
            s = out.get(key, Fraction(0)) + val
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        res = PExpr.__new__(PExpr)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "PExpr":
        res = PExpr.__new__(PExpr)
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __sub__(self, other: "PExpr") -> "PExpr":
        return self + (-other)

    def __mul__(self, other) -> "PExpr":
        if isinstance(other, PExpr):
            out: dict[Partition, Fraction] = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    key = _merge_keys(k1, k2)
                    s = out.get(key, Fraction(0)) + v1 * v2
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            res = PExpr.__new__(PExpr)
            res.terms = out
            return res
        c = Fraction(other)
        if not c:
            return PExpr.zero()
        res = PExpr.__new__(PExpr)
        res.terms = {k: v * c for k, v in self.terms.items()}
        return res

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "PExpr":
        if exp < 0:
            raise ParameterError("negative powers are not defined")
        out = PExpr.one()
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return out

    # -- inspection --------------------------------------------------------

    def coefficient(self, lam: Partition) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def homogeneous_degree(self) -> int | None:
        """Degree if homogeneous, None for the zero expression; DegreeError if mixed."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise DegreeError(f"expression mixes degrees {sorted(degs)}")
        return degs.pop()

    def component(self, d: int) -> "PExpr":
        return PExpr({k: v for k, v in self.terms.items() if sum(k) == d})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=lambda k: (sum(k), partitions_of(sum(k)).index(k))):
            bits.append(f"{self.terms[key]}*p{list(key)}")
        return " + ".join(bits)

    # -- JSON --------------------------------------------------------------

    def to_json_dict(self) -> dict[str, str]:
        """{"[2,1]": "1/2", ...} with exact rational strings."""
        out = {}
        for key in sorted(self.terms, key=lambda k: (sum(k), k), reverse=True):
            out["[" + ",".join(str(p) for p in key) + "]"] = str(self.terms[key])
        return out

    @staticmethod
    def from_json_dict(data: dict[str, str]) -> "PExpr":
        terms = {}
        for key, val in data.items():
            parts = tuple(int(x) for x in key.strip("[]").split(",") if x.strip())
            terms[parts] = Fraction(val)
        return PExpr(terms)


# ---------------------------------------------------------------------------
# Basic operators


def omega(f: PExpr) -> PExpr:
    """The involution with omega(p_i) = (-1)^(i-1) p_i."""
    res = PExpr.__new__(PExpr)
    res.terms = {
        k: (v if sign_exponent(k) % 2 == 0 else -v) for k, v in f.terms.items()
    }
    return res


def inner_product(f: PExpr, g: PExpr) -> Fraction:
    """Hall pairing; requires both arguments homogeneous of equal degree."""
    df, dg = f.homogeneous_degree(), g.homogeneous_degree()
    if df is not None and dg is not None and df != dg:
        raise DegreeError(f"inner product of degrees {df} and {dg}")
    total = Fraction(0)
    small, big = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for key, val in small.items():
        other = big.get(key)
        if other is not None:
            total += val * other * z_lambda(key)
    return total


def p1_derivative(f: PExpr) -> PExpr:
    """d/dp_1: each key loses one part equal to 1, scaled by its multiplicity."""
    out: dict[Partition, Fraction] = {}
    for key, val in f.terms.items():
        m1 = 0
        for p in reversed(key):
            if p == 1:
                m1 += 1
            else:
                break
        if m1:
            nk = key[:-1]
            out[nk] = out.get(nk, Fraction(0)) + val * m1
    return PExpr(out)


def dimension(f: PExpr, n: int | None = None) -> Fraction:
    """n! times the coefficient of p_(1^n); the degree of the (virtual) module."""
    if n is None:
        n = f.homogeneous_degree()
        if n is None:
            return Fraction(0)
    return factorial(n) * f.coefficient((1,) * n)


# ---------------------------------------------------------------------------
# Complete homogeneous and elementary functions in the p basis


def h_n(n: int) -> PExpr:
    """h_n = sum_{lam |- n} p_lam / z_lam."""
    if n < 0:
        raise ParameterError("h_n needs n >= 0")
    return PExpr({lam: Fraction(1, z_lambda(lam)) for lam in partitions_of(n)})


def e_n(n: int) -> PExpr:
    """e_n = sum_{lam |- n} (-1)^(n - len(lam)) p_lam / z_lam."""
    if n < 0:
        raise ParameterError("e_n needs n >= 0")
    return PExpr(
        {
            lam: Fraction((-1) ** sign_exponent(lam), z_lambda(lam))
            for lam in partitions_of(n)
        }
    )


# ---------------------------------------------------------------------------
# Plethysm


def plethysm_p(a: int, g: PExpr) -> PExpr:
    """p_a[g]: replace every key part i by a*i; coefficients unchanged."""
    if a < 1:
        raise ParameterError(f"plethysm_p needs a >= 1, got {a}")
    if a == 1:
        return g
    res = PExpr.__new__(PExpr)
    res.terms = {tuple(a * p for p in k): v for k, v in g.terms.items()}
    return res


def _newton_plethysm(m: int, g: PExpr, sign: int) -> PExpr:
    if m < 0:
        raise ParameterError(f"plethysm order must be >= 0, got {m}")
    pg: dict[int, PExpr] = {}
    out = [PExpr.one()]
    for j in range(1, m + 1):
        acc = PExpr.zero()
        for r in range(1, j + 1):
            pr = pg.get(r)
            if pr is None:
                pr = plethysm_p(r, g)
                pg[r] = pr
            term = pr * out[j - r]
            acc = acc + (term if sign == 1 or r % 2 == 1 else -term)
        out.append(acc * Fraction(1, j))
    return out[m]


def plethysm_h(m: int, g: PExpr) -> PExpr:
    """h_m[g] via the Newton recurrence m*h_m[g] = sum_r p_r[g]*h_{m-r}[g]."""
    return _newton_plethysm(m, g, 1)


def plethysm_e(m: int, g: PExpr) -> PExpr:
    """e_m[g] via m*e_m[g] = sum_r (-1)^(r-1) p_r[g]*e_{m-r}[g]."""
    return _newton_plethysm(m, g, -1)


# ---------------------------------------------------------------------------
# Graded series


class Series:
    """Graded series sum_d f_d with f_d homogeneous of degree d, d <= trunc.

    Components beyond the truncation degree are unknown (not zero);
    reading one raises TruncationError.  Instances memoize the plethysms
    h_m[f_i] / e_m[f_i] they hand out, so repeated partition-indexed
    products over the same series stay cheap.
    """

    __slots__ = ("components", "trunc", "_pleth_cache")

    def __init__(self, components: dict[int, PExpr], trunc: int):
        if trunc < 0:
            raise ParameterError("series truncation must be >= 0")
        self.trunc = trunc
        self.components: dict[int, PExpr] = {}
        for d, f in components.items():
            if d > trunc or not f:
                continue
            fd = f.homogeneous_degree()
            if fd is not None and fd != d:
                raise DegreeError(f"component at degree {d} has degree {fd}")
            self.components[d] = f
        self._pleth_cache: dict[tuple[str, int, int], PExpr] = {}

    @staticmethod
    def from_function(fn, trunc: int, start: int = 1) -> "Series":
        return Series({d: fn(d) for d in range(start, trunc + 1)}, trunc)

    @staticmethod
    def one(trunc: int) -> "Series":
        return Series({0: PExpr.one()}, trunc)

    def component(self, d: int) -> PExpr:
        if d > self.trunc:
            raise TruncationError(
                f"degree {d} beyond series truncation {self.trunc}"
            )
        return self.components.get(d, PExpr.zero())

    def truncate(self, n: int) -> "Series":
        return Series({d: f for d, f in self.components.items() if d <= n}, min(n, self.trunc))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return all(self.component(d) == other.component(d) for d in range(n + 1))

    def __add__(self, other: "Series") -> "Series":
        n = min(self.trunc, other.trunc)
        return Series({d: self.component(d) + other.component(d) for d in range(n + 1)}, n)

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.trunc, other.trunc)
        return Series({d: self.component(d) - other.component(d) for d in range(n + 1)}, n)

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            n = min(self.trunc, other.trunc)
            out = {d: PExpr.zero() for d in range(n + 1)}
            for a, fa in self.components.items():
                if a > n:
                    continue
                for b, fb in other.components.items():
                    if a + b <= n:
                        out[a + b] = out[a + b] + fa * fb
            return Series(out, n)
        return Series(
            {d: f * other for d, f in self.components.items()}, self.trunc
        )

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires constant term exactly 1."""
        if self.component(0) != PExpr.one():
            raise ParameterError("series inverse needs constant term 1")
        inv = {0: PExpr.one()}
        for d in range(1, self.trunc + 1):
            acc = PExpr.zero()
            for k in range(1, d + 1):
                acc = acc + self.component(k) * inv[d - k]
            inv[d] = -acc
        return Series(inv, self.trunc)

    def substitute_p(self, a: int) -> "Series":
        """The series with p_i -> p_{a*i} applied to every component (degree a*d)."""
        if a < 1:
            raise ParameterError("substitute_p needs a >= 1")
        return Series(
            {a * d: plethysm_p(a, f) for d, f in self.components.items()},
            a * self.trunc,
        )

    def omega(self) -> "Series":
        return Series({d: omega(f) for d, f in self.components.items()}, self.trunc)

    def alternate(self) -> "Series":
        """Flip the sign of every even-degree component (Q -> Q^alt)."""
        return Series(
            {d: (f if d % 2 == 1 else -f) for d, f in self.components.items() if d >= 1},
            self.trunc,
        )

    def restrict(self, keep) -> "Series":
        """Zero out every component whose degree fails the predicate."""
        return Series(
            {d: f for d, f in self.components.items() if keep(d)}, self.trunc
        )

    def _pleth(self, kind: str, i: int, m: int) -> PExpr:
        key = (kind, i, m)
        out = self._pleth_cache.get(key)
        if out is None:
            g = self.component(i)
            out = plethysm_h(m, g) if kind == "h" else plethysm_e(m, g)
            self._pleth_cache[key] = out
        return out


def H_lambda(lam: Partition, F: Series) -> PExpr:
    """prod over distinct parts i of h_{m_i}[f_i]; 1 for the empty partition."""
    out = PExpr.one()
    i = 0
    while i < len(lam):
        part = lam[i]
        m = 1
        while i + m < len(lam) and lam[i + m] == part:
            m += 1
        out = out * F._pleth("h", part, m)
        i += m
    return out


def E_lambda(lam: Partition, F: Series) -> PExpr:
    """prod over distinct parts i of e_{m_i}[f_i]; 1 for the empty partition."""
    out = PExpr.one()
    i = 0
    while i < len(lam):
        part = lam[i]
        m = 1
        while i + m < len(lam) and lam[i + m] == part:
            m += 1
        out = out * F._pleth("e", part, m)
        i += m
    return out


def plethystic_sum(
    F: Series,
    n: int,
    kind: str = "h",
    parity: int | None = None,
    signed: str | None = None,
) -> PExpr:
    """sum over lam |- n of (optional sign) * H_lambda or E_lambda.

    parity: keep only lam with (n - len(lam)) % 2 == parity.
    signed: "sign-exponent" weights by (-1)^(n - len(lam)),
            "length" weights by (-1)^len(lam).
    """
    if kind not in ("h", "e"):
        raise ParameterError(f"kind must be 'h' or 'e', got {kind!r}")
    total = PExpr.zero()
    for lam in partitions_of(n):
        if parity is not None and sign_exponent(lam) % 2 != parity:
            continue
        term = H_lambda(lam, F) if kind == "h" else E_lambda(lam, F)
        if signed == "sign-exponent" and sign_exponent(lam) % 2 == 1:
            term = -term
        elif signed == "length" and len(lam) % 2 == 1:
            term = -term
        total = total + term
    return total


def series_H(F: Series, trunc: int | None = None) -> Series:
    """The symmetric-power series of F: degree-n component sum_{lam|-n} H_lambda[F]."""
    n = F.trunc if trunc is None else min(trunc, F.trunc)
    return Series({d: plethystic_sum(F, d, "h") for d in range(n + 1)}, n)


def series_E(F: Series, trunc: int | None = None) -> Series:
    """The exterior-power series of F: degree-n component sum_{lam|-n} E_lambda[F]."""
    n = F.trunc if trunc is None else min(trunc, F.trunc)
    return Series({d: plethystic_sum(F, d, "e") for d in range(n + 1)}, n)


def plethysm_into(f: PExpr, R: Series) -> Series:
    """f[R] for a series R with no constant term, truncated at R.trunc.

    Linear in f; on a monomial c * p_lam it is c * prod_i R[p -> p*lam_i].
    """
    if R.component(0):
        raise ParameterError("plethysm into a series requires zero constant term")
    total = Series({}, R.trunc)
    for key, val in f.terms.items():
        term = Series.one(R.trunc)
        for part in key:
            term = term * R.substitute_p(part).truncate(R.trunc)
        total = total + term * val
    return total


# ---------------------------------------------------------------------------
# Product-form expansions


def _binomial(c: int, j: int) -> int:
    """Generalized binomial C(c, j) for integer c (negative allowed), j >= 0."""
    if j == 0:
        return 1
    if c >= 0:
        return comb(c, j) if j <= c else 0
    return (-1) ** j * comb(-c + j - 1, j)


def product_series(factors, trunc: int) -> Series:
    """prod over (m, c, sign) of (1 + sign*t^m*p_m)^c, truncated at `trunc`.

    Exponents c are integers (negative allowed, via the binomial series);
    sign is +1 or -1.
    """
    out = Series.one(trunc)
    for m, c, sign in factors:
        if m < 1:
            raise ParameterError(f"factor degree must be >= 1, got {m}")
        if sign not in (1, -1):
            raise ParameterError(f"factor sign must be +-1, got {sign}")
        if c == 0 or m > trunc:
            continue
        comps = {}
        for j in range(trunc // m + 1):
            coeff = _binomial(c, j) * sign**j
            if coeff:
                comps[m * j] = PExpr.term((m,) * j, coeff)
        out = out * Series(comps, trunc)
    return out


def product_expansion(factors, n: int) -> PExpr:
    """Coefficient of t^n in prod (1 + sign*t^m*p_m)^c."""
    if n < 0:
        raise ParameterError("degree must be >= 0")
    return product_series(factors, n).component(n)
