"""Symmetric-group characters and Schur expansions.

Character values chi^nu(mu) are computed by border-strip recursion on
beta-numbers (first-column hook lengths): removing a strip of size k is
moving a bead from b to b-k, with sign (-1)^(beads jumped over).  Strips
are removed for the largest remaining part of mu first, and values are
memoized on (remaining shape, remaining class).

A small alternant oracle recomputes chi^nu(mu) for n <= 6 from the
bialternant definition, fully independently of the recursion.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import CapacityError, DegreeError, ParameterError
from .partitions import Partition, partitions_of, pretty, z_lambda
from .symfunc import PExpr

ALTERNANT_MAX_N = 6


def _strip_removals(lam: Partition, k: int):
    """All ways to remove a border strip of size k: (smaller shape, height)."""
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    bset = set(beta)
    out = []
    for idx, b in enumerate(beta):
        nb = b - k
        if nb >= 0 and nb not in bset:
            height = sum(1 for c in beta if nb < c < b)
            newbeta = sorted((bset - {b}) | {nb}, reverse=True)
            parts = tuple(
                nb_j - (length - 1 - j) for j, nb_j in enumerate(newbeta)
            )
            out.append((tuple(p for p in parts if p > 0), height))
    return out


@lru_cache(maxsize=None)
def _mn(nu: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not nu else 0
    k, rest = mu[0], mu[1:]
    total = 0
    for smaller, height in _strip_removals(nu, k):
        val = _mn(smaller, rest)
        total += -val if height % 2 else val
    return total


def mn_character(nu: Partition, mu: Partition) -> int:
    """chi^nu evaluated on the class of cycle type mu."""
    if sum(nu) != sum(mu):
        raise ParameterError(
            f"shape {nu} and class {mu} have different sizes"
        )
    return _mn(tuple(nu), tuple(sorted(mu, reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    """Full matrix chi^nu(mu), rows and columns in reverse-lex order."""

    n: int
    parts: tuple[Partition, ...]
    rows: tuple[tuple[int, ...], ...]
    index: dict[Partition, int] = field(repr=False, default=None)

    def chi(self, nu: Partition, mu: Partition) -> int:
        return self.rows[self.index[tuple(nu)]][self.index[tuple(mu)]]


_table_lock = threading.Lock()


@lru_cache(maxsize=None)
def _build_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    rows = tuple(
        tuple(mn_character(nu, mu) for mu in parts) for nu in parts
    )
    index = {lam: i for i, lam in enumerate(parts)}
    return CharacterTable(n, parts, rows, index)


def character_table(n: int, max_n: int = 20) -> CharacterTable:
    """Character table of degree n, built once per process and shared read-only."""
    if n < 0:
        raise ParameterError(f"character table needs n >= 0, got {n}")
    if n > max_n:
        raise CapacityError(f"character table degree {n} beyond cap {max_n}")
    with _table_lock:
        return _build_table(n)


# ---------------------------------------------------------------------------
# Schur expansions


VERDICTS = ("POSITIVE", "NONNEGATIVE", "MIXED", "NON_INTEGRAL")


@dataclass(frozen=True)
class SchurExpansion:
    """Sparse map nu -> multiplicity with a positivity verdict.

    POSITIVE: every nu |- n occurs with multiplicity >= 1.
    NONNEGATIVE: all multiplicities are integers >= 0.
    MIXED: integral but some multiplicity is negative.
    NON_INTEGRAL: some multiplicity is not an integer.
    """

    n: int
    mults: dict[Partition, Fraction]
    verdict: str

    def mult(self, nu: Partition) -> Fraction:
        return self.mults.get(tuple(nu), Fraction(0))

    def to_json_dict(self) -> dict:
        out = {}
        for nu in partitions_of(self.n):
            m = self.mults.get(nu)
            if m:
                key = "[" + ",".join(str(p) for p in nu) + "]"
                out[key] = int(m) if m.denominator == 1 else str(m)
        return {"n": self.n, "mults": out, "verdict": self.verdict}

    def pretty(self) -> str:
        bits = []
        for nu in partitions_of(self.n):
            m = self.mults.get(nu)
            if m:
                c = str(int(m)) if m.denominator == 1 else str(m)
                bits.append(f"{c}·{pretty(nu)}")
        return " + ".join(bits) if bits else "0"


def _verdict(n: int, mults: dict[Partition, Fraction]) -> str:
    if any(m.denominator != 1 for m in mults.values()):
        return "NON_INTEGRAL"
    if any(m < 0 for m in mults.values()):
        return "MIXED"
    if all(mults.get(nu, 0) >= 1 for nu in partitions_of(n)):
        return "POSITIVE"
    return "NONNEGATIVE"


def to_schur(f: PExpr, n: int | None = None, max_n: int = 20) -> SchurExpansion:
    """Expand a homogeneous power-sum expression in the Schur basis.

    mult(nu) = sum_lam c_lam * chi^nu(lam).
    """
    deg = f.homogeneous_degree()
    if deg is None:
        if n is None:
            raise DegreeError("degree of the zero expression must be supplied")
        deg = n
    elif n is not None and n != deg:
        raise DegreeError(f"expression has degree {deg}, expected {n}")
    table = character_table(deg, max_n)
    mults: dict[Partition, Fraction] = {}
    items = [(table.index[lam], c) for lam, c in f.terms.items()]
    for i, nu in enumerate(table.parts):
        row = table.rows[i]
        m = Fraction(0)
        for j, c in items:
            m += c * row[j]
        if m:
            mults[nu] = m
    return SchurExpansion(deg, mults, _verdict(deg, mults))


def schur_to_power(nu: Partition) -> PExpr:
    """s_nu as a power-sum expression: sum_lam chi^nu(lam)/z_lam * p_lam."""
    n = sum(nu)
    table = character_table(n)
    i = table.index[tuple(nu)]
    return PExpr(
        {
            lam: Fraction(table.rows[i][j], z_lambda(lam))
            for j, lam in enumerate(table.parts)
            if table.rows[i][j]
        }
    )


# ---------------------------------------------------------------------------
# Alternant oracle (n <= 6)


@lru_cache(maxsize=None)
def _powersum_poly(mu: Partition, nvars: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Monomial expansion of p_mu in nvars variables, as (exponents, coeff)."""
    poly = {(0,) * nvars: 1}
    for part in mu:
        new: dict[tuple[int, ...], int] = {}
        for expo, coeff in poly.items():
            for i in range(nvars):
                key = expo[:i] + (expo[i] + part,) + expo[i + 1 :]
                new[key] = new.get(key, 0) + coeff
        poly = new
    return tuple(poly.items())


def alternant_oracle(nu: Partition, mu: Partition) -> int:
    """chi^nu(mu) as the coefficient of x^(nu+delta) in p_mu * a_delta, n <= 6."""
    n = sum(nu)
    if sum(mu) != n:
        raise ParameterError(f"shape {nu} and class {mu} have different sizes")
    if n > ALTERNANT_MAX_N:
        raise CapacityError(f"alternant oracle capped at n={ALTERNANT_MAX_N}")
    if n == 0:
        return 1
    delta = tuple(range(n - 1, -1, -1))
    target = tuple((tuple(nu) + (0,) * n)[i] + delta[i] for i in range(n))
    poly = dict(_powersum_poly(tuple(sorted(mu, reverse=True)), n))
    total = 0
    for perm in permutations(range(n)):
        expo = tuple(delta[p] for p in perm)
        rem = tuple(target[i] - expo[i] for i in range(n))
        if any(x < 0 for x in rem):
            continue
        coeff = poly.get(rem)
        if coeff:
            total += _parity(perm) * coeff
    return total


def _parity(perm: tuple[int, ...]) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1
