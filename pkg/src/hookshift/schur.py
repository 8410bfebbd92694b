"""Schur-basis symmetric function arithmetic with exact coefficients.

Expansions are finite maps from partitions to coefficients in any exact
commutative ring: int, Fraction, or ExactPolynomial all work.  The only
product ever needed is multiplication by the first power sum, which the
Pieri rule turns into pure bookkeeping on partitions, so Schur-basis
equality of the two sides of the main symmetric-function identity is a
dictionary comparison.  A monomial-basis expansion through semistandard
tableau counts serves as an independent oracle.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping

from .identities import VerificationOutcome, g_poly
from .partitions import (
    Partition,
    enumerate_partitions,
    hook_product,
    single_box_additions,
)
from .polynomials import ExactPolynomial, rising_binomial


def _coeff_json(c):
    if isinstance(c, ExactPolynomial):
        return [[k, s] for k, s in c.serialize()]
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}"


class SchurExpansion:
    """Homogeneous linear combination of Schur functions.

    Zero coefficients are pruned on construction; all index partitions
    must have one common size (the degree).  The empty expansion has
    degree ``None``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Partition, object] = {}
        degree = None
        for lam, c in items:
            if not c:
                continue
            lam = Partition(lam)
            if degree is None:
                degree = lam.size
            elif lam.size != degree:
                raise ValueError(
                    f"mixed degrees {degree} and {lam.size} in one expansion"
                )
            out[lam] = out[lam] + c if lam in out else c
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def unit(cls, lam: Partition) -> "SchurExpansion":
        return cls({Partition(lam): 1})

    @property
    def degree(self) -> int | None:
        for lam in self.terms:
            return lam.size
        return None

    def items(self):
        """Terms in reverse-lexicographic partition order."""
        return [(lam, self.terms[lam]) for lam in sorted(self.terms, reverse=True)]

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        a, b = self.degree, other.degree
        if a is not None and b is not None and a != b:
            raise ValueError(f"cannot add expansions of degrees {a} and {b}")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SchurExpansion(out)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + other.scale(-1)

    def scale(self, c) -> "SchurExpansion":
        if not c:
            return SchurExpansion()
        return SchurExpansion({lam: v * c for lam, v in self.terms.items()})

    def map_coefficients(self, fn) -> "SchurExpansion":
        return SchurExpansion({lam: fn(c) for lam, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def serialize(self) -> list[dict]:
        return [
            {"partition": str(lam), "coefficient": _coeff_json(c)}
            for lam, c in self.items()
        ]

    def __repr__(self) -> str:
        body = ", ".join(f"s[{lam}]*({c})" for lam, c in self.items())
        return f"SchurExpansion({body or '0'})"


class MonomialExpansion:
    """Linear combination of monomial symmetric functions, same contract as
    SchurExpansion but in the monomial basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Partition, object] = {}
        for mu, c in items:
            if not c:
                continue
            mu = Partition(mu)
            out[mu] = out[mu] + c if mu in out else c
        self.terms = {k: v for k, v in out.items() if v}

    def items(self):
        return [(mu, self.terms[mu]) for mu in sorted(self.terms, reverse=True)]

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out[mu] + c if mu in out else c
        return MonomialExpansion(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        body = ", ".join(f"m[{mu}]*({c})" for mu, c in self.items())
        return f"MonomialExpansion({body or '0'})"


def pieri_p1(a: SchurExpansion) -> SchurExpansion:
    """Multiply by the first power sum: each s_mu maps to the sum of s_lam
    over the partitions lam that add one box to mu.  Raises the degree by
    exactly one."""
    out: dict[Partition, object] = {}
    for mu, c in a.terms.items():
        for lam in single_box_additions(mu):
            out[lam] = out[lam] + c if lam in out else c
    return SchurExpansion(out)


def elementary_as_schur(k: int) -> SchurExpansion:
    """The k-th elementary symmetric function, i.e. the single-column Schur
    function s_(1^k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return SchurExpansion.unit(Partition((1,) * k))


def schur_lhs(n: int) -> SchurExpansion:
    """Sum over k of rising_binomial(k) * p1^k e_(n-k), in the Schur basis.

    Homogeneous of degree n with polynomial coefficients.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = SchurExpansion()
    for k in range(n + 1):
        term = elementary_as_schur(n - k)
        for _ in range(k):
            term = pieri_p1(term)
        total = total + term.scale(rising_binomial(k))
    return total


def schur_rhs(n: int) -> SchurExpansion:
    """Sum over partitions of n of g(x+n) / (hook product) times s_lam."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SchurExpansion(
        {
            lam: g_poly(lam).shift(n) * Fraction(1, hook_product(lam))
            for lam in enumerate_partitions(n)
        }
    )


def check_theorem_1_2(n: int, limit: int = 9, capture: bool = False) -> VerificationOutcome:
    """Structural Schur-basis equality of the two sides at degree n.

    Schur functions are linearly independent, so coefficient-map equality
    is the correct notion of symmetric-function equality here.
    """
    if not 0 <= n <= limit:
        raise ValueError(f"n = {n} outside 0..{limit}")
    start = time.perf_counter()
    lhs = schur_lhs(n)
    rhs = schur_rhs(n)
    passed = lhs == rhs
    witness = (
        (json.dumps(lhs.serialize()), json.dumps(rhs.serialize()))
        if capture or not passed
        else (None, None)
    )
    return VerificationOutcome(
        identity="THM_1_2",
        partition=None,
        corner_index=None,
        status="pass" if passed else "fail",
        lhs=witness[0],
        rhs=witness[1],
        elapsed=time.perf_counter() - start,
    )


def _shift_coefficients(a: SchurExpansion, delta: int) -> SchurExpansion:
    return a.map_coefficients(lambda c: c.shift(delta))


def check_schur_recurrences(n: int, limit: int = 8, capture: bool = False) -> VerificationOutcome:
    """Both one-step recurrences at degree n: each side of the main identity
    equals its own x -> x-1 substitution plus p1 times the previous degree.

    Substitution acts coefficient-wise through polynomial shift by -1.
    """
    if not 1 <= n <= limit:
        raise ValueError(f"n = {n} outside 1..{limit}")
    start = time.perf_counter()
    failures = []
    for label, side in (("rhs", schur_rhs), ("lhs", schur_lhs)):
        cur = side(n)
        expect = _shift_coefficients(cur, -1) + pieri_p1(side(n - 1))
        if cur != expect:
            failures.append((label, cur, expect))
    passed = not failures
    lhs_w = rhs_w = None
    if failures or capture:
        shown = failures if failures else [("rhs", schur_rhs(n), schur_rhs(n))]
        label, cur, expect = shown[0]
        lhs_w = json.dumps({"side": label, "value": cur.serialize()})
        rhs_w = json.dumps({"side": label, "value": expect.serialize()})
    return VerificationOutcome(
        identity="REC_3",
        partition=None,
        corner_index=None,
        status="pass" if passed else "fail",
        lhs=lhs_w,
        rhs=rhs_w,
        elapsed=time.perf_counter() - start,
    )


def kostka(lam: Partition, mu: Partition, limit: int = 8) -> int:
    """Number of semistandard tableaux of shape lam and content mu, by
    exhaustive row-by-row enumeration."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|{lam}| = {lam.size} but |{mu}| = {mu.size}")
    if lam.size > limit:
        raise ValueError(f"|{lam}| = {lam.size} exceeds the oracle limit {limit}")
    if not lam:
        return 1
    rows = list(lam)
    values = len(mu)
    remaining = list(mu)  # how many of each value 1..values are left to place

    def fill(r: int, prev_row: list[int] | None) -> int:
        if r == len(rows):
            return 1
        row = [0] * rows[r]

        def place(col: int, left_min: int) -> int:
            if col == rows[r]:
                return fill(r + 1, row)
            lo = left_min if prev_row is None else max(left_min, prev_row[col] + 1)
            total = 0
            for v in range(lo, values + 1):
                if remaining[v - 1]:
                    remaining[v - 1] -= 1
                    row[col] = v
                    total += place(col + 1, v)  # rows weakly increase
                    remaining[v - 1] += 1
            return total

        return place(0, 1)

    return fill(0, None)


def to_monomial(a: SchurExpansion, limit: int = 8) -> MonomialExpansion:
    """Expand Schur terms into the monomial basis through Kostka numbers."""
    degree = a.degree
    if degree is not None and degree > limit:
        raise ValueError(f"degree {degree} exceeds the oracle limit {limit}")
    out: dict[Partition, object] = {}
    if degree is None:
        return MonomialExpansion()
    shapes = list(enumerate_partitions(degree))
    for lam, c in a.terms.items():
        for mu in shapes:
            k = kostka(lam, mu, limit=limit)
            if k:
                add = c * k
                out[mu] = out[mu] + add if mu in out else add
    return MonomialExpansion(out)


def monomial_times_p1(a: MonomialExpansion) -> MonomialExpansion:
    """Multiply a monomial expansion by the first power sum directly, by
    convolving exponent vectors; independent of the Pieri route."""
    out: dict[Partition, object] = {}
    for mu, c in a.terms.items():
        for nu, mult in _monomial_p1_row(tuple(mu)).items():
            add = c * mult
            out[nu] = out[nu] + add if nu in out else add
    return MonomialExpansion(out)


def _monomial_p1_row(mu: tuple[int, ...]) -> dict[Partition, int]:
    # one extra variable is enough: the result has at most len(mu)+1 parts
    nvars = len(mu) + 1
    padded = mu + (0,) * (nvars - len(mu))
    counts: Counter = Counter()
    for alpha in set(permutations(padded)):
        for i in range(nvars):
            counts[alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]] += 1
    out = {}
    for beta, c in counts.items():
        if all(beta[i] >= beta[i + 1] for i in range(nvars - 1)):
            out[Partition(p for p in beta if p)] = c
    return out
