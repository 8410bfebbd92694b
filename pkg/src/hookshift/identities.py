"""Shifted-parts g-polynomials and the checkable identity catalog.

The g-polynomial of a partition of n is the monic degree-n product of
(x + part(i) - i) over i = 1..n, with parts read as 0 beyond the last
row.  The product runs to n, not to the number of rows; the extra
factors (x - i) are what make the difference recurrence close up.

Every identity in the catalog is decided in fully cleared polynomial or
integer form: denominators in x are multiplied out and hook products are
cleared to integers, so no rational-function arithmetic (and none of its
spurious poles) ever occurs.  Witnesses are captured for failures, and
for passes on request.
"""

from __future__ import annotations

import enum
import functools
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Optional, Union

from .partitions import (
    Cell,
    CornerData,
    Partition,
    PartitionError,
    corner_sets,
    hook_lengths,
    hook_product,
)
from .polynomials import (
    ExactPolynomial,
    ONE,
    X,
    difference,
    linear,
    product_of_linear_factors,
)


class IdentityId(enum.Enum):
    """Identifiers of the checkable identities.

    THM_1_1           difference of g over the hook product equals the
                      corner sum of g over hook products
    REC_1_2           tableau-count recurrence over corner removals
    REC_1_3           n over the hook product equals the corner sum of
                      hook-product reciprocals
    REMARK_DN         n-fold difference of g/H is the tableau count
    CORNER_RATIO_2_2  per corner: hook-product ratio equals the g-value
                      ratio at the corner's shifted index
    QUOTIENT_4_2      per corner: the removed partition's g-polynomial as
                      a cleared quotient of the original's
    THM_4_1           corner sum with 1/(x + part(i) - i) weights against
                      the g-quotient, cleared
    EQ_4_6            (x - n) g(x+1) / g(x) as the out/in corner factor
                      quotient, cleared
    THM_4_2           same corner sum against the corner factor quotient,
                      cleared
    COR_4_4           hook-product ratios over corner removals sum to n
    """

    THM_1_1 = "THM_1_1"
    REC_1_2 = "REC_1_2"
    REC_1_3 = "REC_1_3"
    REMARK_DN = "REMARK_DN"
    CORNER_RATIO_2_2 = "CORNER_RATIO_2_2"
    QUOTIENT_4_2 = "QUOTIENT_4_2"
    THM_4_1 = "THM_4_1"
    EQ_4_6 = "EQ_4_6"
    THM_4_2 = "THM_4_2"
    COR_4_4 = "COR_4_4"


PER_CORNER = frozenset({IdentityId.CORNER_RATIO_2_2, IdentityId.QUOTIENT_4_2})

# a captured side: a polynomial, an exact number, pre-rendered text, or absent
Witness = Union["ExactPolynomial", int, Fraction, str, None]


def _serialize_witness(v: Witness):
    if v is None or isinstance(v, str):
        return v
    if isinstance(v, ExactPolynomial):
        return [[k, s] for k, s in v.serialize()]
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


@dataclass
class VerificationOutcome:
    """Result of one identity check at one partition (and corner, if any).

    ``lhs``/``rhs`` hold the compared sides: always for failures, for
    passes only when witness capture was requested.
    """

    identity: str
    partition: Optional[Partition]
    corner_index: Optional[int]
    status: str  # "pass" | "fail"
    lhs: Witness = None
    rhs: Witness = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "partition": str(self.partition) if self.partition is not None else None,
            "corner_index": self.corner_index,
            "status": self.status,
            "lhs": _serialize_witness(self.lhs),
            "rhs": _serialize_witness(self.rhs),
        }


@dataclass(frozen=True)
class Fault:
    """Single deliberate perturbation, used to prove the checks can fail.

    kind "hook" bumps the hook length of one cell of one partition before
    the hook product is taken; kind "g-factor" bumps the constant of one
    linear factor of one partition's g-polynomial.
    """

    kind: str
    partition: Partition
    row: int = 0
    col: int = 0
    index: int = 0
    delta: int = 1

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))
        if self.kind not in ("hook", "g-factor"):
            raise ValueError(f"unknown fault kind {self.kind!r}")
        if self.kind == "hook" and not self.partition.contains_cell(Cell(self.row, self.col)):
            raise ValueError(f"cell ({self.row},{self.col}) outside {self.partition}")
        if self.kind == "g-factor" and not 1 <= self.index <= self.partition.size:
            raise ValueError(f"factor index {self.index} outside 1..{self.partition.size}")

    def to_json(self) -> dict:
        out = {"kind": self.kind, "partition": str(self.partition), "delta": self.delta}
        if self.kind == "hook":
            out["cell"] = [self.row, self.col]
        else:
            out["index"] = self.index
        return out


def shifted_part_constants(lam: Partition) -> list[int]:
    """The constants part(i) - i for i = 1..n of the g-polynomial factors."""
    n = lam.size
    return [lam.part(i) - i for i in range(1, n + 1)]


@functools.cache
def g_poly(lam: Partition) -> ExactPolynomial:
    """Monic degree-n product of (x + part(i) - i), i = 1..n; 1 for n = 0."""
    return product_of_linear_factors(shifted_part_constants(lam))


class Workspace:
    """Compute context for identity checks.

    Hook products, g-polynomials and tableau counts all flow through one
    of these.  Without a fault it simply serves the module-level cached
    functions; with a fault it substitutes the one perturbed value, so a
    whole sweep can be rerun against a single wrong input.
    """

    def __init__(self, fault: Fault | None = None):
        self.fault = fault
        self._perturbed_hook: dict[Partition, int] = {}
        self._perturbed_g: dict[Partition, ExactPolynomial] = {}

    def hook_product(self, lam: Partition) -> int:
        f = self.fault
        if f is not None and f.kind == "hook" and lam == f.partition:
            cached = self._perturbed_hook.get(lam)
            if cached is None:
                grid = [row[:] for row in hook_lengths(lam)]
                grid[f.row - 1][f.col - 1] += f.delta
                cached = prod(h for row in grid for h in row)
                self._perturbed_hook[lam] = cached
            return cached
        return hook_product(lam)

    def g_poly(self, lam: Partition) -> ExactPolynomial:
        f = self.fault
        if f is not None and f.kind == "g-factor" and lam == f.partition:
            cached = self._perturbed_g.get(lam)
            if cached is None:
                constants = shifted_part_constants(lam)
                constants[f.index - 1] += f.delta
                cached = product_of_linear_factors(constants)
                self._perturbed_g[lam] = cached
            return cached
        return g_poly(lam)

    def syt_count(self, lam: Partition) -> int | Fraction:
        """n! / hook product, exactly; a Fraction if a fault breaks divisibility."""
        f = Fraction(factorial(lam.size), self.hook_product(lam))
        return f.numerator if f.denominator == 1 else f


def g_quotient_factors(
    lam: Partition,
) -> tuple[list[ExactPolynomial], list[ExactPolynomial]]:
    """Linear factors of (x - n) g(x+1) / g(x) after cancellation.

    Numerator factors (x + part(i) - i + 1) run over the out-corner rows,
    denominator factors (x + part(i) - i) over the in-corner rows, both in
    increasing row order.  The numerator is always one factor longer.
    """
    corners = corner_sets(lam)
    num = [linear(lam.part(i) - i + 1) for i in corners.out_corners]
    den = [linear(lam.part(i) - i) for i in corners.in_corners]
    return num, den


def corner_quotient_factors(
    lam: Partition, i: int
) -> tuple[list[ExactPolynomial], list[ExactPolynomial]]:
    """Linear factors of g_lam(x+1) / g_mu(x) after cancellation, where mu
    removes the corner in row i.

    Numerator factors are (x + part(j) - j + 1) over the out-corner rows
    of lam that stay at or below index n; denominator factors are
    (x + mu_j - j) over the in-corner rows below n.  Increasing row order.
    """
    n = lam.size
    corners = corner_sets(lam)
    if i not in corners.in_corners:
        raise PartitionError(f"row {i} is not a corner row of {lam}")
    mu = corners.removals[i]
    num = [linear(lam.part(j) - j + 1) for j in corners.out_corners if j <= n]
    den = [linear(mu.part(j) - j) for j in corners.in_corners if j <= n - 1]
    return num, den


def thm_4_2_numerator(lam: Partition) -> ExactPolynomial:
    """The cleared numerator x * prod(in-corner factors) - prod(out-corner
    factors) of the THM_4_2 right side."""
    num, den = g_quotient_factors(lam)
    return X * prod(den, start=ONE) - prod(num, start=ONE)


def _sides(passed: bool, capture: bool, lhs, rhs) -> tuple[Witness, Witness]:
    if passed and not capture:
        return None, None
    return lhs, rhs


def _check_thm_1_1(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    g = ws.g_poly(lam)
    mus = corners.removal_list
    hooks = [ws.hook_product(mu) for mu in mus]
    big = prod(hooks)
    h_lam = ws.hook_product(lam)
    lhs = (g.shift(1) - g) * big
    rhs = ExactPolynomial()
    for mu, h in zip(mus, hooks):
        rhs = rhs + ws.g_poly(mu) * (h_lam * (big // h))
    passed = lhs == rhs
    return [(None, passed, *_sides(passed, capture, lhs, rhs))]


def _check_rec_1_2(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    lhs = ws.syt_count(lam)
    rhs = sum(ws.syt_count(mu) for mu in corners.removal_list)
    passed = lhs == rhs
    return [(None, passed, *_sides(passed, capture, lhs, rhs))]


def _check_rec_1_3(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    hooks = [ws.hook_product(mu) for mu in corners.removal_list]
    big = prod(hooks)
    lhs = lam.size * big
    rhs = ws.hook_product(lam) * sum(big // h for h in hooks)
    passed = lhs == rhs
    return [(None, passed, *_sides(passed, capture, lhs, rhs))]


def _check_remark_dn(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    q = ws.g_poly(lam) * Fraction(1, ws.hook_product(lam))
    for _ in range(lam.size):
        q = difference(q)
    rhs = ExactPolynomial((ws.syt_count(lam),))
    passed = q == rhs
    return [(None, passed, *_sides(passed, capture, q, rhs))]


def _check_corner_ratio_2_2(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    h_lam = ws.hook_product(lam)
    g_lam = ws.g_poly(lam)
    out = []
    for i in corners.in_corners:
        mu = corners.removals[i]
        a = i - lam.part(i)
        lhs = h_lam * ws.g_poly(mu)(a)
        rhs = ws.hook_product(mu) * g_lam(a + 1)
        passed = lhs == rhs
        out.append((i, passed, *_sides(passed, capture, lhs, rhs)))
    return out


def _check_quotient_4_2(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    n = lam.size
    g_lam = ws.g_poly(lam)
    out = []
    for i in corners.in_corners:
        c = lam.part(i) - i
        lhs = ws.g_poly(corners.removals[i]) * linear(c) * linear(-n)
        rhs = g_lam * linear(c - 1)
        passed = lhs == rhs
        out.append((i, passed, *_sides(passed, capture, lhs, rhs)))
    return out


def _corner_sum_factors(lam: Partition, ws: Workspace, corners: CornerData):
    """Shared pieces of the THM_4_1 / THM_4_2 left side, hook-cleared."""
    hooks = [ws.hook_product(corners.removals[i]) for i in corners.in_corners]
    big = prod(hooks)
    h_lam = ws.hook_product(lam)
    constants = [lam.part(i) - i for i in corners.in_corners]
    summed = ExactPolynomial()
    for pos, i in enumerate(corners.in_corners):
        others = product_of_linear_factors(
            c for k, c in enumerate(constants) if k != pos
        )
        summed = summed + others * (h_lam * (big // hooks[pos]))
    return summed, big, product_of_linear_factors(constants)


def _check_thm_4_1(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    n = lam.size
    g = ws.g_poly(lam)
    summed, big, prod_in = _corner_sum_factors(lam, ws, corners)
    lhs = summed * g
    rhs = (X * g - linear(-n) * g.shift(1)) * prod_in * big
    passed = lhs == rhs
    return [(None, passed, *_sides(passed, capture, lhs, rhs))]


def _check_eq_4_6(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    n = lam.size
    g = ws.g_poly(lam)
    num, den = g_quotient_factors(lam)
    lhs = linear(-n) * g.shift(1) * prod(den, start=ONE)
    rhs = g * prod(num, start=ONE)
    passed = lhs == rhs
    return [(None, passed, *_sides(passed, capture, lhs, rhs))]


def _check_thm_4_2(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    summed, big, _ = _corner_sum_factors(lam, ws, corners)
    numerator = thm_4_2_numerator(lam)
    passed = summed == numerator * big
    if passed and not capture:
        return [(None, True, None, None)]
    # witnesses with the hook clearing divided back out, so the right side
    # is the bare quotient numerator
    return [(None, passed, summed * Fraction(1, big), numerator)]


def _check_cor_4_4(lam: Partition, ws: Workspace, corners: CornerData, capture: bool):
    h_lam = ws.hook_product(lam)
    total = sum(
        (Fraction(h_lam, ws.hook_product(mu)) for mu in corners.removal_list),
        start=Fraction(0),
    )
    passed = total == lam.size
    return [(None, passed, *_sides(passed, capture, total, lam.size))]


_CHECKERS = {
    IdentityId.THM_1_1: _check_thm_1_1,
    IdentityId.REC_1_2: _check_rec_1_2,
    IdentityId.REC_1_3: _check_rec_1_3,
    IdentityId.REMARK_DN: _check_remark_dn,
    IdentityId.CORNER_RATIO_2_2: _check_corner_ratio_2_2,
    IdentityId.QUOTIENT_4_2: _check_quotient_4_2,
    IdentityId.THM_4_1: _check_thm_4_1,
    IdentityId.EQ_4_6: _check_eq_4_6,
    IdentityId.THM_4_2: _check_thm_4_2,
    IdentityId.COR_4_4: _check_cor_4_4,
}


def check_identity(
    identity: IdentityId,
    lam: Partition,
    workspace: Workspace | None = None,
    capture: bool = False,
    limit: int | None = None,
) -> list[VerificationOutcome]:
    """Check one identity at one partition.

    Returns one outcome, or one per corner row for the per-corner
    identities.  The compared left/right sides are attached to failures
    always, and to passes when ``capture`` is set.
    """
    if not isinstance(identity, IdentityId):
        raise TypeError(f"expected IdentityId, got {identity!r}")
    if not lam:
        raise PartitionError(f"{identity.value} needs a nonempty partition")
    if limit is not None and lam.size > limit:
        raise ValueError(f"|{lam}| = {lam.size} exceeds the size limit {limit}")
    ws = workspace if workspace is not None else Workspace()
    corners = corner_sets(lam)
    start = time.perf_counter()
    raw = _CHECKERS[identity](lam, ws, corners, capture)
    elapsed = time.perf_counter() - start
    return [
        VerificationOutcome(
            identity=identity.value,
            partition=lam,
            corner_index=corner,
            status="pass" if ok else "fail",
            lhs=lhs,
            rhs=rhs,
            elapsed=elapsed / len(raw),
        )
        for corner, ok, lhs, rhs in raw
    ]
