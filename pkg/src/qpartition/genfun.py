"""Assembly and cross-verification of the generating functions.

Each partition class has three series routes that must agree coefficient
for coefficient on any shared window:

* BRUTE        -- count partitions directly (`partitions.brute_series`);
* ALTERNATING  -- the triple sum over (i, j, k) with a (-1)^k sign;
* POSITIVE     -- the evidently positive multi-sum built from the base
                  polynomials P(m1,m2,m3,s;q^2); every term is nonnegative,
                  which is asserted during accumulation.

At t = 1 the three classes also equal infinite products with moduli 6/12
(PRODUCT form).  The at-most-twice class H has its own product
prod (1 + t q^n + t^2 q^2n), positive sum, and brute count.

The alternating sums iterate over s = i + 2j + 3k while s(s-1) <= max_q:
the q-exponent of every (i, j, k) cell is at least s(s-1), so the cut is
exhaustive on the window.  The positive sums bound the t-degree M by
M^2 <= max_q (a class partition with M parts weighs at least M^2) and the
inner s-range by the observed support window of P, guarded by checking
that P vanishes just past the window edges.

The staircase step all class series share (multiply the t^M slice by
q^{M^2}) is `apply_staircase`; composing it with the marker products
A(t;q;2) / B(t;q;2) must reproduce the kr1/kr2 series, which is one of the
cross-checks in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import ppoly
from .partitions import KrVariant, brute_series, check_at_most_twice, check_kr
from .series import BiSeries, neg_pochhammer_alternating


class Form(Enum):
    BRUTE = "brute"
    ALTERNATING = "alternating"
    POSITIVE = "positive"
    PRODUCT = "product"


class SeriesFamily(Enum):
    KR1 = "kr1"
    KR2 = "kr2"
    KR3 = "kr3"
    H = "h"

    @property
    def variant(self) -> KrVariant:
        if self is SeriesFamily.H:
            raise ValueError("H is not one of the three restricted classes")
        return {
            SeriesFamily.KR1: KrVariant.D,
            SeriesFamily.KR2: KrVariant.DPRIME,
            SeriesFamily.KR3: KrVariant.DPRIMEPRIME,
        }[self]


@dataclass(frozen=True)
class GenFunSpec:
    """A fully pinned series request, as dispatched by the CLI."""

    family: SeriesFamily
    form: Form
    max_q: int
    max_t: int

    def __post_init__(self):
        if self.form is Form.PRODUCT and self.family is not SeriesFamily.H:
            if self.max_t != 0:
                raise ValueError("product form is a t = 1 identity; use max_t = 0")


# ----------------------------------------------------------------- brute

def kr_brute(variant: KrVariant, max_q: int, max_t: int) -> BiSeries:
    return brute_series(lambda parts: check_kr(parts, variant), max_q, max_t)


def h_brute(max_q: int, max_t: int) -> BiSeries:
    return brute_series(check_at_most_twice, max_q, max_t)


# ----------------------------------------------------------- alternating

def _alternating_q_exponent(variant: KrVariant, i: int, j: int, k: int) -> int:
    s = i + 2 * j + 3 * k
    base = s * (s - 1)
    if variant is KrVariant.D:
        return base + i + 6 * j + 3 * k * k + 6 * k
    if variant is KrVariant.DPRIME:
        return base + 2 * i + 2 * j + 3 * k * k + 6 * k
    return base + 4 * i + 6 * j + 3 * k * k + 12 * k


def kr_alternating(variant: KrVariant, max_q: int, max_t: int) -> BiSeries:
    """The signed triple sum over (i, j, k); t-degree is i + 2j + 3k."""
    acc = BiSeries.zero(max_q, max_t)
    s = 0
    while s * (s - 1) <= max_q:
        if s <= max_t:
            for k in range(s // 3 + 1):
                for j in range((s - 3 * k) // 2 + 1):
                    i = s - 3 * k - 2 * j
                    exp = _alternating_q_exponent(variant, i, j, k)
                    if exp > max_q:
                        continue
                    term = BiSeries.monomial(
                        -1 if k % 2 else 1, exp, s, max_q, max_t
                    )
                    for r in range(1, i + 1):
                        term = term.mul_geometric_inverse(0, r)
                    for r in range(1, j + 1):
                        term = term.mul_geometric_inverse(0, 4 * r)
                    for r in range(1, k + 1):
                        term = term.mul_geometric_inverse(0, 6 * r)
                    acc = acc + term
        s += 1
    return acc


# --------------------------------------------------------------- positive

def _guarded_s_range(m1: int, m2: int, m3: int) -> range:
    """Support window of P as a loop bound, with a vanishing guard."""
    lo, hi = ppoly.support_window(m1, m2, m3)
    for s in (hi + 1, hi + 2, hi + 3):
        if ppoly.p(m1, m2, m3, s):
            raise AssertionError(
                "P(%d,%d,%d,%d) is nonzero past the support window" % (m1, m2, m3, s)
            )
    if lo - 1 >= 1 and ppoly.p(m1, m2, m3, lo - 1):
        raise AssertionError(
            "P(%d,%d,%d,%d) is nonzero below the support window" % (m1, m2, m3, lo - 1)
        )
    return range(lo, hi + 1)


def _positive_cell(
    variant: KrVariant,
    m1: int,
    m2: int,
    m3: int,
    n12: int,
    i: int,
    j: int,
    k: int,
    max_q: int,
    max_t: int,
) -> BiSeries | None:
    """Sum over the inner s of one (m1,m2,m3,n12,i,j[,k]) cell, or None."""
    n2 = m1 + m2 + 2 * m3
    cap = 2 * (m1 + m2) + 5 * m3 + n12 + i + 2 * j + k
    if cap > max_t or cap * cap > max_q:
        return None
    if variant is KrVariant.D:
        fixed = i + 4 * j
    elif variant is KrVariant.DPRIME:
        fixed = i
    else:
        fixed = 3 * i + 4 * j + 4 * m1 + 4 * m2 + 10 * m3 + 2 * n12
    cell = None
    for s in _guarded_s_range(m1, m2, m3):
        poly = ppoly.p(m1, m2, m3, s)
        if not poly:
            continue
        m = s - 1
        exponent = 2 * m * n12 + 2 * n12 * n12 + fixed + cap * cap
        if exponent + 2 * (poly.min_degree or 0) > max_q:
            continue
        lifted = BiSeries.from_qpoly(
            poly.stretched(2).shifted(exponent), max_q, max_t, dt=0
        )
        cell = lifted if cell is None else cell + lifted
    if cell is None or cell.is_zero():
        return None
    cell = cell.mul_monomial(1, 0, cap)
    for r in range(1, n12 + 1):
        cell = cell.mul_geometric_inverse(0, 2 * r)
    for r in range(1, n2 + 1):
        cell = cell.mul_geometric_inverse(0, 6 * r)
    for r in range(1, i + 1):
        cell = cell.mul_geometric_inverse(0, 2 * r)
    for r in range(1, j + 1):
        cell = cell.mul_geometric_inverse(0, 4 * r)
    return cell


def kr_positive(variant: KrVariant, max_q: int, max_t: int) -> BiSeries:
    """The evidently positive multi-sum; each cell is checked nonnegative."""
    acc = BiSeries.zero(max_q, max_t)
    mcap = min(max_t, math.isqrt(max_q))
    has_k = variant is KrVariant.D  # the free 1/(1-t) index
    for m1 in range(mcap // 2 + 1):
        for m2 in range((mcap - 2 * m1) // 2 + 1):
            for m3 in range((mcap - 2 * m1 - 2 * m2) // 5 + 1):
                room_s = mcap - 2 * m1 - 2 * m2 - 5 * m3
                for n12 in range(room_s + 1):
                    for i in range(room_s - n12 + 1):
                        for j in range((room_s - n12 - i) // 2 + 1):
                            kmax = room_s - n12 - i - 2 * j if has_k else 0
                            for k in range(kmax + 1):
                                cell = _positive_cell(
                                    variant, m1, m2, m3, n12, i, j, k, max_q, max_t
                                )
                                if cell is None:
                                    continue
                                if not cell.is_nonnegative():
                                    raise AssertionError(
                                        "negative coefficient in a positive-form "
                                        "cell (%d,%d,%d,%d,%d,%d,%d)"
                                        % (m1, m2, m3, n12, i, j, k)
                                    )
                                acc = acc + cell
    return acc


def h_product(max_q: int, max_t: int) -> BiSeries:
    """prod_{n>=1} (1 + t q^n + t^2 q^{2n}), truncated."""
    acc = BiSeries.one(max_q, max_t)
    for n in range(1, max_q + 1):
        factor = BiSeries.one(max_q, max_t)
        if max_t >= 1:
            factor = factor + BiSeries.monomial(1, n, 1, max_q, max_t)
        if max_t >= 2 and 2 * n <= max_q:
            factor = factor + BiSeries.monomial(1, 2 * n, 2, max_q, max_t)
        acc = acc.mul(factor)
    return acc


def h_positive(max_q: int, max_t: int) -> BiSeries:
    """sum P(m1,m2,m3,s;q) q^{m*n12 + n12^2} t^{2m1+2m2+5m3+n12} over cells,
    divided by (q;q)_{n12} (q^3;q^3)_{m1+m2+2m3}."""
    acc = BiSeries.zero(max_q, max_t)
    for m1 in range(max_t // 2 + 1):
        for m2 in range((max_t - 2 * m1) // 2 + 1):
            for m3 in range((max_t - 2 * m1 - 2 * m2) // 5 + 1):
                n2 = m1 + m2 + 2 * m3
                for n12 in range(max_t - 2 * m1 - 2 * m2 - 5 * m3 + 1):
                    tdeg = 2 * m1 + 2 * m2 + 5 * m3 + n12
                    cell = None
                    for s in _guarded_s_range(m1, m2, m3):
                        poly = ppoly.p(m1, m2, m3, s)
                        if not poly:
                            continue
                        exponent = (s - 1) * n12 + n12 * n12
                        if exponent + (poly.min_degree or 0) > max_q:
                            continue
                        lifted = BiSeries.from_qpoly(
                            poly.shifted(exponent), max_q, max_t, dt=0
                        )
                        cell = lifted if cell is None else cell + lifted
                    if cell is None or cell.is_zero():
                        continue
                    cell = cell.mul_monomial(1, 0, tdeg)
                    for r in range(1, n12 + 1):
                        cell = cell.mul_geometric_inverse(0, r)
                    for r in range(1, n2 + 1):
                        cell = cell.mul_geometric_inverse(0, 3 * r)
                    if not cell.is_nonnegative():
                        raise AssertionError(
                            "negative coefficient in an H cell (%d,%d,%d,%d)"
                            % (m1, m2, m3, n12)
                        )
                    acc = acc + cell
    return acc


# ---------------------------------------------------------------- product

_PRODUCT_FACTORS = {
    # (residues, modulus) of 1/(q^a; q^mod)_inf factors
    KrVariant.D: ((1, 4, 6, 8, 11), 12),
    KrVariant.DPRIMEPRIME: ((4, 5, 6, 7, 8), 12),
}


def product_side(variant: KrVariant, max_q: int) -> BiSeries:
    """The t = 1 infinite product of the class, expanded to max_q."""
    acc = BiSeries.one(max_q, 0)
    if variant is KrVariant.DPRIME:
        acc = acc.mul(neg_pochhammer_alternating(0, 6, 12, max_q, 0))
        for a in (2, 3, 4):
            n = 0
            while a + 6 * n <= max_q:
                acc = acc.mul_geometric_inverse(0, a + 6 * n)
                n += 1
        return acc
    residues, mod = _PRODUCT_FACTORS[variant]
    for a in residues:
        n = 0
        while a + mod * n <= max_q:
            acc = acc.mul_geometric_inverse(0, a + mod * n)
            n += 1
    return acc


def product_side_mod12(variant: KrVariant, max_q: int) -> BiSeries:
    """The kr2 product in its modulus-12 printing; other classes unchanged."""
    if variant is not KrVariant.DPRIME:
        return product_side(variant, max_q)
    acc = neg_pochhammer_alternating(0, 6, 12, max_q, 0)
    for a in (2, 3, 4, 8, 9, 10):
        n = 0
        while a + 12 * n <= max_q:
            acc = acc.mul_geometric_inverse(0, a + 12 * n)
            n += 1
    return acc


def marginal_max_t(max_q: int) -> int:
    """Smallest t-window that is exhaustive for a t = 1 evaluation:
    a class partition with m parts weighs at least m^2."""
    return math.isqrt(max_q)


def apply_staircase(series: BiSeries) -> BiSeries:
    """Multiply the t^m slice by q^{m^2} for every m (the base-weight step)."""
    rows = [[0] * (series.max_q + 1) for _ in range(series.max_t + 1)]
    for m, row in enumerate(series._rows):
        shift = m * m
        dst = rows[m]
        for n, c in enumerate(row):
            if c and n + shift <= series.max_q:
                dst[n + shift] = c
    return BiSeries._wrap(series.max_q, series.max_t, rows)


# ---------------------------------------------------------------- compare

@dataclass(frozen=True)
class CompareReport:
    """Coefficientwise diff of two series on their common window."""

    max_q: int
    max_t: int
    mismatches: tuple[tuple[int, int, int, int], ...]  # (n, m, left, right)

    @property
    def equal(self) -> bool:
        return not self.mismatches

    def lines(self, label_a: str = "left", label_b: str = "right") -> list[str]:
        if self.equal:
            return [
                "equal on the window q <= %d, t <= %d" % (self.max_q, self.max_t)
            ]
        out = []
        for n, m, a, b in self.mismatches:
            out.append(
                "mismatch at q^%d t^%d: %s=%d, %s=%d" % (n, m, label_a, a, label_b, b)
            )
        return out


def compare(a: BiSeries, b: BiSeries) -> CompareReport:
    mq = min(a.max_q, b.max_q)
    mt = min(a.max_t, b.max_t)
    mismatches = []
    for m in range(mt + 1):
        ra, rb = a._rows[m], b._rows[m]
        for n in range(mq + 1):
            if ra[n] != rb[n]:
                mismatches.append((n, m, ra[n], rb[n]))
    return CompareReport(mq, mt, tuple(mismatches))


def series_for(spec: GenFunSpec) -> BiSeries:
    """Dispatch a pinned request to the family/form implementations."""
    fam, form = spec.family, spec.form
    if fam is SeriesFamily.H:
        if form is Form.BRUTE:
            return h_brute(spec.max_q, spec.max_t)
        if form is Form.POSITIVE:
            return h_positive(spec.max_q, spec.max_t)
        if form is Form.PRODUCT:
            return h_product(spec.max_q, spec.max_t)
        raise ValueError("the at-most-twice class has no alternating form")
    variant = fam.variant
    if form is Form.BRUTE:
        return kr_brute(variant, spec.max_q, spec.max_t)
    if form is Form.ALTERNATING:
        return kr_alternating(variant, spec.max_q, spec.max_t)
    if form is Form.POSITIVE:
        return kr_positive(variant, spec.max_q, spec.max_t)
    return product_side(variant, spec.max_q)
