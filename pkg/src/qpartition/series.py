"""Exact truncated power series in q and t, with unbounded integer coefficients.

Two value types cover every series-like object in the package:

* ``QPoly`` -- a univariate polynomial in q, dense integer coefficients,
  trailing zeros trimmed.
* ``BiSeries`` -- a bivariate formal power series in q and t, truncated to a
  rectangular window 0 <= deg_q <= max_q, 0 <= deg_t <= max_t.

Everything is exact Python integer arithmetic; no floating point anywhere.
Values are immutable after construction (operations return new objects), so
instances are safe to share between threads.

Truncation policy: combining two series shrinks to the componentwise minimum
of the windows, so a coefficient is never reported at a degree where one of
the operands was unknown.

Pochhammer convention: infinite products (x; q^b)_inf and the denominators
(q^b; q^b)_n use the n-factor convention (1-x)(1-xq^b)...(1-xq^{b(n-1)}),
the one under which the Euler expansions

    1/(x; q^b)_inf = sum_{n>=0} x^n / (q^b; q^b)_n
    (x; q^b)_inf   = sum_{n>=0} (-1)^n x^n q^{b n(n-1)/2} / (q^b; q^b)_n

hold termwise.  ``finite_pochhammer`` also offers the (n+1)-factor variant
behind ``inclusive=True``.
"""

from __future__ import annotations

from typing import Iterator


class QPoly:
    """Polynomial in q with exact integer coefficients.

    ``coeffs[e]`` is the coefficient of q^e; trailing zeros are trimmed, the
    zero polynomial has empty coeffs and degree ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "QPoly":
        if exp < 0:
            raise ValueError("monomial exponent must be >= 0, got %d" % exp)
        if coeff == 0:
            return cls()
        return cls((0,) * exp + (coeff,))

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def min_degree(self):
        """Smallest exponent with a nonzero coefficient, or None if zero."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, exp: int) -> int:
        if 0 <= exp < len(self.coeffs):
            return self.coeffs[exp]
        return 0

    def terms(self):
        """Nonzero (exponent, coefficient) pairs, ascending exponent."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return QPoly(out)

    def shifted(self, dq: int) -> "QPoly":
        """Multiply by q^dq (dq >= 0)."""
        if dq < 0:
            raise ValueError("negative shift %d" % dq)
        if not self.coeffs:
            return self
        return QPoly((0,) * dq + self.coeffs)

    def stretched(self, k: int) -> "QPoly":
        """Substitute q -> q^k (k >= 1)."""
        if k < 1:
            raise ValueError("stretch factor must be >= 1, got %d" % k)
        if k == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for e, c in enumerate(self.coeffs):
            out[e * k] = c
        return QPoly(out)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def format_q(self) -> str:
        """Human form, descending exponents: ``q^30 + 2q^28 + ... + 3``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "q" if mag == 1 else "%dq" % mag
            else:
                body = "q^%d" % e if mag == 1 else "%dq^%d" % (mag, e)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "QPoly(%s)" % self.format_q()


QPOLY_ZERO = QPoly()
QPOLY_ONE = QPoly((1,))


class BiSeries:
    """Truncated bivariate series: coefficient of t^m q^n at ``_rows[m][n]``.

    The window bounds are inclusive.  Do not mutate ``_rows``; every public
    operation builds a fresh object.
    """

    __slots__ = ("max_q", "max_t", "_rows")

    def __init__(self, max_q: int, max_t: int, rows=None):
        if max_q < 0 or max_t < 0:
            raise ValueError("window bounds must be >= 0")
        object.__setattr__(self, "max_q", max_q)
        object.__setattr__(self, "max_t", max_t)
        if rows is None:
            rows = [[0] * (max_q + 1) for _ in range(max_t + 1)]
        else:
            rows = [list(r) for r in rows]
            if len(rows) != max_t + 1 or any(len(r) != max_q + 1 for r in rows):
                raise ValueError("rows do not match the window bounds")
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @classmethod
    def _wrap(cls, max_q: int, max_t: int, rows) -> "BiSeries":
        # Internal constructor: takes ownership of rows without copying.
        obj = object.__new__(cls)
        object.__setattr__(obj, "max_q", max_q)
        object.__setattr__(obj, "max_t", max_t)
        object.__setattr__(obj, "_rows", rows)
        return obj

    @classmethod
    def zero(cls, max_q: int, max_t: int) -> "BiSeries":
        return cls(max_q, max_t)

    @classmethod
    def one(cls, max_q: int, max_t: int) -> "BiSeries":
        return cls.monomial(1, 0, 0, max_q, max_t)

    @classmethod
    def monomial(cls, c: int, dq: int, dt: int, max_q: int, max_t: int) -> "BiSeries":
        """Single term c * t^dt q^dq; degrees must lie inside the window."""
        if not (0 <= dq <= max_q) or not (0 <= dt <= max_t):
            raise ValueError(
                "monomial degree (dq=%d, dt=%d) outside window (max_q=%d, max_t=%d)"
                % (dq, dt, max_q, max_t)
            )
        rows = [[0] * (max_q + 1) for _ in range(max_t + 1)]
        rows[dt][dq] = c
        return cls._wrap(max_q, max_t, rows)

    @classmethod
    def from_qpoly(cls, poly: QPoly, max_q: int, max_t: int, dt: int = 0) -> "BiSeries":
        """Lift a q-polynomial onto the t^dt slice; overflow degrees drop."""
        if not (0 <= dt <= max_t):
            raise ValueError("t-degree %d outside window" % dt)
        rows = [[0] * (max_q + 1) for _ in range(max_t + 1)]
        row = rows[dt]
        for e, c in enumerate(poly.coeffs[: max_q + 1]):
            row[e] = c
        return cls._wrap(max_q, max_t, rows)

    def coeff(self, n: int, m: int) -> int:
        """Exact coefficient of t^m q^n; out-of-window queries are errors."""
        if not (0 <= n <= self.max_q) or not (0 <= m <= self.max_t):
            raise ValueError(
                "coefficient query (n=%d, m=%d) outside window (max_q=%d, max_t=%d)"
                % (n, m, self.max_q, self.max_t)
            )
        return self._rows[m][n]

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (dt, dq, coefficient) for nonzero terms, sorted by (dt, dq)."""
        for m, row in enumerate(self._rows):
            for n, c in enumerate(row):
                if c:
                    yield (m, n, c)

    def is_zero(self) -> bool:
        return all(not c for row in self._rows for c in row)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for row in self._rows for c in row)

    def _common_window(self, other: "BiSeries") -> tuple[int, int]:
        return min(self.max_q, other.max_q), min(self.max_t, other.max_t)

    def add(self, other: "BiSeries") -> "BiSeries":
        mq, mt = self._common_window(other)
        rows = [
            [a + b for a, b in zip(ra[: mq + 1], rb[: mq + 1])]
            for ra, rb in zip(self._rows[: mt + 1], other._rows[: mt + 1])
        ]
        return BiSeries._wrap(mq, mt, rows)

    __add__ = add

    def __neg__(self) -> "BiSeries":
        rows = [[-c for c in row] for row in self._rows]
        return BiSeries._wrap(self.max_q, self.max_t, rows)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self.add(-other)

    def scale(self, c: int) -> "BiSeries":
        rows = [[c * v for v in row] for row in self._rows]
        return BiSeries._wrap(self.max_q, self.max_t, rows)

    def mul(self, other: "BiSeries") -> "BiSeries":
        """Cauchy product, truncated to the common window."""
        mq, mt = self._common_window(other)
        rows = [[0] * (mq + 1) for _ in range(mt + 1)]
        brows = other._rows
        for t1 in range(min(mt, self.max_t) + 1):
            arow = self._rows[t1]
            for q1 in range(min(mq, len(arow) - 1) + 1):
                a = arow[q1]
                if not a:
                    continue
                qlim = mq + 1 - q1
                for t2 in range(mt + 1 - t1):
                    out = rows[t1 + t2]
                    brow = brows[t2]
                    for q2 in range(min(qlim, len(brow))):
                        b = brow[q2]
                        if b:
                            out[q1 + q2] += a * b
        return BiSeries._wrap(mq, mt, rows)

    __mul__ = mul

    def mul_monomial(self, c: int, dq: int, dt: int) -> "BiSeries":
        """Multiply by c * t^dt q^dq; overflow degrees fall off the window."""
        if dq < 0 or dt < 0:
            raise ValueError("monomial shift degrees must be >= 0")
        rows = [[0] * (self.max_q + 1) for _ in range(self.max_t + 1)]
        for m in range(self.max_t + 1 - dt):
            src = self._rows[m]
            dst = rows[m + dt]
            for n in range(self.max_q + 1 - dq):
                v = src[n]
                if v:
                    dst[n + dq] = c * v
        return BiSeries._wrap(self.max_q, self.max_t, rows)

    def mul_geometric_inverse(self, dt: int, dq: int) -> "BiSeries":
        """Multiply by 1/(1 - t^dt q^dq) = 1 + t^dt q^dq + t^2dt q^2dq + ...

        (dt, dq) = (0, 0) would annihilate the constant term and is rejected.
        """
        if dt < 0 or dq < 0 or (dt, dq) == (0, 0):
            raise ValueError("geometric factor needs (dt, dq) != (0, 0), both >= 0")
        rows = [row[:] for row in self._rows]
        if dt == 0:
            for row in rows:
                for n in range(dq, self.max_q + 1):
                    row[n] += row[n - dq]
        else:
            # rows below m - dt are final before row m is touched
            for m in range(dt, self.max_t + 1):
                src = rows[m - dt]
                dst = rows[m]
                for n in range(dq, self.max_q + 1):
                    if src[n - dq]:
                        dst[n] += src[n - dq]
        return BiSeries._wrap(self.max_q, self.max_t, rows)

    def substitute_scale(self, t_qshift: int, q_stretch: int) -> "BiSeries":
        """Apply t -> t*q^t_qshift, then q -> q^q_stretch.

        t^m q^n maps to t^m q^{q_stretch*(n + m*t_qshift)}; terms pushed past
        max_q are dropped (truncation loss), everything kept is exact.
        """
        if q_stretch < 1:
            raise ValueError("q_stretch must be >= 1")
        if t_qshift < 0:
            raise ValueError("t_qshift must be >= 0")
        rows = [[0] * (self.max_q + 1) for _ in range(self.max_t + 1)]
        for m, src in enumerate(self._rows):
            dst = rows[m]
            base = m * t_qshift
            for n, c in enumerate(src):
                if c:
                    e = q_stretch * (n + base)
                    if e <= self.max_q:
                        dst[e] += c
        return BiSeries._wrap(self.max_q, self.max_t, rows)

    def t_marginal(self) -> "BiSeries":
        """Evaluate at t = 1 by summing over t-degrees; result has max_t = 0."""
        out = [0] * (self.max_q + 1)
        for row in self._rows:
            for n, c in enumerate(row):
                if c:
                    out[n] += c
        return BiSeries._wrap(self.max_q, 0, [out])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.max_q == other.max_q
            and self.max_t == other.max_t
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.max_q, self.max_t, tuple(tuple(r) for r in self._rows)))

    def to_json_dict(self) -> dict:
        """Wire form: decimal-string coefficients guarantee exact round-trips."""
        return {
            "max_q": self.max_q,
            "max_t": self.max_t,
            "terms": [[m, n, str(c)] for m, n, c in self.items()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "BiSeries":
        s = cls(int(d["max_q"]), int(d["max_t"]))
        for m, n, c in d["terms"]:
            s._rows[int(m)][int(n)] = int(c)
        return s

    def __repr__(self) -> str:
        head = []
        for m, n, c in self.items():
            head.append("%d*t^%d*q^%d" % (c, m, n))
            if len(head) >= 6:
                head.append("...")
                break
        body = " + ".join(head) if head else "0"
        return "BiSeries(max_q=%d, max_t=%d: %s)" % (self.max_q, self.max_t, body)


def _check_pochhammer_args(x_dt: int, x_dq: int, base_dq: int) -> None:
    if x_dt < 0 or x_dq < 0:
        raise ValueError("pochhammer argument degrees must be >= 0")
    if base_dq < 1:
        raise ValueError("pochhammer base step must be >= 1 (non-terminating otherwise)")
    if x_dt == 0 and x_dq == 0:
        raise ValueError("pochhammer argument x = 1 is singular")


def inv_pochhammer(x_dt: int, x_dq: int, base_dq: int, max_q: int, max_t: int) -> BiSeries:
    """1/(x; q^base)_inf for x = t^x_dt q^x_dq, as the Euler sum.

    Computed as sum_{n>=0} x^n/(q^base; q^base)_n; each summand is the
    previous one times x/(1 - q^{base*n}), and the loop stops once x^n falls
    off the window.
    """
    _check_pochhammer_args(x_dt, x_dq, base_dq)
    acc = BiSeries.one(max_q, max_t)
    term = BiSeries.one(max_q, max_t)
    n = 1
    while (x_dt == 0 or n * x_dt <= max_t) and (x_dt > 0 or n * x_dq <= max_q):
        term = term.mul_monomial(1, x_dq, x_dt).mul_geometric_inverse(0, base_dq * n)
        if term.is_zero():
            break
        acc = acc + term
        n += 1
    return acc


def inv_pochhammer_product(
    x_dt: int, x_dq: int, base_dq: int, max_q: int, max_t: int
) -> BiSeries:
    """Same value as inv_pochhammer, built as the iterated geometric product."""
    _check_pochhammer_args(x_dt, x_dq, base_dq)
    acc = BiSeries.one(max_q, max_t)
    n = 0
    while x_dq + base_dq * n <= max_q:
        acc = acc.mul_geometric_inverse(x_dt, x_dq + base_dq * n)
        n += 1
    return acc


def neg_pochhammer_alternating(
    x_dt: int, x_dq: int, base_dq: int, max_q: int, max_t: int
) -> BiSeries:
    """(x; q^base)_inf as the alternating Euler sum.

    sum_{n>=0} (-1)^n x^n q^{base*n(n-1)/2} / (q^base; q^base)_n; the term
    ratio is -x q^{base(n-1)} / (1 - q^{base*n}).
    """
    _check_pochhammer_args(x_dt, x_dq, base_dq)
    acc = BiSeries.one(max_q, max_t)
    term = BiSeries.one(max_q, max_t)
    n = 1
    while True:
        min_q = n * x_dq + base_dq * (n * (n - 1)) // 2
        if (x_dt > 0 and n * x_dt > max_t) or (x_dt == 0 and min_q > max_q):
            break
        term = term.mul_monomial(-1, x_dq + base_dq * (n - 1), x_dt)
        term = term.mul_geometric_inverse(0, base_dq * n)
        if term.is_zero():
            break
        acc = acc + term
        n += 1
    return acc


def pochhammer_product(
    x_dt: int, x_dq: int, base_dq: int, max_q: int, max_t: int
) -> BiSeries:
    """(x; q^base)_inf as the direct product of (1 - x q^{base*n}) factors.

    Factors whose q-degree exceeds max_q are identically 1 on the window, so
    the product is finite.
    """
    _check_pochhammer_args(x_dt, x_dq, base_dq)
    acc = BiSeries.one(max_q, max_t)
    n = 0
    while x_dq + base_dq * n <= max_q:
        dq = x_dq + base_dq * n
        if x_dt <= max_t:
            factor = BiSeries.one(max_q, max_t) + BiSeries.monomial(
                -1, dq, x_dt, max_q, max_t
            )
            acc = acc.mul(factor)
        n += 1
    return acc


def finite_pochhammer(
    x_dt: int,
    x_dq: int,
    base_dq: int,
    n: int,
    max_q: int,
    max_t: int,
    inclusive: bool = False,
) -> BiSeries:
    """Finite product (1-x)(1-xq^b)...(1-xq^{b(n-1)}), x = t^x_dt q^x_dq.

    ``inclusive=True`` appends the extra (1 - x q^{b*n}) factor, giving the
    (n+1)-factor variant.  n = 0 without ``inclusive`` is the empty product.
    """
    if n < 0:
        raise ValueError("factor count must be >= 0")
    if x_dt < 0 or x_dq < 0 or base_dq < 0:
        raise ValueError("degrees must be >= 0")
    count = n + 1 if inclusive else n
    acc = BiSeries.one(max_q, max_t)
    for r in range(count):
        dq = x_dq + base_dq * r
        if dq > max_q or x_dt > max_t:
            continue  # factor is 1 on the window
        acc = acc.mul(
            BiSeries.one(max_q, max_t) + BiSeries.monomial(-1, dq, x_dt, max_q, max_t)
        )
    return acc
