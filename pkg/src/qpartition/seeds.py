"""Seed-partition transforms and the marker products behind them.

Every class partition is reached from a unique *seed*: rewrite each adjacent
pair of equal even parts (2k)+(2k) as the consecutive odd parts
(2k-1)+(2k+1).  Against the odd staircase beta = 1,3,5,...,2m-1 the seed
leaves a difference partition mu (zeros allowed); maximal runs of one
non-zero even mu-value with even multiplicity are the *toggle groups*, and
flipping any subset of the groups back to repeated evens enumerates the whole
class -- 2^e partitions for e groups.

Variant quirks at the bottom end:

* D: a leading run of mu-zeros (seed starting 1,3,5,...) is left alone;
  rewriting 1+3 into 2+2 is exactly what condition (d) forbids.
* D': the seed may start 1,3,... even though 1 is banned in the class; the
  leading zero run must have even length and is rewritten pairwise
  (1,3 -> 2,2; 5,7 -> 6,6; ...) in every output.
* D'': classes are the D' classes shifted up by 2 per part, so the mandatory
  run is the leading mu-value-2 run (seed starting 3,5,...), rewritten the
  same way; higher even-valued groups stay optional.

``product_A`` and ``product_B`` are the bookkeeping products: coefficient of
a^e t^m q^w counts partitions of w into m parts >= 0 (zeros unrestricted for
A, zeros in pairs for B) with e distinct non-zero even values of even
multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import KrVariant, as_parts, check_kr
from .series import BiSeries


def staircase(m: int) -> tuple[int, ...]:
    """The base partition 1, 3, 5, ..., 2m-1."""
    return tuple(2 * i - 1 for i in range(1, m + 1))


@dataclass(frozen=True)
class SeedGroup:
    """A toggleable run mu[start:stop] of one even value (even multiplicity)."""

    start: int
    stop: int
    value: int


@dataclass(frozen=True)
class SeedDecomposition:
    """Seed split against the odd staircase: seed = base + mu, with groups."""

    seed: tuple[int, ...]
    base: tuple[int, ...]
    mu: tuple[int, ...]
    groups: tuple[SeedGroup, ...]
    forced_prefix: int  # leading mu entries rewritten unconditionally

    @property
    def toggle_count(self) -> int:
        return len(self.groups)


def to_seed(p, variant: KrVariant) -> tuple[int, ...]:
    """Rewrite every repeated even pair (2k)+(2k) as (2k-1)+(2k+1).

    Requires a partition in the class; the result is sorted, has the same
    weight and length, and is a fixed point of this map.
    """
    parts = as_parts(p)
    if not check_kr(parts, variant):
        raise ValueError("not a class-%s partition: %s" % (variant.value, parts))
    out = list(parts)
    changed = True
    while changed:  # one pass suffices for class partitions; loop is cheap insurance
        changed = False
        i = 0
        while i < len(out) - 1:
            if out[i] == out[i + 1] and out[i] % 2 == 0:
                v = out[i]
                out[i], out[i + 1] = v - 1, v + 1
                changed = True
                i += 2
            else:
                i += 1
        out.sort()
    return tuple(out)


def _is_seed_shape(parts: tuple[int, ...]) -> bool:
    """Fixed point of the even-pair rewrite with legally spaced parts."""
    for i in range(len(parts) - 1):
        if parts[i + 1] - parts[i] == 0 and parts[i] % 2 == 0:
            return False
        if parts[i + 1] - parts[i] == 1:
            return False
    return True


def seed_decomposition(seed, variant: KrVariant) -> SeedDecomposition:
    """Validate a seed and locate its toggle groups.

    Raises ValueError when ``seed`` cannot be the seed of any partition in
    the class (negative mu, ill-shaped runs, odd mandatory runs, ...).
    """
    parts = as_parts(seed)
    if any(x < 1 for x in parts):
        raise ValueError("seed parts must be >= 1")
    if not _is_seed_shape(parts):
        raise ValueError("not a seed: %s" % (parts,))
    base = staircase(len(parts))
    mu = tuple(parts[i] - base[i] for i in range(len(parts)))
    if any(x < 0 for x in mu):
        raise ValueError("seed lies below the odd staircase: %s" % (parts,))
    if any(mu[i] > mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError("seed gaps out of order: %s" % (parts,))

    forced_value = {KrVariant.D: None, KrVariant.DPRIME: 0, KrVariant.DPRIMEPRIME: 2}[
        variant
    ]
    forced_prefix = 0
    if mu and forced_value is not None and mu[0] == forced_value:
        while forced_prefix < len(mu) and mu[forced_prefix] == forced_value:
            forced_prefix += 1
        if forced_prefix % 2 != 0:
            raise ValueError(
                "leading run of %d must have even length for variant %s: %s"
                % (forced_value, variant.value, parts)
            )

    groups = []
    i = forced_prefix
    while i < len(mu):
        j = i
        while j < len(mu) and mu[j] == mu[i]:
            j += 1
        v = mu[i]
        if v > 0 and v % 2 == 0 and (j - i) % 2 == 0:
            groups.append(SeedGroup(i, j, v))
        i = j
    return SeedDecomposition(parts, base, mu, tuple(groups), forced_prefix)


def _toggle(parts: list[int], start: int, stop: int) -> None:
    # (w, w+2) -> (w+1, w+1) pairwise over an even-length streak
    for r in range(start, stop, 2):
        v = parts[r]
        parts[r], parts[r + 1] = v + 1, v + 1


def expand_seed(seed, variant: KrVariant) -> list[tuple[int, ...]]:
    """All 2^e class partitions generated by a seed, sorted lexicographically.

    Every output is verified against ``check_kr``; a seed that generates any
    invalid partition is rejected as ill-formed.
    """
    dec = seed_decomposition(seed, variant)
    outputs = []
    e = len(dec.groups)
    for mask in range(1 << e):
        parts = list(dec.seed)
        if dec.forced_prefix:
            _toggle(parts, 0, dec.forced_prefix)
        for g_index in range(e):
            if mask >> g_index & 1:
                g = dec.groups[g_index]
                _toggle(parts, g.start, g.stop)
        candidate = tuple(sorted(parts))
        if not check_kr(candidate, variant):
            raise ValueError(
                "ill-formed seed %s: toggle produced %s outside the class"
                % (dec.seed, candidate)
            )
        outputs.append(candidate)
    if len(set(outputs)) != len(outputs):
        raise ValueError("ill-formed seed %s: duplicate expansions" % (dec.seed,))
    return sorted(outputs)


def _marker_product(a: int, max_q: int, max_t: int, zeros_dt: int) -> BiSeries:
    acc = BiSeries.one(max_q, max_t)
    n = 1
    while 2 * n - 1 <= max_q:
        numer = BiSeries.one(max_q, max_t)
        if 2 * n <= max_q and max_t >= 1:
            numer = numer + BiSeries.monomial(1, 2 * n, 1, max_q, max_t)
        if a != 1 and 4 * n <= max_q and max_t >= 2:
            numer = numer + BiSeries.monomial(a - 1, 4 * n, 2, max_q, max_t)
        acc = acc.mul(numer)
        acc = acc.mul_geometric_inverse(1, 2 * n - 1)
        acc = acc.mul_geometric_inverse(2, 4 * n)
        n += 1
    return acc.mul_geometric_inverse(zeros_dt, 0)


def product_A(a: int, max_q: int, max_t: int) -> BiSeries:
    """Marker product with free zeros: trailing factor 1/(1-t)."""
    return _marker_product(a, max_q, max_t, zeros_dt=1)


def product_B(a: int, max_q: int, max_t: int) -> BiSeries:
    """Marker product with zeros in pairs: trailing factor 1/(1-t^2)."""
    return _marker_product(a, max_q, max_t, zeros_dt=2)
