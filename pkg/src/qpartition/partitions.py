"""Partition data model, class predicates, and brute-force counting oracles.

A partition is kept as a non-decreasing tuple of positive integers (zeros are
legal only in auxiliary objects elsewhere; the predicates here reject them).
The three restricted classes share conditions (a)-(c) and differ in one
initial condition:

    (a) no two adjacent parts differ by exactly 1;
    (b) no odd value occurs twice;
    (c) in any window (p_i, p_{i+1}, p_{i+2}): if the middle part is even and
        occurs more than once in the whole partition, then
        p_{i+2} - p_i >= 4;
    variant D:            2+2 never occurs;
    variant D':           no part equals 1;
    variant D'':          no part lies in {1, 2, 3}.

``brute_series`` turns any predicate into a bivariate counting series and is
the enumeration oracle every generating-function identity in this package is
checked against.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Callable, Iterable, Iterator, Optional

from .series import BiSeries


class KrVariant(Enum):
    """Which initial condition completes conditions (a)-(c)."""

    D = "d"
    DPRIME = "d'"
    DPRIMEPRIME = "d''"

    @classmethod
    def from_label(cls, label: str) -> "KrVariant":
        table = {
            "1": cls.D,
            "2": cls.DPRIME,
            "3": cls.DPRIMEPRIME,
            "d": cls.D,
            "d'": cls.DPRIME,
            "d''": cls.DPRIMEPRIME,
        }
        try:
            return table[str(label).strip().lower()]
        except KeyError:
            raise ValueError("unknown variant %r (use 1, 2 or 3)" % (label,)) from None

    @property
    def index(self) -> int:
        return {"d": 1, "d'": 2, "d''": 3}[self.value]


def as_parts(p) -> tuple[int, ...]:
    """Coerce a Partition or iterable of ints to a validated parts tuple."""
    if isinstance(p, Partition):
        return p.parts
    parts = tuple(int(x) for x in p)
    if any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be non-decreasing: %s" % (parts,))
    if any(x < 0 for x in parts):
        raise ValueError("parts must be >= 0: %s" % (parts,))
    return parts


class Partition:
    """Non-decreasing sequence of parts; the universal input object."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int], allow_zeros: bool = False):
        parts = as_parts(parts)
        if not allow_zeros and any(x == 0 for x in parts):
            raise ValueError("zero parts are not allowed here: %s" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return "Partition(%s)" % (self.parts,)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @classmethod
    def parse(cls, text: str, allow_zeros: bool = False) -> "Partition":
        """Parse the comma-separated text form, e.g. ``1,4,4,5``."""
        text = text.strip()
        if not text:
            return cls((), allow_zeros=allow_zeros)
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError("cannot parse partition %r" % text) from None
        return cls(parts, allow_zeros=allow_zeros)

    def __str__(self) -> str:
        return format_parts(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def format_parts(parts: Iterable[int]) -> str:
    return ",".join(str(x) for x in parts)


def _reject_zeros(parts: tuple[int, ...]) -> None:
    if parts and parts[0] == 0:
        raise ValueError("predicate is defined for zero-free partitions only")


def check_kr(p, variant: KrVariant) -> bool:
    """True iff the partition lies in the class named by ``variant``."""
    parts = as_parts(p)
    _reject_zeros(parts)
    for i in range(len(parts) - 1):
        if parts[i + 1] - parts[i] == 1:
            return False  # (a)
    counts = Counter(parts)
    for v, c in counts.items():
        if v % 2 == 1 and c > 1:
            return False  # (b)
    for i in range(len(parts) - 2):
        mid = parts[i + 1]
        if mid % 2 == 0 and counts[mid] > 1 and parts[i + 2] - parts[i] < 4:
            return False  # (c); parts are sorted so the gap is the abs difference
    if variant is KrVariant.D:
        return counts[2] < 2
    if variant is KrVariant.DPRIME:
        return counts[1] == 0
    return counts[1] == 0 and counts[2] == 0 and counts[3] == 0


def check_at_most_twice(p) -> bool:
    """True iff every value has multiplicity <= 2."""
    parts = as_parts(p)
    _reject_zeros(parts)
    return all(c <= 2 for c in Counter(parts).values())


def iter_partitions(n: int, max_len: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as non-decreasing tuples, lexicographic order."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    limit = n if max_len is None else max_len

    def gen(remaining: int, min_part: int, room: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if room == 0 or min_part > remaining:
            return
        for first in range(min_part, remaining + 1):
            for rest in gen(remaining - first, first, room - 1):
                yield (first,) + rest

    return gen(n, 1, limit)


def enumerate_partitions(
    n: int,
    length: Optional[int] = None,
    pred: Optional[Callable[[tuple[int, ...]], bool]] = None,
) -> list[tuple[int, ...]]:
    """Partitions of n (with exactly ``length`` parts if given) passing ``pred``.

    Output is deterministic: lexicographic order of part tuples.
    """
    out = []
    for parts in iter_partitions(n, max_len=length):
        if length is not None and len(parts) != length:
            continue
        if pred is None or pred(parts):
            out.append(parts)
    return out


def brute_series(
    pred: Callable[[tuple[int, ...]], bool], max_q: int, max_t: int
) -> BiSeries:
    """Counting series sum_{n,m} #{partitions of n into m parts, pred} q^n t^m."""
    rows = [[0] * (max_q + 1) for _ in range(max_t + 1)]
    for n in range(max_q + 1):
        for parts in iter_partitions(n, max_len=max_t):
            if pred(parts):
                rows[len(parts)][n] += 1
    return BiSeries._wrap(max_q, max_t, rows)
