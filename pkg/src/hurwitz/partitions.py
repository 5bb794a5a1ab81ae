"""Integer partitions and the multiset statistics the counting formulas consume.

Partitions double as symmetric-group conjugacy classes and as ramification
profiles, so everything downstream keys on the canonical part tuple.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator


class Partition:
    """Weakly decreasing tuple of positive integer parts.

    Immutable and hashable; two partitions are equal iff their part tuples
    are identical.  The empty partition (weight 0) is a first-class value.
    """

    __slots__ = ("parts", "weight")

    parts: tuple[int, ...]
    weight: int

    def __init__(self, parts: Iterable[int] = ()):
        pt = tuple(int(p) for p in parts)
        if any(a < b for a, b in zip(pt, pt[1:])):
            raise ValueError(f"parts must be weakly decreasing: {pt}")
        if pt and pt[-1] <= 0:
            raise ValueError(f"parts must be positive: {pt}")
        self.parts = pt
        self.weight = sum(pt)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of d in descending lexicographic order.

    The order is fixed forever; it indexes character tables and cache files.
    d = 0 yields the single empty partition.
    """
    if d < 0:
        raise ValueError(f"cannot partition a negative integer: {d}")
    return list(_partitions_of(d))


@lru_cache(maxsize=None)
def _partitions_of(d: int) -> tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _descending_lex(d))


def _descending_lex(d: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    cur = (d,)
    while True:
        yield cur
        # rightmost part that can still shrink
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        v = cur[i] - 1
        remaining = len(cur) - i  # the decremented unit plus all trailing ones
        q, r = divmod(remaining, v)
        cur = cur[:i] + (v,) * (q + 1) + ((r,) if r else ())


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths as a partition."""
    if not p.parts:
        return Partition()
    return Partition(sum(1 for v in p.parts if v > i) for i in range(p.parts[0]))


def part_multiplicities(p: Partition) -> list[tuple[int, int]]:
    """(value, multiplicity) pairs, values descending."""
    return [(v, len(list(grp))) for v, grp in itertools.groupby(p.parts)]


def z_order(p: Partition) -> int:
    """Centralizer order of a permutation of this cycle type: prod m_i! * i^m_i."""
    z = 1
    for value, count in part_multiplicities(p):
        z *= factorial(count) * value**count
    return z


def l_star(p: Partition) -> int:
    """Colength: weight minus number of parts."""
    return p.weight - len(p.parts)


def multiplicity(p: Partition, i: int) -> int:
    """Number of parts equal to i."""
    return p.parts.count(i)


def sub_multisets(p: Partition) -> list[tuple[Partition, Partition]]:
    """All ordered splits (nu, sigma) of p's parts with nu and sigma multisets
    whose union is p.  Includes the endpoints (empty, p) and (p, empty); each
    distinct split appears exactly once.
    """
    mults = part_multiplicities(p)
    pairs = []
    for takes in itertools.product(*(range(count + 1) for _, count in mults)):
        nu: list[int] = []
        sigma: list[int] = []
        for (value, count), take in zip(mults, takes):
            nu.extend([value] * take)
            sigma.extend([value] * (count - take))
        pairs.append((Partition(nu), Partition(sigma)))
    return pairs


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts, e.g. "3,1,1".  Whitespace is ignored; an
    empty string is the empty partition.  Parts must already be weakly
    decreasing (typo guard)."""
    compact = "".join(text.split())
    if not compact:
        return Partition()
    try:
        parts = [int(piece) for piece in compact.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def parse_profiles(text: str) -> tuple[Partition, ...]:
    """Parse a semicolon-separated profile set, e.g. "3,1,1;2,2,1".  An empty
    string means no profiles."""
    compact = "".join(text.split())
    if not compact:
        return ()
    return tuple(parse_partition(piece) for piece in compact.split(";"))


def format_profiles(profiles: Iterable[Partition]) -> str:
    return ";".join(str(p) for p in profiles)
