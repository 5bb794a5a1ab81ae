"""Hurwitz numbers of the sphere, exactly.

Disconnected counts come from the Frobenius character sum over irreducibles;
connected counts invert the connected/disconnected relation on raw tuple
counts via the orbit of a marked point; the brute-force oracle enumerates
permutation tuples directly and is the independent check on everything else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import _kernels
from .characters import _content, chi, dimension
from .partitions import Partition, enumerate_partitions, l_star, sub_multisets, z_order

DEFAULT_BRUTEFORCE_DEGREE = 4


class BruteForceBoundError(ValueError):
    """Brute-force enumeration request outside the configured bound."""


def canonical_profiles(d: int, profiles) -> tuple[Partition, ...]:
    """Validate profile weights and sort the set into a canonical order."""
    profiles = tuple(profiles)
    for mu in profiles:
        if mu.weight != d:
            raise ValueError(f"profile {mu} is not a partition of {d}")
    return tuple(sorted(profiles, key=lambda p: p.parts, reverse=True))


@dataclass(frozen=True)
class HurwitzQuery:
    """One Hurwitz-number evaluation: degree, fixed ramification profiles, and
    either a transposition count (disconnected) or a genus (connected)."""

    degree: int
    profiles: tuple[Partition, ...] = ()
    transpositions: int | None = None
    genus: int | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        object.__setattr__(self, "profiles", tuple(self.profiles))
        for mu in self.profiles:
            if mu.weight != self.degree:
                raise ValueError(f"profile {mu} is not a partition of {self.degree}")
        if (self.transpositions is None) == (self.genus is None):
            raise ValueError("exactly one of transpositions and genus must be set")
        if self.transpositions is not None and self.transpositions < 0:
            raise ValueError("transposition count must be nonnegative")
        if self.genus is not None:
            # raises when the derived transposition count would be negative
            genus_to_transpositions(self.degree, self.profiles, self.genus)


def genus_to_transpositions(d: int, profiles, g: int) -> int:
    """Number of simple branch points forced by Riemann-Hurwitz:
    2g + 2d - sum of profile colengths - 2."""
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    q = 2 * g + 2 * d - sum(l_star(mu) for mu in profiles) - 2
    if q < 0:
        raise ValueError(f"no such covering: derived transposition count {q} < 0")
    return q


def disconnected(query: HurwitzQuery) -> Fraction:
    """Disconnected Hurwitz number for the query's transposition count."""
    if query.transpositions is None:
        raise ValueError("disconnected queries take a transposition count")
    return disconnected_value(query.degree, query.profiles, query.transpositions)


def connected(query: HurwitzQuery) -> Fraction:
    """Connected Hurwitz number for the query's genus."""
    if query.genus is None:
        raise ValueError("connected queries take a genus")
    return connected_value(query.degree, query.profiles, query.genus)


def disconnected_value(d: int, profiles, k: int) -> Fraction:
    """Frobenius sum over irreducibles, evaluated through the per-degree
    grouping by transposition content so many k share one character pass."""
    if k < 0:
        raise ValueError("transposition count must be nonnegative")
    groups = _content_groups(d, canonical_profiles(d, profiles))
    return sum((coeff * f**k for f, coeff in groups), Fraction(0))


def disconnected_direct(d: int, profiles, k: int) -> Fraction:
    """Term-by-term Frobenius sum; retained as the cross-check path for the
    grouped evaluation."""
    if k < 0:
        raise ValueError("transposition count must be nonnegative")
    profiles = canonical_profiles(d, profiles)
    s = len(profiles)
    dfact = factorial(d)
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        term = Fraction(dimension(lam), dfact) ** (2 - s) * _content(lam) ** k
        for mu in profiles:
            term *= Fraction(chi(lam, mu), z_order(mu))
        total += term
    return total


def connected_value(d: int, profiles, g: int) -> Fraction:
    profiles = canonical_profiles(d, profiles)
    q = genus_to_transpositions(d, profiles, g)
    return Fraction(_tuple_count_connected(d, profiles, q), factorial(d))


def connected_from_transpositions(d: int, profiles, k: int) -> Fraction:
    """Connected count with the transposition number given directly; zero when
    no covering exists (wrong parity or too few transpositions)."""
    if k < 0:
        raise ValueError("transposition count must be nonnegative")
    profiles = canonical_profiles(d, profiles)
    return Fraction(_tuple_count_connected(d, profiles, k), factorial(d))


@lru_cache(maxsize=None)
def _content_groups(d: int, profiles) -> tuple[tuple[int, Fraction], ...]:
    # coefficient sum per distinct signed content value f:
    #   sum over lambda with that f of (dim/d!)^(2-s) * prod chi(mu)/z(mu)
    s = len(profiles)
    dfact = factorial(d)
    groups: dict[int, Fraction] = {}
    for lam in enumerate_partitions(d):
        term = Fraction(dimension(lam), dfact) ** (2 - s)
        for mu in profiles:
            term *= Fraction(chi(lam, mu), z_order(mu))
        if term:
            f = _content(lam)
            groups[f] = groups.get(f, Fraction(0)) + term
    return tuple(sorted(groups.items()))


@lru_cache(maxsize=None)
def _tuple_count_all(d: int, profiles, k: int) -> int:
    # d! times the disconnected Hurwitz number: the number of tuples
    # (alpha_1..alpha_s, tau_1..tau_k) with the given cycle types and
    # identity product.  Always a nonnegative integer.
    value = disconnected_value(d, profiles, k) * factorial(d)
    if value.denominator != 1:
        raise AssertionError(f"tuple count is not an integer: {value}")
    return value.numerator


@lru_cache(maxsize=None)
def _tuple_count_connected(d: int, profiles, k: int) -> int:
    # Inversion by the orbit of point 1: subtract, over every way the orbit
    # can be a proper sub-degree d1, the transitive count on the orbit times
    # the unrestricted count on the complement, with binomial factors for the
    # orbit's point set and the transpositions assigned to it.
    total = _tuple_count_all(d, profiles, k)
    for d1 in range(1, d):
        point_choices = comb(d - 1, d1 - 1)
        for nus, sigmas in _profile_splits(profiles, d1):
            for k1 in range(k + 1):
                left = _tuple_count_connected(d1, nus, k1)
                if left == 0:
                    continue
                right = _tuple_count_all(d - d1, sigmas, k - k1)
                if right == 0:
                    continue
                total -= point_choices * comb(k, k1) * left * right
    return total


def _profile_splits(profiles, d1: int):
    # every positional choice of a weight-d1 sub-multiset from each profile;
    # duplicates after sorting are distinct events and are kept
    options = []
    for mu in profiles:
        opts = [(nu, sigma) for nu, sigma in sub_multisets(mu) if nu.weight == d1]
        if not opts:
            return []
        options.append(opts)
    splits = []
    for combo in itertools.product(*options):
        nus = tuple(sorted((nu for nu, _ in combo), key=lambda p: p.parts, reverse=True))
        sigmas = tuple(sorted((sg for _, sg in combo), key=lambda p: p.parts, reverse=True))
        splits.append((nus, sigmas))
    return splits


def oracle_connected(
    d: int, profiles, k: int, *, max_degree: int = DEFAULT_BRUTEFORCE_DEGREE
) -> Fraction:
    """Definitional count: enumerate permutation tuples with the prescribed
    cycle types and identity product, keep the transitive ones, divide by d!.

    The independent slow path everything else is checked against."""
    profiles = canonical_profiles(d, profiles)
    _check_bruteforce_bound(d, k, max_degree)
    return Fraction(_oracle_tuple_count(d, profiles, k, True), factorial(d))


def oracle_disconnected(
    d: int, profiles, k: int, *, max_degree: int = DEFAULT_BRUTEFORCE_DEGREE
) -> Fraction:
    """Same enumeration without the transitivity restriction."""
    profiles = canonical_profiles(d, profiles)
    _check_bruteforce_bound(d, k, max_degree)
    return Fraction(_oracle_tuple_count(d, profiles, k, False), factorial(d))


def _check_bruteforce_bound(d: int, k: int, max_degree: int) -> None:
    if d <= max_degree or (d == 5 and k <= 6):
        return
    raise BruteForceBoundError(
        f"brute force is bounded to degree {max_degree} (plus degree 5 up to 6 "
        f"transpositions); got degree {d} with {k} transpositions"
    )


def _oracle_tuple_count(d: int, profiles, k: int, transitive: bool) -> int:
    classes = [_class_members(d, mu.parts) for mu in profiles]
    total = 0
    for alphas in itertools.product(*classes):
        total += _kernels.count_transposition_factorizations(d, alphas, k, transitive)
    return total


@lru_cache(maxsize=None)
def _class_members(d: int, parts: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(
        perm for perm in itertools.permutations(range(d)) if _cycle_type(perm) == parts
    )


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for x in range(len(perm)):
        if not seen[x]:
            length = 0
            y = x
            while not seen[y]:
                seen[y] = True
                y = perm[y]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))
