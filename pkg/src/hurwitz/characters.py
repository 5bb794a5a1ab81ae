"""Symmetric-group character machinery: exact character values via the
Murnaghan-Nakayama border-strip recursion, central characters, the
transposition content formula, and cacheable full tables.

Everything here is exact integer or rational arithmetic; no floating point.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

from . import _kernels
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    parse_partition,
    z_order,
)
from .serialize import canonical_json

CACHE_FORMAT_VERSION = 1

_registered_tables: dict[int, "CharacterTable"] = {}


class CacheError(ValueError):
    """Character-table cache file is unreadable or fails its integrity check."""


class StaleCacheError(CacheError):
    """Cache file carries an old format version; it is ignored, not deleted."""


def chi(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi_lambda(mu), exact integer.

    Served from a registered table when one is installed for this degree,
    otherwise computed by the memoized border-strip recursion.
    """
    if lam.weight != mu.weight:
        raise ValueError(
            f"weight mismatch: |{lam}| = {lam.weight} but |{mu}| = {mu.weight}"
        )
    table = _registered_tables.get(lam.weight)
    if table is not None:
        return table.value(lam, mu)
    return _kernels.character_value(lam.parts, mu.parts)


def dimension(lam: Partition) -> int:
    """Irreducible representation dimension by the hook-length formula."""
    if lam.weight == 0:
        return 1
    cols = conjugate(lam).parts
    hooks = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hooks *= row - j + cols[j] - i - 1
    return factorial(lam.weight) // hooks


def transposition_class(d: int) -> Partition:
    """The class of a single transposition: one 2 and d-2 fixed points."""
    if d < 2:
        raise ValueError(f"transpositions need degree >= 2, got {d}")
    return Partition((2,) + (1,) * (d - 2))


def _content(lam: Partition) -> int:
    # Signed cell-content total: sum over rows of C(row, 2) minus the same for
    # columns.  Defined for every shape; 0 for weight < 2.
    rows = sum(comb(v, 2) for v in lam.parts)
    cols = sum(comb(v, 2) for v in conjugate(lam).parts)
    return rows - cols


def transposition_content(lam: Partition) -> int:
    """Central character of the transposition class on lambda:
    sum_i C(lambda_i, 2) - sum_i C(lambda'_i, 2).  Antisymmetric under
    conjugation; integer."""
    if lam.weight < 2:
        raise ValueError(f"defined for weight >= 2 only, got |{lam}| = {lam.weight}")
    return _content(lam)


def central_character(theta: Partition, lam: Partition) -> Fraction:
    """Scalar by which the class sum of theta acts on the irreducible lambda:
    (d!/z_theta) * chi_lambda(theta) / dim lambda."""
    if theta.weight != lam.weight:
        raise ValueError(
            f"weight mismatch: |{theta}| = {theta.weight} but |{lam}| = {lam.weight}"
        )
    d = lam.weight
    return Fraction(factorial(d), z_order(theta)) * Fraction(chi(lam, theta), dimension(lam))


def cache_file_name(degree: int) -> str:
    """Cache files are keyed by degree and format version, so stale versions
    are simply never opened."""
    return f"chartable-v{CACHE_FORMAT_VERSION}-d{degree:02d}.json"


class CharacterTable:
    """Square table of exact character values, rows and columns in the fixed
    partition enumeration order."""

    def __init__(self, degree, partitions, values, provenance="computed"):
        self.degree = degree
        self.partitions = tuple(partitions)
        self.values = tuple(tuple(int(v) for v in row) for row in values)
        self.provenance = provenance
        self._index = {p: i for i, p in enumerate(self.partitions)}

    @classmethod
    def build(cls, degree: int) -> "CharacterTable":
        if degree < 1:
            raise ValueError(f"character tables need degree >= 1, got {degree}")
        parts = enumerate_partitions(degree)
        values = [[chi(lam, mu) for mu in parts] for lam in parts]
        return cls(degree, parts, values, provenance="computed")

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self._index[lam]][self._index[mu]]

    def dimensions(self) -> tuple[int, ...]:
        column = self._index[self.partitions[-1]]  # (1^d) is last in the order
        return tuple(row[column] for row in self.values)

    def validate(self) -> None:
        """Column orthogonality and the dimension sum; raises on any failure."""
        d = self.degree
        n = len(self.partitions)
        for j, mu in enumerate(self.partitions):
            for jj in range(j, n):
                dot = sum(self.values[i][j] * self.values[i][jj] for i in range(n))
                expected = z_order(mu) if jj == j else 0
                if dot != expected:
                    raise ValueError(
                        f"column orthogonality failed at degree {d}: "
                        f"mu={mu}, nu={self.partitions[jj]}, got {dot}, "
                        f"expected {expected}"
                    )
        if sum(dim * dim for dim in self.dimensions()) != factorial(d):
            raise ValueError(f"dimension sum failed at degree {d}")

    def to_payload(self) -> dict:
        return {
            "format_version": CACHE_FORMAT_VERSION,
            "degree": self.degree,
            "partitions": [str(p) for p in self.partitions],
            "values": [[str(v) for v in row] for row in self.values],
        }

    @staticmethod
    def _payload_hash(payload: dict) -> str:
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()

    def save(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = self.to_payload()
        document = dict(payload, sha256=self._payload_hash(payload))
        path.write_text(canonical_json(document), encoding="utf-8")
        return path

    @classmethod
    def load(cls, path) -> "CharacterTable":
        path = Path(path)
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise CacheError(f"unreadable character table cache {path}: {exc}") from exc
        if document.get("format_version") != CACHE_FORMAT_VERSION:
            raise StaleCacheError(
                f"cache {path} has format version {document.get('format_version')}, "
                f"expected {CACHE_FORMAT_VERSION}"
            )
        payload = {
            key: document[key]
            for key in ("format_version", "degree", "partitions", "values")
            if key in document
        }
        if cls._payload_hash(payload) != document.get("sha256"):
            raise CacheError(f"integrity check failed for {path}")
        partitions = tuple(parse_partition(text) for text in document["partitions"])
        return cls(document["degree"], partitions, document["values"], provenance="cache")


def load_or_build(degree: int, cache_dir=None) -> CharacterTable:
    """Load the table from the cache directory when possible, else build it
    (and populate the cache).  cache_dir=None means pure recompute."""
    if cache_dir is None:
        return CharacterTable.build(degree)
    path = Path(cache_dir) / cache_file_name(degree)
    if path.exists():
        try:
            return CharacterTable.load(path)
        except StaleCacheError:
            pass
    table = CharacterTable.build(degree)
    table.save(path)
    return table


def register_table(table: CharacterTable) -> None:
    """Serve chi() lookups for this degree from the given table."""
    _registered_tables[table.degree] = table


def clear_registered_tables() -> None:
    _registered_tables.clear()
