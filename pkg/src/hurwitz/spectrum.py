"""Spectral structure of Hurwitz numbers.

For fixed degree and profiles, the dependence on the number of simple branch
points is a finite power sum over the absolute central-character values of the
transposition class.  This module extracts those coefficients for both the
disconnected (direct character grouping) and connected (exact linear solve)
flavors, verifies the known structure statements, and evaluates the
three-term large-genus asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lcm

from .characters import _content, chi, dimension
from .counting import canonical_profiles, connected_value, genus_to_transpositions
from .partitions import Partition, enumerate_partitions, l_star, multiplicity, z_order
from .serialize import canonical_json, fraction_to_str


@dataclass(frozen=True)
class SpectralDecomposition:
    """Finite association m -> coefficient with 1 <= m <= C(d, 2).

    For every admissible transposition count (or derived count, for the
    connected flavor), the normalized power sum reproduces the Hurwitz number
    exactly; see reconstruct().
    """

    degree: int
    profiles: tuple[Partition, ...]
    flavor: str  # "disconnected" | "connected"
    parity: int  # exponent parity the coefficients target (0 or 1)
    coefficients: dict[int, Fraction]
    basis_genera: tuple[int, ...] = ()  # connected flavor: genera used in the solve

    def coefficient(self, m: int) -> Fraction:
        return self.coefficients.get(m, Fraction(0))

    @property
    def top(self) -> int:
        return comb(self.degree, 2)

    def reconstruct(self, power: int) -> Fraction:
        """Hurwitz number this decomposition predicts for the given
        transposition count: (2/d!^2) prod(d!/z) sum coeff(m) m^power."""
        d = self.degree
        norm = Fraction(2, factorial(d) ** 2)
        for mu in self.profiles:
            norm *= Fraction(factorial(d), z_order(mu))
        return norm * sum(
            (coeff * m**power for m, coeff in self.coefficients.items()), Fraction(0)
        )

    def as_mapping(self) -> dict[str, str]:
        """Every m in range as a string key, coefficient as an exact string."""
        return {str(m): fraction_to_str(self.coefficient(m)) for m in range(1, self.top + 1)}


def disconnected_spectrum(d: int, profiles=(), parity: int | None = None) -> SpectralDecomposition:
    """Group the Frobenius sum by |transposition content|.

    parity is the targeted transposition-count parity; it defaults to the
    admissible class (total profile colength mod 2).  The inadmissible parity
    yields the all-zero decomposition, matching the vanishing of the counts.
    """
    if d < 2:
        raise ValueError(f"spectra need degree >= 2, got {d}")
    profiles = canonical_profiles(d, profiles)
    total_lstar = sum(l_star(mu) for mu in profiles)
    if parity is None:
        parity = total_lstar % 2
    parity %= 2
    if (parity + total_lstar) % 2:
        return SpectralDecomposition(d, profiles, "disconnected", parity, {})

    coefficients: dict[int, Fraction] = {}
    for lam in enumerate_partitions(d):
        f = _content(lam)
        if f == 0:
            continue  # contributes nothing for any positive transposition count
        sign = -1 if (f < 0 and parity) else 1
        dim = dimension(lam)
        term = Fraction(sign * dim * dim, 2)
        for mu in profiles:
            term *= Fraction(chi(lam, mu), dim)
        if term:
            m = abs(f)
            updated = coefficients.get(m, Fraction(0)) + term
            if updated:
                coefficients[m] = updated
            else:
                coefficients.pop(m, None)
    return SpectralDecomposition(d, profiles, "disconnected", parity, coefficients)


def connected_spectrum(d: int, profiles=()) -> SpectralDecomposition:
    """Solve for the connected coefficients from C(d, 2) exact evaluations.

    The system matrix has entries m^q with distinct positive bases m and
    exponents q in arithmetic progression of step 2, hence it factors as a
    diagonal times a Vandermonde in m^2 and is invertible.  The solution is
    verified by reconstruction at two genera beyond those used in the solve.
    """
    if d < 2:
        raise ValueError(f"spectra need degree >= 2, got {d}")
    return _connected_spectrum(d, canonical_profiles(d, profiles))


@lru_cache(maxsize=None)
def _connected_spectrum(d: int, profiles) -> SpectralDecomposition:
    m_top = comb(d, 2)
    base = 2 * d - sum(l_star(mu) for mu in profiles) - 2
    g0 = 0
    while 2 * g0 + base < 1:
        g0 += 1
    genera = tuple(range(g0, g0 + m_top))
    powers = [2 * g + base for g in genera]

    norm = Fraction(factorial(d) ** 2, 2)
    for mu in profiles:
        norm *= Fraction(z_order(mu), factorial(d))
    rhs = [norm * connected_value(d, profiles, g) for g in genera]
    matrix = [[m**q for m in range(1, m_top + 1)] for q in powers]
    solution = solve_fraction_free(matrix, rhs)

    coefficients = {m: c for m, c in zip(range(1, m_top + 1), solution) if c}
    decomposition = SpectralDecomposition(
        d, profiles, "connected", base % 2, coefficients, genera
    )
    for g in (g0 + m_top, g0 + m_top + 1):
        if decomposition.reconstruct(2 * g + base) != connected_value(d, profiles, g):
            raise RuntimeError(
                f"internal error: spectral solve failed reconstruction at genus {g}"
            )
    return decomposition


def solve_fraction_free(matrix: list[list[int]], rhs) -> list[Fraction]:
    """Exact solve of a square integer system by fraction-free (Bareiss)
    elimination; the right-hand side may be rational."""
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("system must be square")
    rhs = [Fraction(v) for v in rhs]
    scale = lcm(*(v.denominator for v in rhs)) if rhs else 1
    aug = [list(row) + [(v * scale).numerator] for row, v in zip(matrix, rhs)]

    previous_pivot = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("singular system")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, n):
            factor = aug[r][col]
            row = aug[r]
            top = aug[col]
            for c in range(col + 1, n + 1):
                row[c] = (pivot * row[c] - factor * top[c]) // previous_pivot
            row[col] = 0
        previous_pivot = pivot

    solution = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        if aug[r][r] == 0:
            raise ValueError("singular system")
        acc = Fraction(aug[r][n])
        for c in range(r + 1, n):
            acc -= aug[r][c] * solution[c]
        solution[r] = acc / aug[r][r]
    return [x / scale for x in solution]


@dataclass(frozen=True)
class StatementCheck:
    flavor: str
    statement: str
    index: int  # the m the statement pins down
    expected: Fraction
    computed: Fraction
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    degree: int
    profiles: tuple[Partition, ...]
    checks: tuple[StatementCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "profiles": [str(p) for p in self.profiles],
            "all_passed": self.all_passed,
            "checks": [
                {
                    "flavor": check.flavor,
                    "statement": check.statement,
                    "m": check.index,
                    "expected": fraction_to_str(check.expected),
                    "computed": fraction_to_str(check.computed),
                    "passed": check.passed,
                }
                for check in self.checks
            ],
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


def _check(flavor: str, statement: str, m: int, expected, computed) -> StatementCheck:
    expected = Fraction(expected)
    computed = Fraction(computed)
    return StatementCheck(flavor, statement, m, expected, computed, expected == computed)


def verify_theorem(d: int, profiles=()) -> VerificationReport:
    """Check the pinned coefficients of both flavors: top coefficient 1, the
    zero gap, and the two closed-form subleading coefficients.

    Only degrees >= 5 are accepted; below that the statements are not asserted.
    """
    if d < 5:
        raise ValueError(
            f"the structure statements are asserted for degree >= 5 only, got {d}"
        )
    profiles = canonical_profiles(d, profiles)
    s = len(profiles)
    m_top = comb(d, 2)
    m_second = comb(d - 1, 2)
    m_third = d * (d - 3) // 2

    prod_m1 = 1
    prod_m1_minus_1 = 1
    for mu in profiles:
        prod_m1 *= multiplicity(mu, 1)
        prod_m1_minus_1 *= multiplicity(mu, 1) - 1
    expected_second = -(Fraction(d) ** (2 - s)) * prod_m1
    expected_third = Fraction(d - 1) ** (2 - s) * prod_m1_minus_1

    checks = []
    connected = connected_spectrum(d, profiles)
    checks.append(_check("connected", "top_coefficient", m_top, 1, connected.coefficient(m_top)))
    for m in range(m_second + 1, m_top):
        checks.append(_check("connected", "gap_zero", m, 0, connected.coefficient(m)))
    checks.append(
        _check("connected", "subleading_coefficient", m_second, expected_second,
               connected.coefficient(m_second))
    )
    checks.append(
        _check("connected", "third_coefficient", m_third, expected_third,
               connected.coefficient(m_third))
    )

    disconnected = disconnected_spectrum(d, profiles)
    checks.append(
        _check("disconnected", "top_coefficient", m_top, 1, disconnected.coefficient(m_top))
    )
    for m in range(m_third + 1, m_top):
        checks.append(_check("disconnected", "gap_zero", m, 0, disconnected.coefficient(m)))
    checks.append(
        _check("disconnected", "third_coefficient", m_third, expected_third,
               disconnected.coefficient(m_third))
    )
    return VerificationReport(d, profiles, tuple(checks))


def asymptotic_error(d: int, profiles=(), g: int = 0) -> Fraction:
    """Exact relative remainder of the three-term asymptotics: the normalized
    Hurwitz number minus the three retained terms, divided by the third
    term's base d(d-3)/2 raised to the transposition count."""
    if d < 5:
        raise ValueError(
            f"the structure statements are asserted for degree >= 5 only, got {d}"
        )
    profiles = canonical_profiles(d, profiles)
    s = len(profiles)
    q = genus_to_transpositions(d, profiles, g)
    m_top = comb(d, 2)
    m_second = comb(d - 1, 2)
    m_third = d * (d - 3) // 2

    prod_m1 = 1
    prod_m1_minus_1 = 1
    for mu in profiles:
        prod_m1 *= multiplicity(mu, 1)
        prod_m1_minus_1 *= multiplicity(mu, 1) - 1

    norm = Fraction(factorial(d) ** 2, 2)
    for mu in profiles:
        norm *= Fraction(z_order(mu), factorial(d))
    normalized = norm * connected_value(d, profiles, g)

    retained = (
        Fraction(m_top) ** q
        - Fraction(d) ** (2 - s) * prod_m1 * Fraction(m_second) ** q
        + Fraction(d - 1) ** (2 - s) * prod_m1_minus_1 * Fraction(m_third) ** q
    )
    return abs(normalized - retained) / Fraction(m_third) ** q
