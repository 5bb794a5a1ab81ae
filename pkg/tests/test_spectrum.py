import itertools
import json
from fractions import Fraction
from math import comb

import pytest

from hurwitz.counting import connected_value, disconnected_direct, genus_to_transpositions
from hurwitz.partitions import Partition, enumerate_partitions, l_star, multiplicity
from hurwitz.serialize import canonical_json
from hurwitz.spectrum import (
    asymptotic_error,
    connected_spectrum,
    disconnected_spectrum,
    solve_fraction_free,
    verify_theorem,
)


def P(*parts):
    return Partition(parts)


class TestSolver:
    def test_known_solution(self):
        matrix = [[2, 1], [1, 3]]
        x = [Fraction(1, 2), Fraction(-2, 3)]
        rhs = [sum(Fraction(a) * v for a, v in zip(row, x)) for row in matrix]
        assert solve_fraction_free(matrix, rhs) == x

    def test_pivot_swap(self):
        assert solve_fraction_free([[0, 1], [1, 0]], [3, 4]) == [4, 3]

    def test_four_by_four(self):
        matrix = [
            [3, 1, 4, 1],
            [5, 9, 2, 6],
            [5, 3, 5, 8],
            [9, 7, 9, 3],
        ]
        x = [Fraction(1, 3), Fraction(-7, 2), Fraction(0), Fraction(5)]
        rhs = [sum(a * v for a, v in zip(row, x)) for row in matrix]
        assert solve_fraction_free(matrix, rhs) == x

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            solve_fraction_free([[1, 2], [2, 4]], [1, 2])

    def test_shape_checked(self):
        with pytest.raises(ValueError):
            solve_fraction_free([[1, 2]], [1])


class TestDisconnectedSpectrum:
    def test_degree_five_no_profiles(self):
        # the seven shapes of weight 5 carry contents 10, 5, 2, 0, -2, -5, -10
        # with dimensions 1, 4, 5, 6, 5, 4, 1
        spec = disconnected_spectrum(5)
        assert spec.coefficients == {10: 1, 5: 16, 2: 25}

    def test_pinned_coefficients(self):
        spec = disconnected_spectrum(5)
        assert spec.coefficient(10) == 1
        assert spec.coefficient(5) == 16
        for m in range(6, 10):
            assert spec.coefficient(m) == 0

    def test_wrong_parity_is_zero_decomposition(self):
        spec = disconnected_spectrum(5, (), parity=1)
        assert spec.coefficients == {}
        assert spec.reconstruct(3) == 0

    def test_profile_parity_defaults_to_admissible(self):
        mu = P(2, 2, 1)  # colength 2: even class
        spec = disconnected_spectrum(5, (mu,))
        assert spec.parity == 0
        nu = P(2, 1, 1, 1)  # colength 1: odd class
        spec_odd = disconnected_spectrum(5, (nu,))
        assert spec_odd.parity == 1
        assert spec_odd.coefficient(10) == 1

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            disconnected_spectrum(1)

    @pytest.mark.parametrize("d", range(2, 7))
    def test_reconstruction_matches_direct_sum(self, d):
        parts = enumerate_partitions(d)
        profile_sets = [()] + [(mu,) for mu in parts]
        profile_sets += [pair for pair in itertools.combinations_with_replacement(parts, 2)]
        for profs in profile_sets:
            parity = sum(l_star(mu) for mu in profs) % 2
            spec = disconnected_spectrum(d, profs)
            ks = [parity + 2 * j for j in range(1 if parity else 1, 7)]
            for k in ks:
                assert spec.reconstruct(k) == disconnected_direct(d, profs, k), (d, profs, k)

    @pytest.mark.parametrize("d", (7, 8))
    def test_reconstruction_larger_degrees(self, d):
        parts = enumerate_partitions(d)
        profile_sets = [()] + [(mu,) for mu in parts]
        # pairs sampled: full cross products are covered up to degree 6 above
        pairs = list(itertools.combinations_with_replacement(parts, 2))
        profile_sets += pairs[:: max(1, len(pairs) // 8)]
        for profs in profile_sets:
            parity = sum(l_star(mu) for mu in profs) % 2
            spec = disconnected_spectrum(d, profs)
            for j in range(3):
                k = parity + 2 * (j + 1)
                assert spec.reconstruct(k) == disconnected_direct(d, profs, k)

    def test_coefficients_inside_range(self):
        for d in (2, 3, 4, 5, 6):
            spec = disconnected_spectrum(d)
            assert all(1 <= m <= comb(d, 2) for m in spec.coefficients)


class TestConnectedSpectrum:
    def test_degree_five_no_profiles(self):
        spec = connected_spectrum(5)
        assert spec.coefficient(10) == 1
        for m in (7, 8, 9):
            assert spec.coefficient(m) == 0
        assert spec.coefficient(6) == -25
        assert spec.coefficient(5) == 16

    def test_degree_five_full_cycle_profile(self):
        spec = connected_spectrum(5, (P(5),))
        assert spec.coefficient(6) == 0
        assert spec.coefficient(5) == -4

    def test_degree_six_profile(self):
        spec = connected_spectrum(6, (P(2, 2, 1, 1),))
        assert spec.coefficient(10) == -12

    def test_fresh_genus_prediction(self):
        for d, profs in ((5, ()), (5, (P(3, 1, 1),)), (6, ()), (7, ())):
            spec = connected_spectrum(d, profs)
            top_basis = max(spec.basis_genera)
            for g in (top_basis + 1, top_basis + 2, top_basis + 3):
                q = genus_to_transpositions(d, profs, g)
                assert spec.reconstruct(q) == connected_value(d, profs, g)

    def test_low_genus_prediction(self):
        # the solve uses a window of genera; it must also match below/at the ends
        spec = connected_spectrum(4)
        for g in range(0, 8):
            q = genus_to_transpositions(4, (), g)
            assert spec.reconstruct(q) == connected_value(4, (), g)

    def test_coefficients_inside_range(self):
        for d in (2, 3, 4, 5):
            spec = connected_spectrum(d)
            assert all(1 <= m <= comb(d, 2) for m in spec.coefficients)

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            connected_spectrum(1)


class TestVerifyTheorem:
    def test_degree_five_all_pass(self):
        report = verify_theorem(5)
        assert report.all_passed
        statements = {(c.flavor, c.statement) for c in report.checks}
        assert ("connected", "top_coefficient") in statements
        assert ("connected", "gap_zero") in statements
        assert ("connected", "subleading_coefficient") in statements
        assert ("connected", "third_coefficient") in statements
        assert ("disconnected", "top_coefficient") in statements
        assert ("disconnected", "third_coefficient") in statements

    def test_full_cycle_profile_subleading_zero(self):
        report = verify_theorem(6, (P(6),))
        assert report.all_passed
        sub = next(
            c for c in report.checks
            if c.flavor == "connected" and c.statement == "subleading_coefficient"
        )
        assert sub.expected == 0 and sub.computed == 0

    def test_small_degree_rejected(self):
        with pytest.raises(ValueError):
            verify_theorem(4)

    def test_report_serialization_round_trips(self):
        report = verify_theorem(5, (P(4, 1),))
        text = report.to_json()
        parsed = json.loads(text)
        assert canonical_json(parsed) == text
        assert parsed["all_passed"] is True
        assert parsed["degree"] == 5
        assert parsed["profiles"] == ["4,1"]

    def test_statement_values_match_closed_forms(self):
        d, mu = 6, P(2, 2, 1, 1)
        report = verify_theorem(d, (mu,))
        expect = {
            ("connected", "top_coefficient"): Fraction(1),
            ("connected", "subleading_coefficient"): Fraction(-d * multiplicity(mu, 1)),
            ("connected", "third_coefficient"): Fraction((d - 1) * (multiplicity(mu, 1) - 1)),
        }
        for (flavor, statement), value in expect.items():
            check = next(
                c for c in report.checks if (c.flavor, c.statement) == (flavor, statement)
            )
            assert check.expected == value
            assert check.computed == value


class TestAsymptotics:
    def test_matches_definition_from_spectrum(self):
        spec = connected_spectrum(5)
        for g in (2, 5, 9):
            q = genus_to_transpositions(5, (), g)
            tail = sum(spec.coefficient(m) * m**q for m in range(1, 5))
            assert asymptotic_error(5, (), g) == abs(tail) / Fraction(5) ** q

    def test_decay(self):
        errors = [asymptotic_error(5, (), g) for g in (5, 10, 15)]
        assert errors[0] > errors[1] > errors[2]

    def test_bound_domination(self):
        spec = connected_spectrum(5)
        weight = sum(abs(spec.coefficient(m)) for m in range(1, 5))
        for g in (5, 8, 12):
            q = genus_to_transpositions(5, (), g)
            assert asymptotic_error(5, (), g) <= weight * Fraction(4, 5) ** q

    def test_small_degree_rejected(self):
        with pytest.raises(ValueError):
            asymptotic_error(4, (), 1)


class TestSpectralDecompositionApi:
    def test_as_mapping_covers_full_range(self):
        spec = connected_spectrum(5)
        mapping = spec.as_mapping()
        assert set(mapping) == {str(m) for m in range(1, 11)}
        assert mapping["10"] == "1"
        assert mapping["6"] == "-25"
        assert mapping["5"] == "16"
        assert mapping["9"] == "0"

    def test_top_index(self):
        assert connected_spectrum(5).top == 10
        assert disconnected_spectrum(6).top == 15
