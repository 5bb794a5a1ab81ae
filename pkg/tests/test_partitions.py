import itertools
from collections import Counter
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz.partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    format_profiles,
    l_star,
    multiplicity,
    parse_partition,
    parse_profiles,
    part_multiplicities,
    sub_multisets,
    z_order,
)


def P(*parts):
    return Partition(parts)


def brute_force_partitions(d):
    """Independent enumeration: all weakly decreasing positive tuples of weight d."""
    if d == 0:
        return [()]
    out = set()

    def extend(prefix, remaining, cap):
        if remaining == 0:
            out.add(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(prefix + (part,), remaining - part, part)

    extend((), d, d)
    return sorted(out, reverse=True)


partitions_strategy = st.lists(st.integers(1, 8), max_size=8).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


class TestPartitionType:
    def test_canonical_equality(self):
        assert P(3, 1, 1) == P(3, 1, 1)
        assert P(3, 1, 1) != P(3, 2)
        assert P() == Partition([])
        assert hash(P(2, 1)) == hash(P(2, 1))

    def test_weight_and_length(self):
        p = P(4, 2, 2, 1)
        assert p.weight == 9
        assert len(p) == 4
        assert list(p) == [4, 2, 2, 1]
        assert p[0] == 4

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 3))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((3, 0))
        with pytest.raises(ValueError):
            Partition((-1,))

    def test_str_is_grammar(self):
        assert str(P(3, 1, 1)) == "3,1,1"
        assert str(P()) == ""


class TestEnumeration:
    def test_degree_one(self):
        assert enumerate_partitions(1) == [P(1)]

    def test_degree_five(self):
        expected = [
            P(5),
            P(4, 1),
            P(3, 2),
            P(3, 1, 1),
            P(2, 2, 1),
            P(2, 1, 1, 1),
            P(1, 1, 1, 1, 1),
        ]
        assert enumerate_partitions(5) == expected

    def test_degree_ten_against_brute_force(self):
        got = [p.parts for p in enumerate_partitions(10)]
        assert len(got) == 42
        assert got == brute_force_partitions(10)

    def test_degree_zero_is_empty_partition(self):
        assert enumerate_partitions(0) == [P()]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            enumerate_partitions(-1)

    @pytest.mark.parametrize("d", range(0, 13))
    def test_descending_lex_and_complete(self, d):
        got = [p.parts for p in enumerate_partitions(d)]
        assert got == brute_force_partitions(d)
        assert got == sorted(got, reverse=True)

    @pytest.mark.parametrize("d", range(1, 13))
    def test_closed_under_conjugation(self, d):
        listed = set(enumerate_partitions(d))
        assert all(conjugate(p) in listed for p in listed)


class TestConjugate:
    def test_row_to_column(self):
        assert conjugate(P(6)) == P(1, 1, 1, 1, 1, 1)

    def test_self_conjugate(self):
        assert conjugate(P(3, 1, 1)) == P(3, 1, 1)

    def test_hook_transpose(self):
        assert conjugate(P(2, 1, 1, 1, 1)) == P(5, 1)

    def test_empty(self):
        assert conjugate(P()) == P()

    @settings(deadline=None)
    @given(partitions_strategy)
    def test_involution_preserves_weight(self, p):
        q = conjugate(p)
        assert q.weight == p.weight
        assert conjugate(q) == p


class TestStatistics:
    def test_z_order_all_ones(self):
        assert z_order(P(1, 1, 1, 1, 1)) == factorial(5)

    def test_z_order_examples(self):
        assert z_order(P(2, 1, 1, 1)) == 12
        assert z_order(P(2, 2, 1)) == 8

    @pytest.mark.parametrize("d", range(1, 11))
    def test_class_sizes_partition_the_group(self, d):
        assert sum(factorial(d) // z_order(p) for p in enumerate_partitions(d)) == factorial(d)

    def test_l_star(self):
        assert l_star(P(1, 1, 1, 1)) == 0
        assert l_star(P(6)) == 5
        assert l_star(P(2, 2, 1)) == 2

    def test_multiplicity(self):
        assert multiplicity(P(2, 1, 1, 1), 1) == 3
        assert multiplicity(P(5), 1) == 0
        assert multiplicity(P(2, 2, 1), 2) == 2

    def test_part_multiplicities_descending(self):
        assert part_multiplicities(P(3, 3, 2, 1, 1, 1)) == [(3, 2), (2, 1), (1, 3)]


class TestSubMultisets:
    def test_two_one(self):
        assert sub_multisets(P(2, 1)) == [
            (P(), P(2, 1)),
            (P(1), P(2)),
            (P(2), P(1)),
            (P(2, 1), P()),
        ]

    def test_repeated_part_collapses(self):
        assert sub_multisets(P(1, 1)) == [
            (P(), P(1, 1)),
            (P(1), P(1)),
            (P(1, 1), P()),
        ]

    def test_count_matches_brute_force(self):
        # independent count: distinct sub-multisets of the parts multiset
        mu = P(2, 2, 1)
        distinct = {
            tuple(sorted(combo, reverse=True))
            for r in range(len(mu.parts) + 1)
            for combo in itertools.combinations(mu.parts, r)
        }
        pairs = sub_multisets(mu)
        assert len(pairs) == len(distinct) == 6

    @settings(deadline=None)
    @given(partitions_strategy)
    def test_union_recovers_whole(self, mu):
        pairs = sub_multisets(mu)
        whole = Counter(mu.parts)
        for nu, sigma in pairs:
            assert Counter(nu.parts) + Counter(sigma.parts) == whole
            assert nu.weight + sigma.weight == mu.weight
        assert (P(), mu) in pairs and (mu, P()) in pairs
        assert len(set(pairs)) == len(pairs)


class TestTextGrammar:
    def test_parse_basic(self):
        assert parse_partition("3,1,1") == P(3, 1, 1)

    def test_whitespace_ignored(self):
        assert parse_partition(" 3 , 1 ,\t1 ") == P(3, 1, 1)

    def test_empty_is_empty_partition(self):
        assert parse_partition("") == P()
        assert parse_partition("  ") == P()

    def test_increasing_rejected(self):
        with pytest.raises(ValueError):
            parse_partition("1,3")

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_partition("3,x")
        with pytest.raises(ValueError):
            parse_partition("3,,1")

    def test_profiles(self):
        assert parse_profiles("3,1,1;2,2,1") == (P(3, 1, 1), P(2, 2, 1))
        assert parse_profiles("") == ()
        assert parse_profiles("   ") == ()

    def test_profiles_round_trip(self):
        text = "3,1,1;2,2,1"
        assert format_profiles(parse_profiles(text)) == text
