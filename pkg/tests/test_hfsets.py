import random

import pytest

from otmlab.errors import ParseError, RepresentationOverflow
from otmlab.hfsets import (
    EMPTY,
    ack_compare,
    ack_enumerate,
    ack_index,
    format_set,
    hf,
    kpair,
    kpair_parts,
    parse_set_literal,
    rank,
    set_difference,
    set_union,
    singleton,
    tc,
    universe_rank_le,
)

SE = singleton(EMPTY)
SSE = singleton(SE)
PAIR01 = hf([EMPTY, SE])


class TestAckermann:
    def test_empty_is_zero(self):
        assert ack_index(EMPTY) == 0

    def test_pair_is_three(self):
        assert ack_index(PAIR01) == 3  # 2**0 + 2**1

    def test_enumerate_inverts_index_rank3(self):
        for x in universe_rank_le(3):
            assert ack_enumerate(ack_index(x)) is x

    def test_enumerate_inverts_index_random_rank4(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randrange(65536)
            assert ack_index(ack_enumerate(n)) == n

    def test_compare_matches_indices(self):
        xs = universe_rank_le(3)
        for a in xs:
            for b in xs:
                ia, ib = ack_index(a), ack_index(b)
                assert ack_compare(a, b) == (ia > ib) - (ia < ib)

    def test_elements_stored_in_ack_order(self):
        rng = random.Random(9)
        for _ in range(50):
            x = ack_enumerate(rng.randrange(65536))
            indices = [ack_index(e) for e in x.elements]
            assert indices == sorted(indices)

    def test_deep_chain_overflows(self):
        x = EMPTY
        with pytest.raises(RepresentationOverflow):
            for _ in range(8):
                x = singleton(x)
                ack_index(x)


class TestTransitiveClosure:
    def test_empty(self):
        assert tc(EMPTY) is EMPTY

    def test_unfold_one_level(self):
        assert tc(SSE) is hf([EMPTY, SE])

    def test_transitive_and_minimal(self):
        rng = random.Random(11)
        for _ in range(100):
            x = ack_enumerate(rng.randrange(65536))
            closure = tc(x)
            # transitive: every element's elements are inside
            for y in closure.elements:
                for z in y.elements:
                    assert z in closure
            # contains the elements of x
            for y in x.elements:
                assert y in closure
            # minimal: fixed point of one unfolding step
            again = hf(
                list(closure.elements)
                + [z for y in closure.elements for z in y.elements]
            )
            assert again is closure


class TestStructure:
    def test_extensional_identity(self):
        assert hf([SE, EMPTY, SE]) is PAIR01

    def test_rank(self):
        assert rank(EMPTY) == 0
        assert rank(PAIR01) == 2
        assert rank(SSE) == 2

    def test_kuratowski_roundtrip(self):
        xs = universe_rank_le(2)
        for a in xs:
            for b in xs:
                assert kpair_parts(kpair(a, b)) == (a, b)

    def test_kpair_rejects_non_pairs(self):
        assert kpair_parts(PAIR01) is None
        assert kpair_parts(EMPTY) is None

    def test_union_difference(self):
        fam = hf([PAIR01, SSE])
        assert set_union(fam) is hf([EMPTY, SE])
        assert set_difference(PAIR01, EMPTY) is PAIR01
        assert set_difference(PAIR01, SE) is SSE  # only {} is a member of {{}}
        assert set_difference(PAIR01, singleton(SE)) is SE


class TestLiterals:
    def test_examples(self):
        assert parse_set_literal("{}") is EMPTY
        assert parse_set_literal("{{},{{}}}") is PAIR01

    def test_roundtrip_rank3(self):
        for x in universe_rank_le(3):
            assert parse_set_literal(format_set(x)) is x

    def test_whitespace_tolerated(self):
        assert parse_set_literal(" { {} , { {} } } ") is PAIR01

    def test_errors(self):
        for bad in ["", "{", "{}}", "{,}", "{{}", "x"]:
            with pytest.raises(ParseError):
                parse_set_literal(bad)


class TestUniverse:
    def test_rank_layers(self):
        assert len(universe_rank_le(0)) == 1
        assert len(universe_rank_le(1)) == 2
        assert len(universe_rank_le(2)) == 4
        assert len(universe_rank_le(3)) == 16
        for x in universe_rank_le(3):
            assert rank(x) <= 3
