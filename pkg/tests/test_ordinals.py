import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from otmlab.errors import ParseError, RepresentationOverflow
from otmlab.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    DescribedSequence,
    SweepDescriptor,
    add,
    compare,
    format_ordinal,
    from_int,
    godel_pair,
    godel_unpair,
    liminf,
    mul,
    omega_power,
    pair_rank,
    parse_ordinal,
    sub_left,
)

W = OMEGA
W2 = mul(W, W)


def o(text):
    return parse_ordinal(text)


def from_tuple(t):
    """Oracle tuple -> package ordinal."""
    value = ZERO
    for pos, coeff in enumerate(t):
        power = len(t) - 1 - pos
        if coeff:
            value = add(value, mul(omega_power(from_int(power)), from_int(coeff)))
    return value


class TestCompare:
    def test_identity(self):
        assert compare(ZERO, ZERO) == 0

    def test_omega_exceeds_naturals(self):
        assert compare(W, from_int(3)) == 1

    def test_w2_plus_1_vs_w_times_5(self):
        assert compare(o("w^2+1"), o("w*5")) == 1

    def test_total_order_matches_tuple_oracle(self):
        vals = oracles.all_tuple_ordinals_below_w3()
        for a, b in itertools.product(vals, vals):
            assert compare(from_tuple(a), from_tuple(b)) == oracles.t_compare(a, b)


class TestArithmetic:
    def test_left_absorption(self):
        assert add(ONE, W) == W

    def test_add_example(self):
        assert add(o("w*2+3"), o("w+1")) == o("w*3+1")

    def test_mul_by_natural(self):
        assert mul(W, from_int(2)) == o("w*2")

    def test_mul_natural_by_omega(self):
        assert mul(from_int(2), W) == W

    def test_add_agrees_with_oracle(self):
        vals = oracles.all_tuple_ordinals_below_w3()
        for a, b in itertools.product(vals, vals):
            assert from_tuple(oracles.t_add(a, b)) == add(from_tuple(a), from_tuple(b))

    def test_mul_agrees_with_oracle(self):
        vals = oracles.all_tuple_ordinals_below_w3()
        for a, b in itertools.product(vals, vals):
            assert from_tuple(oracles.t_mul(a, b)) == mul(from_tuple(a), from_tuple(b))

    def test_algebraic_laws_below_w3(self):
        # associativity, units, and left distributivity, exhaustively
        vals = [from_tuple(t) for t in oracles.all_tuple_ordinals_below_w3(2)]
        for a in vals:
            assert add(a, ZERO) == a
            assert add(ZERO, a) == a
            assert mul(a, ONE) == a
            assert mul(ONE, a) == a
        for a, b, c in itertools.product(vals, repeat=3):
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))

    def test_mul_associative_sample(self):
        vals = [o("w^2+w"), o("w*3+2"), o("5"), o("w^2*2+1")]
        for a, b, c in itertools.product(vals, repeat=3):
            assert mul(mul(a, b), c) == mul(a, mul(b, c))

    def test_sub_left_inverts_add(self):
        vals = [from_tuple(t) for t in oracles.all_tuple_ordinals_below_w3(2)]
        for a, b in itertools.product(vals[:32], vals[:32]):
            assert sub_left(add(a, b), a) == b


class TestGodelPairing:
    def test_least_pair(self):
        assert godel_pair(ZERO, ZERO) == ZERO

    def test_natural_closed_forms(self):
        assert godel_pair(from_int(2), from_int(1)) == from_int(7)
        assert godel_unpair(from_int(5)) == (from_int(1), from_int(2))

    def test_pair_omega_zero(self):
        # pairs below shell w have order type w; (w,0) heads the w-shell's
        # second half, so it lands at w + w
        assert godel_pair(W, ZERO) == o("w*2")

    def test_natural_pairing_is_the_enumeration(self):
        for a in range(12):
            for b in range(12):
                assert (
                    godel_pair(from_int(a), from_int(b)).to_int()
                    == oracles.natural_pair_index(a, b)
                )

    def test_shell_bijectivity(self):
        for n in (1, 5, 30):
            hits = {
                godel_pair(from_int(a), from_int(b)).to_int()
                for a in range(n)
                for b in range(n)
            }
            assert hits == set(range(n * n))

    def test_monotone_on_transfinite_grid(self):
        # the pairing must be an order isomorphism: strictly increasing in
        # the (max, a, b)-lexicographic pair order
        grid = [add(mul(W, from_int(i)), from_int(j)) for i in range(5) for j in range(5)]
        pairs = [(a, b) for a in grid for b in grid]
        pairs.sort(key=lambda p: (max(p[0], p[1]), p[0], p[1]))
        codes = [godel_pair(a, b) for a, b in pairs]
        for prev, cur in zip(codes, codes[1:]):
            assert compare(prev, cur) < 0

    def test_unpair_inverts_on_transfinite_grid(self):
        grid = [add(mul(W, from_int(i)), from_int(j)) for i in range(8) for j in range(8)]
        for a in grid:
            for b in grid:
                assert godel_unpair(godel_pair(a, b)) == (a, b)

    def test_unpair_beyond_w_to_w_rejected(self):
        huge = omega_power(omega_power(from_int(2)))
        with pytest.raises(RepresentationOverflow):
            godel_unpair(huge)

    def test_pair_rank_normal_values(self):
        assert pair_rank(W) == W
        assert pair_rank(o("w*2")) == W2
        assert pair_rank(W2) == o("w^3")


class TestLiminf:
    def test_constant_cycle(self):
        c = o("w+3")
        assert liminf(DescribedSequence(cycle=(c,))) == c

    def test_prefix_ignored(self):
        seq = DescribedSequence(prefix=(from_int(5),), cycle=(from_int(3), from_int(7)))
        assert liminf(seq) == from_int(3)

    def test_sweep_supremum(self):
        seq = DescribedSequence(sweep=SweepDescriptor(ZERO, 1, W))
        assert liminf(seq) == W

    def test_sweep_validates_limit(self):
        with pytest.raises(ValueError):
            SweepDescriptor(ZERO, 1, W2)

    def test_against_direct_liminf_over_1000_terms(self):
        seqs = [
            DescribedSequence(prefix=(from_int(5),), cycle=(from_int(3), from_int(7))),
            DescribedSequence(prefix=(W,), cycle=(o("w*2"), o("w+1"), o("w*2"))),
            DescribedSequence(cycle=(o("w^2"), o("w"), o("w^2+w"))),
        ]
        for seq in seqs:
            tail = [seq.value_at(k) for k in range(1000)][500:]
            low = tail[0]
            for v in tail:
                if compare(v, low) < 0:
                    low = v
            assert liminf(seq) == low


class TestSyntax:
    CANONICAL = ["0", "5", "w", "w^2*3+w*2+7", "w^(w+1)", "w^w", "w^3+1",
                 "w*2", "w^(w^2+w*2)*4+w^5*2+3"]

    def test_roundtrip_exact(self):
        for text in self.CANONICAL:
            assert format_ordinal(parse_ordinal(text)) == text

    def test_parse_errors_carry_spans(self):
        for bad in ["w^", "3+", "w*0", "(w", "w^()", "5w"]:
            with pytest.raises(ParseError) as err:
                parse_ordinal(bad)
            assert 1 <= err.value.span.column <= len(bad) + 1

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 9)), max_size=4))
    @settings(max_examples=200)
    def test_print_parse_identity_on_random_ordinals(self, spec):
        value = ZERO
        for power, coeff in spec:
            value = add(value, mul(omega_power(from_int(power)), from_int(coeff)))
        assert parse_ordinal(format_ordinal(value)) == value

    def test_interning_makes_equality_identity(self):
        assert parse_ordinal("w^2+3") is parse_ordinal("w^2+3")
