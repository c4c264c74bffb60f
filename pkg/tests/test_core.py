from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lfspp import (
    DimensionMismatch, InfeasiblePack, Instance, LengthMismatch, MagnitudeOverflow,
    NonBinaryMatrix, NonPositiveBeta, NonPositiveDenominator, Pack, ParseError,
    format_instance, is_feasible, linear_objective, objective, parse_instance,
    validate_instance,
)
from lfspp.core import MAX_COEFF

from conftest import brute_force_packs, cols, instances

PAPER_RAW = dict(m=2, n=3, A=[[1, 1, 0], [1, 0, 1]], c=(1, 2, 5), d=(4, 4, 6), alpha=0, beta=2)


class TestValidate:
    def test_paper_instance_is_valid(self):
        inst = validate_instance(PAPER_RAW)
        assert (inst.m, inst.n) == (2, 3)
        assert inst.c == (1, 2, 5) and inst.d == (4, 4, 6)
        assert inst.A.tolist() == [[1, 1, 0], [1, 0, 1]]

    def test_zero_beta(self):
        with pytest.raises(NonPositiveBeta):
            validate_instance({**PAPER_RAW, "beta": 0})

    def test_non_binary_entry(self):
        with pytest.raises(NonBinaryMatrix):
            validate_instance({**PAPER_RAW, "A": [[2, 1, 0], [1, 0, 1]]})

    @pytest.mark.parametrize("change", [
        {"c": (1, 2)},
        {"d": (1, 2, 3, 4)},
        {"A": [[1, 1], [1, 0]]},
        {"A": [[1, 1, 0], [1, 0]]},
        {"m": 3},
    ])
    def test_dimension_mismatch(self, change):
        with pytest.raises(DimensionMismatch):
            validate_instance({**PAPER_RAW, **change})

    def test_magnitude_bound(self):
        validate_instance({**PAPER_RAW, "c": (MAX_COEFF, 0, 0)})
        with pytest.raises(MagnitudeOverflow):
            validate_instance({**PAPER_RAW, "c": (MAX_COEFF + 1, 0, 0)})
        with pytest.raises(MagnitudeOverflow):
            validate_instance({**PAPER_RAW, "beta": MAX_COEFF + 1})

    def test_does_not_mutate_input(self):
        raw = {**PAPER_RAW, "A": [[1, 1, 0], [1, 0, 1]]}
        validate_instance(raw)
        assert raw["A"] == [[1, 1, 0], [1, 0, 1]]

    def test_instance_is_read_only(self, paper):
        with pytest.raises(ValueError):
            paper.A[0, 0] = 0
        with pytest.raises(AttributeError):
            paper.beta = 3


class TestFeasibility:
    def test_paper_examples(self, paper):
        assert is_feasible(paper, (0, 1, 1))
        assert not is_feasible(paper, (1, 1, 0))
        assert is_feasible(paper, (0, 0, 0))

    def test_length_mismatch(self, paper):
        with pytest.raises(LengthMismatch):
            is_feasible(paper, (0, 1))

    @given(instances(admissible=False), st.data())
    def test_feasible_iff_pairwise_disjoint(self, inst, data):
        x = data.draw(st.lists(st.integers(0, 1), min_size=inst.n, max_size=inst.n))
        chosen = [j for j in range(inst.n) if x[j]]
        supports = [set(np.flatnonzero(inst.A[:, j])) for j in chosen]
        disjoint = all(not (supports[a] & supports[b])
                       for a in range(len(chosen)) for b in range(a + 1, len(chosen)))
        assert is_feasible(inst, x) == disjoint
        assert inst.mask_feasible(Pack.from_x(x).mask) == disjoint


class TestObjective:
    @pytest.mark.parametrize("columns, value", [
        ((3,), Fraction(5, 8)),
        ((), Fraction(0)),
        ((2, 3), Fraction(7, 12)),
        ((1,), Fraction(1, 6)),
        ((2,), Fraction(1, 3)),
    ])
    def test_paper_values(self, paper, columns, value):
        assert objective(paper, cols(3, *columns)) == value

    def test_reduced(self, paper):
        v = objective(paper, cols(3, 2))
        assert (v.numerator, v.denominator) == (1, 3)

    def test_alpha_enters_numerator(self, paper):
        assert objective(paper.replace(alpha=3), cols(3, 3)) == Fraction(8, 8)

    def test_non_positive_denominator(self):
        inst = Instance(A=[[1]], c=[1], d=[-3], beta=2)
        with pytest.raises(NonPositiveDenominator) as err:
            objective(inst, Pack.from_x("1"))
        assert err.value.pack == Pack.from_x("1")
        assert err.value.denominator == -1

    def test_infeasible_pack(self, paper):
        with pytest.raises(InfeasiblePack):
            objective(paper, cols(3, 1, 2))

    def test_linear_objective(self, paper):
        assert linear_objective(paper, cols(3, 2, 3), paper.c) == 7
        assert linear_objective(paper, cols(3), [9, -9, 4]) == 0
        assert linear_objective(paper, cols(3, 1), paper.d) == 4
        with pytest.raises(LengthMismatch):
            linear_objective(paper, cols(3, 1), [1, 2])

    @given(instances())
    def test_exact_order_matches_float_order(self, inst):
        packs = [Pack.from_x(x) for x in brute_force_packs(inst)]
        values = [objective(inst, p) for p in packs]
        floats = [v.numerator / v.denominator for v in values]
        for a in range(len(values)):
            for b in range(len(values)):
                if values[a] != values[b] and abs(floats[a] - floats[b]) > 1e-12:
                    assert (values[a] < values[b]) == (floats[a] < floats[b])


fractions = st.builds(Fraction, st.integers(-2**30, 2**30),
                      st.integers(1, 2**30))


@given(fractions, fractions, fractions)
def test_rational_total_order(a, b, c):
    assert (a < b) + (a == b) + (a > b) == 1
    assert (a <= b and b <= a) == (a == b)
    if a <= b and b <= c:
        assert a <= c
    assert (a < b) == (a - b < 0)
    assert a.denominator > 0


class TestPack:
    def test_conventions(self):
        p = Pack.from_columns(3, [2, 3])
        assert p.members == (1, 2)
        assert p.x == (0, 1, 1)
        assert p.bits == "011"
        assert str(p) == "{2,3}"
        assert str(Pack(3)) == "{}"
        assert len(p) == 2 and 1 in p and 0 not in p

    def test_out_of_range(self):
        with pytest.raises(LengthMismatch):
            Pack.from_members(3, [3])
        with pytest.raises(LengthMismatch):
            Pack(2, 0b100)


PAPER_TEXT = """\
# 2x3 counterexample
2 3
0 2      # alpha beta
1 2 5
4 4 6
1 1 0
1 0 1
"""


class TestTextFormat:
    def test_parse(self, paper):
        assert parse_instance(PAPER_TEXT) == paper

    def test_format_is_exact(self, paper):
        assert format_instance(paper) == "2 3\n0 2\n1 2 5\n4 4 6\n1 1 0\n1 0 1\n"

    @pytest.mark.parametrize("text, line", [
        ("2 3\n0 2\n1 2 5\n4 4 6\n1 1 0\n", 5),           # missing row
        ("2 3\n0 2\n1 2\n4 4 6\n1 1 0\n1 0 1\n", 3),       # short c
        ("2 3\n0 2\n1 2 5\n4 4 6\n1 1 0\n1 0 1\n7\n", 7),  # trailing garbage
        ("2 3\n0 2\n1 2 5\n4 4 6\n1 1 0\n1 0 2\n", 6),     # non-binary
        ("2 3\n0 2\n1 x 5\n4 4 6\n1 1 0\n1 0 1\n", 3),     # not an integer
        ("2 3\n0 0\n1 2 5\n4 4 6\n1 1 0\n1 0 1\n", 2),     # beta = 0
        ("2 3 4\n", 1),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_instance(text)
        assert err.value.line == line
        assert str(err.value).startswith(f"line {line}:")

    @given(instances(admissible=False))
    def test_round_trip(self, inst):
        assert parse_instance(format_instance(inst)) == inst
