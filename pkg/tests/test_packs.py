import pytest
from hypothesis import given, strategies as st

from lfspp import (
    InfeasiblePack, Instance, InstanceTooLarge, Kind, Pack, classify,
    complete_to_prime, enumerate_packs, max_cardinality_pack, redundant_columns,
)

from lfspp import _search

from conftest import brute_force_packs, cols, instances


class TestRedundantColumns:
    def test_paper(self, paper):
        assert redundant_columns(paper, cols(3, 3)) == (1,)
        assert redundant_columns(paper, cols(3, 2, 3)) == ()
        assert redundant_columns(paper, cols(3)) == (0, 1, 2)

    def test_infeasible(self, paper):
        with pytest.raises(InfeasiblePack):
            redundant_columns(paper, cols(3, 1, 3))


class TestClassify:
    @pytest.mark.parametrize("columns, kind, witnesses", [
        ((1,), Kind.PRIME, ()),
        ((2,), Kind.REDUNDANT, (2,)),
        ((3,), Kind.REDUNDANT, (1,)),
        ((2, 3), Kind.PRIME, ()),
        ((), Kind.REDUNDANT, (0, 1, 2)),
    ])
    def test_paper(self, paper, columns, kind, witnesses):
        cls = classify(paper, cols(3, *columns))
        assert cls.kind is kind
        assert cls.redundant_columns == witnesses

    @given(instances(max_n=7, admissible=False))
    def test_prime_iff_inclusion_maximal(self, inst):
        feasible = {Pack.from_x(x).mask for x in brute_force_packs(inst)}
        for mask in feasible:
            maximal = not any(other != mask and other & mask == mask for other in feasible)
            assert classify(inst, Pack(inst.n, mask)).is_prime == maximal


class TestCompleteToPrime:
    def test_paper(self, paper):
        assert complete_to_prime(paper, cols(3, 3)) == cols(3, 2, 3)
        assert complete_to_prime(paper, cols(3)) == cols(3, 1)
        for rule in ("lowest-index", "best-ratio", "random"):
            assert complete_to_prime(paper, cols(3, 2, 3), rule, seed=1) == cols(3, 2, 3)

    def test_best_ratio(self, paper):
        # ratios c/d: 1/4, 2/4, 5/6 -> column 3 first, then 2 is still addable
        assert complete_to_prime(paper, cols(3), "best-ratio") == cols(3, 2, 3)

    def test_best_ratio_without_positive_weights(self):
        inst = Instance(A=[[1, 1]], c=[1, 5], d=[-1, 0], beta=5)
        assert complete_to_prime(inst, Pack(2), "best-ratio") == Pack.from_x("10")

    def test_custom_rule(self, paper):
        assert complete_to_prime(paper, cols(3), lambda i, m, cands: cands[-1]) == cols(3, 2, 3)
        with pytest.raises(ValueError):
            complete_to_prime(paper, cols(3), lambda i, m, cands: 99)
        with pytest.raises(ValueError):
            complete_to_prime(paper, cols(3), "no-such-rule")

    def test_infeasible(self, paper):
        with pytest.raises(InfeasiblePack):
            complete_to_prime(paper, cols(3, 1, 2))

    @given(instances(max_n=8, admissible=False), st.data(),
           st.sampled_from(["lowest-index", "best-ratio", "random"]))
    def test_output_is_prime_superset(self, inst, data, rule):
        feasible = brute_force_packs(inst)
        start = Pack.from_x(data.draw(st.sampled_from(feasible)))
        done = complete_to_prime(inst, start, rule, seed=data.draw(st.integers(0, 9)))
        assert done.mask & start.mask == start.mask
        assert classify(inst, done).is_prime
        assert done.x in feasible


class TestEnumerate:
    def test_paper(self, paper):
        assert [str(p) for p in enumerate_packs(paper)] == ["{}", "{3}", "{2}", "{2,3}", "{1}"]

    def test_single_column(self):
        inst = Instance(A=[[1]], c=[1], d=[1])
        assert [p.bits for p in enumerate_packs(inst)] == ["0", "1"]

    def test_duplicate_columns_never_together(self):
        inst = Instance(A=[[1, 1, 0], [0, 0, 1]], c=[1, 1, 1], d=[1, 1, 1])
        assert all(not (0 in p and 1 in p) for p in enumerate_packs(inst))
        assert len(list(enumerate_packs(inst))) == 6

    def test_size_guard(self):
        # Instance itself caps n at 63; tighter limits (the CLI uses 30) go through guard
        inst = Instance(A=[[0] * 31], c=[0] * 31, d=[1] * 31)
        with pytest.raises(InstanceTooLarge):
            _search.guard(inst, 30)

    @given(instances(max_n=10, admissible=False))
    def test_matches_brute_force_in_order(self, inst):
        assert [p.x for p in enumerate_packs(inst)] == brute_force_packs(inst)


class TestMaxCardinality:
    def test_paper(self, paper):
        p = max_cardinality_pack(paper)
        assert p == cols(3, 2, 3) and len(p) == 2

    def test_single(self):
        assert max_cardinality_pack(Instance(A=[[1]], c=[1], d=[1])) == Pack.from_x("1")

    def test_all_pairs_conflict(self):
        inst = Instance(A=[[1, 1, 1, 1]], c=[0] * 4, d=[1] * 4)
        assert max_cardinality_pack(inst) == Pack.from_x("0001")

    @given(instances(max_n=9, admissible=False))
    def test_against_brute_force(self, inst):
        feasible = brute_force_packs(inst)
        top = max(sum(x) for x in feasible)
        expected = min((x for x in feasible if sum(x) == top), key=lambda x: x)
        got = max_cardinality_pack(inst)
        assert got.x == expected
        assert classify(inst, got).is_prime
