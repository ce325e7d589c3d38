import pytest
from hypothesis import given, settings

from randasp.generate import LinearModelParams, generate, mix_seed
from randasp.programs import AtomSet, Program, Rule, is_answer_set_general, pure_rule
from randasp.solver import (
    count_answer_sets,
    enumerate_answer_sets,
    enumerate_brute_force,
    is_answer_set_n2,
)

from conftest import n2_programs, negative_programs


def s(n, *atoms):
    return AtomSet.from_atoms(n, atoms)


TWO_CYCLE = Program(2, [pure_rule(0, 1), pure_rule(1, 0)])


class TestCheckerN2:
    def test_single_rule_all_subsets(self):
        p = Program(2, [pure_rule(0, 1)])
        assert is_answer_set_n2(p, s(2, 0))
        assert not is_answer_set_n2(p, s(2, 1))
        assert not is_answer_set_n2(p, s(2))
        assert not is_answer_set_n2(p, s(2, 0, 1))

    def test_contradiction_rule_kills_everything(self):
        p = Program(1, [pure_rule(0, 0)])
        assert not is_answer_set_n2(p, s(1))
        assert not is_answer_set_n2(p, s(1, 0))

    def test_rejects_non_n2(self):
        with pytest.raises(ValueError):
            is_answer_set_n2(Program(2, [Rule(0, (1,), ())]), s(2))
        with pytest.raises(ValueError):
            is_answer_set_n2(Program(2, []), s(2))

    @given(n2_programs())
    @settings(max_examples=80)
    def test_agrees_with_general_checker(self, p):
        for mask in range(1 << p.n):
            cand = AtomSet(p.n, mask)
            assert is_answer_set_n2(p, cand) == is_answer_set_general(p, cand)

    def test_agreement_on_random_generated(self):
        for i, (c1, c2) in enumerate([(5.0, 0.0), (4.0, 4.0)]):
            for t in range(25):
                n = 7 + (t % 4)
                p = generate(LinearModelParams(n, c1, c2), mix_seed(900 + i, t))
                for mask in range(1 << n):
                    cand = AtomSet(n, mask)
                    assert is_answer_set_n2(p, cand) == is_answer_set_general(p, cand)


class TestEnumerate:
    def test_two_cycle(self):
        col = enumerate_answer_sets(TWO_CYCLE)
        assert [a.members for a in col.sets] == [(0,), (1,)]
        assert col.count == 2 and not col.truncated
        assert col.size_histogram == {1: 2}

    def test_single_rule(self):
        col = enumerate_answer_sets(Program(2, [pure_rule(0, 1)]))
        assert [a.members for a in col.sets] == [(0,)]

    def test_three_rule_example(self):
        p = Program(3, [pure_rule(0, 1), pure_rule(1, 0), pure_rule(2, 0)])
        col = enumerate_answer_sets(p)
        assert [a.members for a in col.sets] == [(0,), (1, 2)]

    def test_contradiction_only(self):
        assert enumerate_answer_sets(Program(1, [pure_rule(0, 0)])).count == 0

    def test_rejects_empty_and_non_n2(self):
        with pytest.raises(ValueError):
            enumerate_answer_sets(Program(2, []))
        with pytest.raises(ValueError):
            enumerate_answer_sets(Program(2, [Rule(0, (1,), ())]))

    def test_limit_truncates(self):
        col = enumerate_answer_sets(TWO_CYCLE, limit=1)
        assert col.count == 1 and col.truncated
        with pytest.raises(ValueError):
            enumerate_answer_sets(TWO_CYCLE, limit=0)

    def test_deterministic_canonical_order(self):
        p = generate(LinearModelParams(20, 4.0, 1.0), 5)
        c1 = enumerate_answer_sets(p)
        c2 = enumerate_answer_sets(p)
        assert c1 == c2
        assert list(c1.masks()) == sorted(c1.masks())

    @given(n2_programs(max_n=10))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, p):
        assert enumerate_answer_sets(p).masks() == enumerate_brute_force(p).masks()

    def test_matches_brute_force_generated(self):
        for t in range(30):
            p = generate(LinearModelParams(14, 5.0, 1.0), mix_seed(77, t))
            assert enumerate_answer_sets(p).masks() == enumerate_brute_force(p).masks()

    @given(n2_programs(max_n=10))
    @settings(max_examples=40, deadline=None)
    def test_collection_invariants(self, p):
        col = enumerate_answer_sets(p)
        assert col.count == len(col.sets)
        assert sum(col.size_histogram.values()) == col.count
        for a in col.sets:
            assert 0 < len(a) < p.n  # nonempty program: size strictly inside
        masks = col.masks()
        for a in masks:
            for b in masks:
                if a != b:
                    assert a & ~b and b & ~a  # pairwise incomparable


class TestCount:
    def test_examples(self):
        assert count_answer_sets(TWO_CYCLE) == 2
        assert count_answer_sets(Program(1, [pure_rule(0, 0)])) == 0

    def test_matches_enumeration(self):
        for t in range(20):
            p = generate(LinearModelParams(16, 5.0, 0.0), mix_seed(31, t))
            assert count_answer_sets(p) == enumerate_brute_force(p).count


class TestBruteForce:
    def test_cap(self):
        p = Program(21, [pure_rule(0, 1)])
        with pytest.raises(ValueError):
            enumerate_brute_force(p)
        assert enumerate_brute_force(p, cap=21).count == 1

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            enumerate_brute_force(Program(3, []))

    def test_positive_body_fallback(self):
        # {a<-, b<-a} has the single answer set {a, b}
        p = Program(2, [Rule(0, (), ()), Rule(1, (0,), ())])
        col = enumerate_brute_force(p)
        assert [a.members for a in col.sets] == [(0, 1)]

    @given(negative_programs())
    @settings(max_examples=60, deadline=None)
    def test_vector_path_matches_reference_scan(self, p):
        if not p.rules:
            return
        expected = [
            m for m in range(1 << p.n) if is_answer_set_general(p, AtomSet(p.n, m))
        ]
        assert list(enumerate_brute_force(p).masks()) == expected
