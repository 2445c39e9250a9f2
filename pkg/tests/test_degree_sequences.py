import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jpart import DegreeSequence, is_graphic, lay_off, lay_off_with_order
from jpart.degree_sequences import parse_degree_file

from conftest import (
    all_nonincreasing_tuples,
    degree_sequence_set,
    random_graphic_sequence,
)


def test_lay_off_non_monotone_output():
    assert lay_off((2, 2, 1, 1), 3) == (1, 2, 1)


def test_lay_off_zero_entry():
    assert lay_off((0, 0, 0), 1) == (0, 0)


def test_lay_off_prefix():
    assert lay_off((3, 2, 2, 2, 1), 1) == (1, 1, 1, 1)


def test_lay_off_rejects_infeasible():
    with pytest.raises(ValueError):
        lay_off((3, 3, 3), 1)  # d1 = 3 > n-1, not even a valid sequence
    with pytest.raises(ValueError):
        lay_off((2, 2, 2), 5)


def test_lay_off_with_order_examples():
    res = lay_off_with_order((3, 2, 2, 2, 1), 1)
    assert res.reduced.values == (1, 1, 1, 1)
    assert res.affected == frozenset({2, 3, 4})

    res = lay_off_with_order((2, 2, 2), 3)
    assert res.reduced.values == (1, 1)
    assert res.affected == frozenset({1, 2})

    res = lay_off_with_order((1, 1), 1)
    assert res.reduced.values == (0,)
    assert res.affected == frozenset({2})


def test_lay_off_with_order_takes_largest_tied_indices():
    # threshold value 2 is shared; the last two of the tied entries drop
    res = lay_off_with_order((2, 2, 2, 2, 2), 3)
    assert res.affected == frozenset({4, 5})
    assert res.reduced.values == (2, 2, 1, 1)


def test_is_graphic_examples():
    assert is_graphic((2, 2, 2))
    assert not is_graphic((3, 3, 1, 1))
    assert is_graphic((7, 7, 7, 3, 3, 3, 3, 3))
    assert is_graphic(())
    assert is_graphic((0, 0, 0))
    assert not is_graphic((1,))


def test_is_graphic_input_errors():
    with pytest.raises(ValueError):
        is_graphic((2, -1))
    with pytest.raises(ValueError):
        is_graphic((1, 2, 3))


def test_degree_sequence_type_invariants():
    with pytest.raises(ValueError):
        DegreeSequence((1, 2))
    with pytest.raises(ValueError):
        DegreeSequence((-1,))
    with pytest.raises(ValueError):
        DegreeSequence((3, 1, 1))  # d1 > n-1


@pytest.mark.parametrize("n", range(0, 8))
def test_is_graphic_agrees_with_enumeration(n):
    """Brute-force oracle: a sequence is graphic iff some of the 2^C(n,2)
    graphs on n vertices has it as its sorted degree sequence."""
    realizable = degree_sequence_set(n)
    for seq in all_nonincreasing_tuples(n, max(n - 1, 0)):
        assert is_graphic(seq) == (seq in realizable), seq


def test_is_graphic_rejects_overlarge_leading_degree():
    # not a valid DegreeSequence, but a well-posed (negative) question
    assert not is_graphic((7, 3, 3, 1, 1))


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 12), st.randoms(use_true_random=False))
def test_with_order_is_permutation_of_plain(n, pyrng):
    seq = random_graphic_sequence(pyrng, n)
    i = pyrng.randint(1, len(seq))
    plain = lay_off(seq, i)
    ordered = lay_off_with_order(seq, i)
    assert sorted(plain) == sorted(ordered.reduced.values)
    assert len(ordered.affected) == seq.values[i - 1]
    assert i not in ordered.affected


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 12), st.randoms(use_true_random=False))
def test_with_order_output_nonincreasing(n, pyrng):
    seq = random_graphic_sequence(pyrng, n)
    i = pyrng.randint(1, len(seq))
    reduced = lay_off_with_order(seq, i).reduced.values
    assert all(reduced[j] >= reduced[j + 1] for j in range(len(reduced) - 1))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_graphic_implies_even_sum(n, pyrng):
    seq = random_graphic_sequence(pyrng, n)
    assert sum(seq.values) % 2 == 0
    assert is_graphic(seq)


def test_odd_sum_never_graphic():
    assert not is_graphic((3, 2, 2, 2))


def test_parse_degree_file():
    values, reordered = parse_degree_file("1 3\n2 2\n")
    assert values == (3, 2, 2, 1)
    assert reordered
    values, reordered = parse_degree_file("3 2\n2 1")
    assert not reordered
    with pytest.raises(ValueError):
        parse_degree_file("1 two 3")
