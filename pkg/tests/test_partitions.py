from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from tensormult.errors import NonStandardWeight, SizeMismatch, TooManyRows
from tensormult.partitions import (
    conjugate,
    fits_hook,
    format_partition,
    hook_from_super_m,
    hook_lengths,
    hook_partitions_of,
    is_standard_m,
    lambda_from_m,
    m_from_lambda,
    parse_partition,
    partition,
    partitions_of,
    reduce_redundant,
    super_m_from_hook,
)
from tensormult.occupancy import standard_m_vectors


def test_partition_canonical_form():
    assert partition((3, 2, 1, 0, 0)) == (3, 2, 1)
    assert partition([]) == ()
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((2, -1))


def test_lambda_from_m_examples():
    assert lambda_from_m((3, 1), 6) == (3, 2, 1)
    assert lambda_from_m((0,), 4) == (4,)
    with pytest.raises(NonStandardWeight):
        lambda_from_m((5, 1), 6)  # rows (1, 4, 1) are not weakly decreasing


def test_m_from_lambda_examples():
    assert m_from_lambda((3, 2, 1), 2, 6) == (3, 1)
    assert m_from_lambda((6,), 2, 6) == (0, 0)
    assert m_from_lambda((2, 2, 2), 2, 6) == (4, 2)
    with pytest.raises(SizeMismatch):
        m_from_lambda((3, 2), 2, 6)
    with pytest.raises(TooManyRows):
        m_from_lambda((3, 1, 1, 1), 2, 6)


def test_conjugate_examples():
    assert conjugate((3, 2, 1)) == (3, 2, 1)
    assert conjugate((4, 2)) == (2, 2, 1, 1)
    assert conjugate((6,)) == (1,) * 6
    assert conjugate(()) == ()


def test_hook_lengths_examples():
    assert hook_lengths((3, 2, 1)) == ((5, 3, 1), (3, 1), (1,))
    assert hook_lengths((1,)) == ((1,),)
    assert hook_lengths((2, 1)) == ((3, 1), (1,))


def test_reduce_redundant_examples():
    assert reduce_redundant((3, 2, 1), 2) == (2, 1)
    assert reduce_redundant((4, 2), 2) == (4, 2)
    assert reduce_redundant((2, 2, 2), 2) == ()


def test_super_maps_examples():
    assert super_m_from_hook((4, 2), 6, (1, 2)) == (2, 1)
    assert hook_from_super_m((2, 1), 6, (1, 2)) == (4, 2)
    assert super_m_from_hook((6,), 6, (1, 1)) == (0,)
    assert super_m_from_hook((3, 2, 1), 6, (2, 1)) == (3, 1)
    assert hook_from_super_m((3, 1), 6, (2, 1)) == (3, 2, 1)


def test_round_trip_m_to_lambda_exhaustive():
    # every standard weight vector that labels a diagram round-trips
    for rank in range(1, 6):
        for two_sl in range(0, 25):
            for m_vec in standard_m_vectors(rank, two_sl):
                try:
                    lam = lambda_from_m(m_vec, two_sl)
                except NonStandardWeight:
                    continue
                assert m_from_lambda(lam, rank, two_sl) == m_vec


def test_round_trip_lambda_to_m_exhaustive():
    for rank in range(1, 6):
        for two_sl in range(0, 25):
            for lam in partitions_of(two_sl, max_rows=rank + 1):
                m_vec = m_from_lambda(lam, rank, two_sl)
                assert is_standard_m(m_vec, two_sl)
                assert lambda_from_m(m_vec, two_sl) == lam


def test_super_round_trip_exhaustive():
    shapes = [(m, n) for m in range(1, 5) for n in range(1, 5) if m + n <= 5]
    for shape in shapes:
        for total in range(0, 13):
            for lam in hook_partitions_of(total, shape):
                m_vec = super_m_from_hook(lam, total, shape)
                assert hook_from_super_m(m_vec, total, shape) == lam


def test_conjugate_involution_exhaustive():
    for total in range(0, 21):
        for lam in partitions_of(total):
            assert conjugate(conjugate(lam)) == lam


@given(st.lists(st.integers(min_value=0, max_value=8), max_size=6))
def test_conjugate_involution_random(draw):
    lam = partition(sorted(draw, reverse=True))
    assert conjugate(conjugate(lam)) == lam


def test_hook_product_divides_factorial():
    for total in range(0, 13):
        for lam in partitions_of(total):
            hooks = prod(h for row in hook_lengths(lam) for h in row)
            assert factorial(total) % hooks == 0


def test_fits_hook():
    assert fits_hook((4, 1, 1, 1), (2, 1))
    assert fits_hook((4, 2, 1), (2, 1))
    assert not fits_hook((4, 2, 2), (2, 1))
    assert fits_hook((5,), (1, 1))
    assert not fits_hook((5, 2), (1, 1))


def test_text_round_trip():
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("0") == ()
    assert format_partition(()) == "0"
    assert format_partition((3, 2, 1)) == "3,2,1"
