"""Shared strategies and fixtures."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from jordanquad.scalars import PrimeField, Rationals


@pytest.fixture
def Q():
    return Rationals()


@pytest.fixture
def F7():
    return PrimeField(7)


def rationals(max_num=30):
    return st.fractions(min_value=Fraction(-max_num), max_value=Fraction(max_num),
                        max_denominator=12)


def nonzero_rationals(max_num=30):
    return rationals(max_num).filter(bool)


def fp_elements(p):
    return st.integers(min_value=0, max_value=p - 1).map(PrimeField(p).element)


def nonzero_fp_elements(p):
    return st.integers(min_value=1, max_value=p - 1).map(PrimeField(p).element)
