import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from indetmatch import (
    EncodedString,
    border_array_regular,
    build_alphabet,
    encode_text,
    longest_regular_prefix_len,
    longest_regular_suffix_len,
    prefix_array_indet,
)
from indetmatch.errors import IndeterminateLetterPresent

from helpers import border_array_oracle, make_instance, prefix_array_oracle, z_array_equality

ABC = build_alphabet("abc")
AB = build_alphabet("ab")


def test_prefix_array_worked_example():
    x = encode_text("aabaabaa[ab]baa[ac]", ABC)
    assert prefix_array_indet(x) == [13, 1, 0, 6, 1, 0, 3, 5, 1, 0, 2, 2, 1]


def test_prefix_array_overlap_strings():
    assert prefix_array_indet(encode_text("aaa[ab]", AB)) == [4, 3, 2, 1]
    assert prefix_array_indet(encode_text("aab[ab]abaa", AB)) == [8, 1, 0, 5, 1, 0, 2, 1]


def test_prefix_array_trivia():
    assert prefix_array_indet(EncodedString.from_values([], AB)) == []
    assert prefix_array_indet(encode_text("a", AB)) == [1]


def test_border_array_worked_example():
    q = encode_text("aabaa", AB)
    assert border_array_regular(q) == [0, 1, 0, 1, 2]


def test_border_array_prefix_length():
    s = encode_text("aab[ab]a", AB)
    assert border_array_regular(s, 3) == [0, 1, 0]
    with pytest.raises(IndeterminateLetterPresent):
        border_array_regular(s, 4)
    with pytest.raises(IndeterminateLetterPresent):
        border_array_regular(s)
    with pytest.raises(ValueError):
        border_array_regular(s, 9)


def test_border_array_first_entry_is_zero():
    assert border_array_regular(encode_text("a", AB)) == [0]
    assert border_array_regular(encode_text("aaaa", AB)) == [0, 1, 2, 3]


@pytest.mark.parametrize(
    "text,expected",
    [("[ab]cc", 0), ("ab[ac]b", 2), ("abc", 3), ("", 0)],
)
def test_longest_regular_prefix(text, expected):
    assert longest_regular_prefix_len(encode_text(text, ABC)) == expected


@pytest.mark.parametrize(
    "text,expected",
    [("aabaa", 5), ("cc[ab]", 0), ("[ac]bab", 3), ("", 0)],
)
def test_longest_regular_suffix(text, expected):
    assert longest_regular_suffix_len(encode_text(text, ABC)) == expected


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_prefix_array_matches_oracle(data):
    sigma = data.draw(st.integers(2, 9))
    n = data.draw(st.integers(1, 40))
    k = data.draw(st.integers(0, n))
    seed = data.draw(st.integers(0, 2**32))
    s, _ = make_instance(sigma, n, 0, k, 0, seed)
    assert prefix_array_indet(s) == prefix_array_oracle(s.to_list())


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_regular_prefix_array_equals_z_algorithm(data):
    sigma = data.draw(st.integers(2, 9))
    n = data.draw(st.integers(1, 60))
    seed = data.draw(st.integers(0, 2**32))
    s, _ = make_instance(sigma, n, 0, 0, 0, seed)
    assert prefix_array_indet(s) == z_array_equality(s.to_list())


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_border_array_matches_all_borders_definition(data):
    sigma = data.draw(st.integers(2, 9))
    n = data.draw(st.integers(1, 24))
    seed = data.draw(st.integers(0, 2**32))
    s, _ = make_instance(sigma, n, 0, 0, 0, seed)
    assert border_array_regular(s) == border_array_oracle(s.to_list())
