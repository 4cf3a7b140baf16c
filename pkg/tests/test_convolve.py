import random

import pytest
from hypothesis import given, settings, strategies as st

from seqconv.convolve import conv, conv_fast, karatsuba, schoolbook, self_conv
from seqconv.seqgen import Seq, fib_seq, reverse


def _poly_oracle(a, b):
    # coefficient dictionary of the polynomial product
    out = {}
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out.get(i + j, 0) + x * y
    return [out[k] for k in range(len(a) + len(b) - 1)]


def test_identity_element():
    a, b, c = 3, -7, 11
    assert conv(Seq.of([1]), Seq.of([a, b, c])).values == (a, b, c)


def test_hand_examples():
    s = Seq.of([1, 1, 2])
    assert conv(s, s).values == (1, 2, 5, 4, 4)
    assert self_conv(Seq.of([1, 1])).values == (1, 2, 1)
    assert self_conv(Seq.of([9])).values == (81,)
    assert self_conv(fib_seq(3)).values == (1, 2, 5, 4, 4)
    assert self_conv(fib_seq(4)).values == (1, 2, 5, 10, 10, 12, 9)


def test_sum_product_fib5():
    assert sum(conv(fib_seq(5), fib_seq(5)).values) == 144


def test_result_provenance():
    r = conv(fib_seq(4), reverse(fib_seq(4)))
    assert r.seq.provenance.family == "convolved"
    assert r.seq.provenance.length == 7
    assert r.operands[1].transform_chain == ("reversed",)
    assert r.to_dict()["operands"][0]["family"] == "standard"


def test_empty_operand_rejected():
    with pytest.raises(ValueError):
        schoolbook([], [1])
    with pytest.raises(ValueError):
        karatsuba([1], [])


def test_fast_base_case():
    assert conv_fast(Seq.of([1]), Seq.of([1])).values == (1,)


def test_fast_fib100():
    a = fib_seq(100)
    assert conv_fast(a, a).values == conv(a, a).values == tuple(_poly_oracle(a.values, a.values))


def test_fast_matches_schoolbook_randomized():
    rng = random.Random(2024)
    for _ in range(1000):
        a = [rng.randint(-10**20, 10**20) for _ in range(rng.randint(1, 64))]
        b = [rng.randint(-10**20, 10**20) for _ in range(rng.randint(1, 64))]
        assert karatsuba(a, b) == schoolbook(a, b)


ints = st.lists(st.integers(-10**12, 10**12), min_size=1, max_size=32)


@given(ints, ints)
def test_schoolbook_matches_oracle(a, b):
    assert schoolbook(a, b) == _poly_oracle(a, b)


@given(ints, ints)
def test_commutative_and_length(a, b):
    x, y = Seq.of(a), Seq.of(b)
    assert conv(x, y).values == conv(y, x).values
    assert len(conv(x, y)) == len(a) + len(b) - 1


@given(ints, ints)
def test_sum_law(a, b):
    assert sum(conv(Seq.of(a), Seq.of(b)).values) == sum(a) * sum(b)


@given(ints, ints)
def test_reversal_symmetry(a, b):
    x, y = Seq.of(a), Seq.of(b)
    assert conv(reverse(x), reverse(y)).values == conv(x, y).values[::-1]


@settings(max_examples=50)
@given(st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=200),
       st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=200))
def test_fast_equivalence_larger(a, b):
    assert karatsuba(a, b) == schoolbook(a, b)
