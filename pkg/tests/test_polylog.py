"""Evaluation, series oracles, product expansions, and relation generation."""

import itertools
import random
from fractions import Fraction

import pytest

import npolylog.polylog as pl
from npolylog.polylog import (
    LinComb,
    expand_to_products,
    kernel_element,
    magnus_product_identity,
    nfold_product,
    polylog_map,
    polylog_rational,
    product_letter_word,
    relation_from_record,
    relation_record,
    series_coeffs,
    series_coeffs_by_chains,
    verify_relation,
)
from npolylog.ratpoly import RatFun, taylor_coeffs
from npolylog.words import magnus_index, mpl_index


def plain_indices(max_depth, max_weight):
    out = []
    for depth in range(max_depth + 1):
        for entries in itertools.product(range(max_weight + 1), repeat=depth):
            if sum(entries) <= max_weight:
                out.append(mpl_index(*entries))
    return out


def test_closed_forms():
    assert polylog_rational(mpl_index()) == 1
    assert polylog_rational(mpl_index(0)) == RatFun((0, 1), 1)
    assert polylog_rational(mpl_index(1)) == RatFun((0, 1), 2)
    assert polylog_rational(mpl_index(1, 1)) == RatFun((0, 0, 2, 1), 4)
    for r in range(1, 9):
        assert polylog_rational(mpl_index(*([0] * r))) == RatFun((0, 1), 1) ** r


def test_rational_against_series_dp():
    for s in plain_indices(2, 4):
        assert taylor_coeffs(polylog_rational(s), 25) == series_coeffs(s, 25)


def test_series_dp_against_chain_enumeration():
    for s in plain_indices(2, 3):
        assert series_coeffs(s, 12) == series_coeffs_by_chains(s, 12)
    assert series_coeffs(mpl_index(3, 1, 2), 10) == series_coeffs_by_chains(
        mpl_index(3, 1, 2), 10
    )


def test_series_examples():
    assert series_coeffs(mpl_index(0), 4) == [0, 1, 1, 1, 1]
    assert series_coeffs(mpl_index(), 3) == [1, 0, 0, 0]
    got = series_coeffs(mpl_index(1, 1), 6)
    assert got == [0, 0, 2, 9, 24, 50, 90]


def test_polylog_map_is_linear():
    a = mpl_index(1)
    b = mpl_index(0, 0)
    c = LinComb({a: Fraction(1, 2), b: -3})
    want = Fraction(1, 2) * polylog_rational(a) - 3 * polylog_rational(b)
    assert polylog_map(c) == want
    assert polylog_map(LinComb()).is_zero()


def test_lincomb_basics():
    a = mpl_index(1, 2)
    b = mpl_index(0, 3)
    c = LinComb({a: 1, b: -1})
    assert str(c) == "Li(1,2) - Li(0,3)"
    assert str(LinComb()) == "0"
    assert (c - c).is_zero()
    assert 2 * c - c == c
    assert str(LinComb({b: Fraction(-1, 2)})) == "-1/2*Li(0,3)"
    assert list(LinComb({b: 1, a: 1}).items())[0][0] == a


def test_plain_and_magnus_indices_are_kept_apart():
    with pytest.raises(ValueError, match="plain index"):
        polylog_rational(magnus_index(1, 2))
    with pytest.raises(ValueError, match="plain index"):
        expand_to_products(magnus_index(1, 2))
    with pytest.raises(ValueError, match="magnus index"):
        magnus_product_identity(mpl_index(1, 2))
    with pytest.raises(ValueError, match="magnus index"):
        kernel_element(mpl_index(1, 2), (2, 1))


def test_expand_to_products_examples():
    assert expand_to_products(mpl_index(1, 1)) == {
        magnus_index(1, 1): 1,
        magnus_index(0, 2): 1,
    }
    assert expand_to_products(mpl_index(0, 0)) == {magnus_index(0, 0): 1}
    assert expand_to_products(mpl_index(4)) == {magnus_index(4): 1}
    assert expand_to_products(mpl_index(2, 1)) == {
        magnus_index(0, 3): 1,
        magnus_index(1, 2): 2,
        magnus_index(2, 1): 1,
    }
    with pytest.raises(ValueError):
        expand_to_products(mpl_index())


def test_expand_to_products_closes_numerically():
    for s in plain_indices(3, 4):
        if s.depth == 0:
            continue
        total = RatFun.zero()
        for k, c in expand_to_products(s).items():
            prod = RatFun.one()
            for e in k.entries:
                prod = prod * polylog_rational(mpl_index(e))
            total = total + c * prod
        assert total == polylog_rational(s)


def test_product_letter_word_examples():
    got = product_letter_word(2, mpl_index(1))
    assert got == LinComb(
        {mpl_index(2, 1): 1, mpl_index(1, 2): -2, mpl_index(0, 3): 1}
    )
    assert product_letter_word(0, mpl_index(5)) == LinComb({mpl_index(0, 5): 1})
    got = product_letter_word(1, mpl_index(0, 2))
    assert got == LinComb({mpl_index(1, 0, 2): 1, mpl_index(0, 1, 2): -1})


def test_product_letter_word_is_exact():
    rng = random.Random(471)
    for _ in range(20):
        m = rng.randint(0, 4)
        w = mpl_index(*[rng.randint(0, 3) for _ in range(rng.randint(1, 3))])
        lhs = polylog_rational(mpl_index(m)) * polylog_rational(w)
        assert polylog_map(product_letter_word(m, w)) == lhs


def test_nfold_product_examples():
    assert nfold_product([3]) == LinComb({mpl_index(3): 1})
    assert nfold_product([2, 1]) == product_letter_word(2, mpl_index(1))
    assert nfold_product([0, 0]) == LinComb(
        {mpl_index(0, 0): 2}
    ) - LinComb({mpl_index(0, 0): 1}) + LinComb({mpl_index(0, 0): 0})


def test_nfold_product_matches_iterated_expansion():
    rng = random.Random(472)
    for _ in range(15):
        factors = [rng.randint(0, 4) for _ in range(rng.randint(1, 4))]
        step = LinComb({mpl_index(factors[-1]): 1})
        for m in reversed(factors[:-1]):
            acc = LinComb()
            for idx, coef in step.items():
                acc = acc + coef * product_letter_word(m, idx)
            step = acc
        assert nfold_product(factors) == step


def test_nfold_product_is_exact():
    rng = random.Random(473)
    for _ in range(10):
        factors = [rng.randint(0, 4) for _ in range(rng.randint(1, 4))]
        prod = RatFun.one()
        for m in factors:
            prod = prod * polylog_rational(mpl_index(m))
        assert polylog_map(nfold_product(factors)) == prod


def test_products_commute_after_evaluation():
    for m in range(5):
        for n in range(5):
            a = polylog_map(nfold_product([m, n]))
            b = polylog_map(nfold_product([n, m]))
            assert a == b


def test_magnus_product_identity_examples():
    lhs, rhs = magnus_product_identity(magnus_index(1, 2))
    assert lhs == rhs == LinComb({mpl_index(1, 2): 1, mpl_index(0, 3): -1})
    lhs, rhs = magnus_product_identity(magnus_index(0))
    assert lhs == rhs == LinComb({mpl_index(0): 1})
    lhs, rhs = magnus_product_identity(magnus_index(2))
    assert lhs == rhs == LinComb({mpl_index(2): 1})


def test_magnus_product_identity_small_sweep():
    for depth in range(3):
        for entries in itertools.product(range(3), repeat=depth + 1):
            k = magnus_index(*entries)
            lhs, rhs = magnus_product_identity(k)
            assert lhs == rhs
            prod = RatFun.one()
            for e in k.entries:
                prod = prod * polylog_rational(mpl_index(e))
            assert polylog_map(rhs) == prod


def test_kernel_element_examples():
    got = kernel_element(magnus_index(1, 2), (2, 1))
    assert got == LinComb(
        {mpl_index(1, 2): 3, mpl_index(0, 3): -2, mpl_index(2, 1): -1}
    )
    got = kernel_element(magnus_index(0, 1, 2), (2, 3, 1))
    assert got == LinComb(
        {
            mpl_index(0, 1, 2): 2,
            mpl_index(1, 1, 1): 2,
            mpl_index(0, 3, 0): 1,
            mpl_index(0, 0, 3): -1,
            mpl_index(1, 2, 0): -1,
            mpl_index(1, 0, 2): -1,
            mpl_index(0, 2, 1): -2,
        }
    )


def test_kernel_element_identity_permutation_is_zero():
    assert kernel_element(magnus_index(1, 2), (1, 2)).is_zero()
    assert kernel_element(magnus_index(0, 1, 2), (1, 2, 3)).is_zero()


def test_kernel_element_is_homogeneous():
    rng = random.Random(474)
    for _ in range(15):
        depth = rng.randint(1, 3)
        entries = [rng.randint(0, 3) for _ in range(depth + 1)]
        k = magnus_index(*entries)
        sigma = list(range(1, depth + 2))
        rng.shuffle(sigma)
        c = kernel_element(k, sigma)
        for idx, _ in c.items():
            assert idx.weight == k.weight
            assert idx.depth == k.depth + 1


def test_kernel_element_rejects_bad_sigma():
    for sigma in [(1, 1), (0, 1), (2, 1, 3), ()]:
        with pytest.raises(ValueError, match="permutation"):
            kernel_element(magnus_index(1, 2), sigma)


def test_verify_relation_accepts_kernel_elements():
    ok, witness = verify_relation(kernel_element(magnus_index(1, 2), (2, 1)))
    assert ok and witness is None
    ok, witness = verify_relation(kernel_element(magnus_index(0, 1, 2), (2, 3, 1)))
    assert ok and witness is None
    ok, witness = verify_relation(LinComb())
    assert ok and witness is None


def test_verify_relation_rejects_nonrelations():
    ok, witness = verify_relation(LinComb({mpl_index(0): 1}))
    assert not ok
    assert witness == RatFun((0, 1), 1)
    ok, witness = verify_relation(
        LinComb({mpl_index(1, 2): 1, mpl_index(0, 3): -1})
    )
    assert not ok and witness is not None


def test_verify_relation_refuses_on_pipeline_disagreement(monkeypatch):
    good = pl.series_coeffs

    def lying(s, n_max):
        out = list(good(s, n_max))
        if s == mpl_index(1, 2):
            out[-1] += 1
        return out

    monkeypatch.setattr(pl, "series_coeffs", lying)
    with pytest.raises(RuntimeError, match="refusing to answer"):
        verify_relation(kernel_element(magnus_index(1, 2), (2, 1)))


def test_relation_record_round_trip():
    c = kernel_element(magnus_index(1, 2), (2, 1))
    rec = relation_record(c, verified=True)
    assert rec["verified"] is True
    assert rec["weight"] == 3 and rec["depth"] == 2
    assert relation_from_record(rec) == c
    mixed = nfold_product([4, 5]) - LinComb({mpl_index(9): 1})
    rec = relation_record(mixed, verified=False)
    assert rec["weight"] == 9 and rec["depth"] is None
    assert relation_from_record(rec) == mixed
    rec = relation_record(LinComb({mpl_index(2): 1, mpl_index(3): 1}), verified=False)
    assert rec["weight"] is None and rec["depth"] == 1


def test_relation_record_coefficients_are_exact_strings():
    c = LinComb({mpl_index(4): Fraction(5, 33)})
    rec = relation_record(c, verified=False)
    assert rec["terms"][0]["coef"] == "5/33"
    assert relation_from_record(rec) == c


def test_relation_from_record_rejects_malformed_input():
    with pytest.raises(ValueError, match="term 0"):
        relation_from_record({"terms": [{"coef": "x", "index": [1]}]})
    with pytest.raises(ValueError, match="term 0"):
        relation_from_record({"terms": [{"coef": "1"}]})
    with pytest.raises(ValueError, match="terms"):
        relation_from_record({"terms": "nope"})
    with pytest.raises(ValueError):
        relation_from_record({"terms": [{"coef": "1", "index": [1, -2]}]})
