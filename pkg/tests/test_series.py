from fractions import Fraction

import mpmath
import pytest

from app.series import (
    EulerTransform,
    SeriesError,
    TruncatedSeries,
    catalan_series,
    dominated_by,
    evaluate,
    first_difference,
    h_truncation,
    motzkin_atom_series,
    mset,
    mset_ge2,
    mset_ge3,
    rooted_tree_series,
    w_tail,
    wide_tree_series,
)


def _series(*values):
    return TruncatedSeries.from_coefficients(values)


def test_binary_operations_keep_the_smaller_cap():
    a = _series(1, 1, 1, 1)
    b = _series(1, 2, 3)

    assert (a + b).coeffs == (2, 3, 4)
    assert (a * b).coeffs == (1, 3, 6)
    assert (a - b).coeffs == (0, -1, -2)
    assert (1 - a).coeffs == (0, -1, -1, -1)
    assert (3 * b).coeffs == (3, 6, 9)


def test_shift_and_substitution_keep_the_cap():
    a = _series(1, 2, 3, 4)

    assert a.shift().coeffs == (0, 1, 2, 3)
    assert a.shift(2).coeffs == (0, 0, 1, 2)
    assert a.substitute_power(2).coeffs == (1, 0, 2, 0)


def test_reciprocal():
    geometric = (1 - TruncatedSeries.monomial(1, 6)).reciprocal()

    assert geometric.coeffs == (1,) * 7
    assert (geometric * (1 - TruncatedSeries.monomial(1, 6))).coeffs == TruncatedSeries.one(6).coeffs


def test_from_coefficients_pads_and_cuts():
    assert TruncatedSeries.from_coefficients([1, 2], cap=3).coeffs == (1, 2, 0, 0)
    assert TruncatedSeries.from_coefficients([1, 2, 3, 4], cap=1).coeffs == (1, 2)


def test_series_errors():
    with pytest.raises(SeriesError, match="constant coefficient"):
        TruncatedSeries(())
    with pytest.raises(SeriesError, match="not a unit"):
        _series(2, 1).reciprocal()
    with pytest.raises(SeriesError, match="cannot extend"):
        _series(1, 1).truncate(5)
    with pytest.raises(SeriesError, match="zero constant term"):
        mset(_series(1, 1))
    with pytest.raises(SeriesError, match="at least 1"):
        _series(1, 1).substitute_power(0)


def test_json_keeps_big_coefficients_exact():
    big = _series(1, 10**40, -3)

    assert big.to_json() == ["1", str(10**40), "-3"]
    assert TruncatedSeries.from_json(big.to_json()) == big


def test_first_difference_and_dominance():
    a = _series(1, 1, 2, 4, 8)
    b = _series(1, 1, 2, 5, 13)

    assert first_difference(a, b) == 3
    assert first_difference(a, a) is None
    assert dominated_by(a, b) == (True, 3)
    assert dominated_by(b, a) == (False, None)
    assert dominated_by(a, a) == (True, None)


def test_euler_transform_counts_partitions():
    transform = EulerTransform()
    for _ in range(6):
        transform.push(1)

    assert transform.m == [1, 1, 2, 3, 5, 7, 11]
    assert transform.degree == 6
    assert [transform.ge2(n) for n in range(7)] == [0, 0, 1, 2, 4, 6, 10]
    assert [transform.ge3(n) for n in range(7)] == [0, 0, 0, 1, 2, 4, 7]


def test_multiset_restrictions():
    single = TruncatedSeries.monomial(1, 5)
    parts = _series(0, 1, 1, 1, 1, 1)

    assert mset(single).coeffs == (1, 1, 1, 1, 1, 1)
    assert mset(parts).coeffs == (1, 1, 2, 3, 5, 7)
    assert mset_ge2(single).coeffs == (0, 0, 1, 1, 1, 1)
    assert mset_ge3(single).coeffs == (0, 0, 0, 1, 1, 1)
    assert mset_ge3(parts).coeffs == (0, 0, 0, 1, 2, 4)


def test_w_tail():
    assert w_tail(TruncatedSeries.monomial(1, 4)) == (
        Fraction(0), Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4),
    )


def test_multiset_is_exponential_of_its_tail():
    z = _series(0, 1, 1, 2, 4, 9)
    x = mpmath.mpf("0.01")
    tail = w_tail(z)

    expected = mpmath.exp(evaluate(z, x) + evaluate(tail, x))

    assert abs(evaluate(mset(z), x) - expected) < mpmath.mpf("1e-7")


def test_evaluate():
    assert evaluate(_series(1, 2, 3), 2) == 17
    assert evaluate([Fraction(1, 2), Fraction(1, 4)], 2) == 1


def test_named_series():
    assert catalan_series(6).coeffs == (1, 1, 2, 5, 14, 42, 132)
    assert motzkin_atom_series(6).coeffs == (0, 1, 1, 2, 4, 9, 21)
    assert rooted_tree_series(8).coeffs == (0, 1, 1, 2, 4, 9, 20, 48, 115)
    assert wide_tree_series(7).coeffs == (0, 1, 0, 0, 1, 1, 1, 2)


def test_h_truncation():
    assert h_truncation(1, 3).coeffs == (1, 0, 0, 0)
    assert h_truncation(2, 4).coeffs == (1, 1, 1, 1, 1)
    assert h_truncation(3, 6).coeffs == (1, 1, 2, 4, 8, 16, 32)
    assert h_truncation(12, 8) == catalan_series(8)
    with pytest.raises(SeriesError):
        h_truncation(0, 3)
