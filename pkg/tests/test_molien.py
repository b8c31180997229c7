from fractions import Fraction

import pytest

from essdim.catalog import Alternating, Cyclic, Exceptional, Imprimitive, Symmetric, degrees
from essdim.errors import DomainRefusal, EnumerationBudgetError, NotAProductError, TruncationError
from essdim.exactnum import PolySeries, series_reciprocal
from essdim.molien import MolienSeries, default_bound, extract_degrees, molien_series

from oracles import (
    molien_by_matrices,
    series_of_product_inverse,
    sympy_monomial_matrices,
    sympy_standard_matrices,
)


def _series(degs, bound):
    return MolienSeries(tuple(Fraction(c) for c in series_of_product_inverse(degs, bound)))


def test_cyclic_5():
    assert list(molien_series(Cyclic(5), 10).coeffs) == [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]


@pytest.mark.parametrize(
    "g, mats, bound, degs",
    [
        (Symmetric(3), lambda: sympy_standard_matrices(3), 6, (2, 3)),
        (Imprimitive(2, 1, 2), lambda: sympy_monomial_matrices(2, 1, 2), 8, (2, 4)),
        (Imprimitive(3, 1, 2), lambda: sympy_monomial_matrices(3, 1, 2), 7, (3, 6)),
    ],
    ids=["S3", "G(2,1,2)", "G(3,1,2)"],
)
def test_against_explicit_matrix_average(g, mats, bound, degs):
    expected = molien_by_matrices(mats(), bound)
    got = molien_series(g, bound)
    assert [Fraction(int(sp_c.p), int(sp_c.q)) for sp_c in expected] == list(got.coeffs)
    assert list(got.coeffs) == series_of_product_inverse(degs, bound)


def test_extract_examples():
    assert extract_degrees(_series((2, 4), 7), 2) == (2, 4)
    assert extract_degrees(molien_series(Symmetric(4)), 3) == (2, 3, 4)
    for n in range(1, 6):
        assert extract_degrees(_series((1,) * n, 4), n) == (1,) * n


def _oracle_grid():
    for m in range(1, 13):
        yield Cyclic(m)
    for n in range(2, 8):
        yield Symmetric(n)
    for m in range(2, 5):
        for l in (d for d in range(1, m + 1) if m % d == 0):
            for n in range(2, 5):
                yield Imprimitive(m, l, n)


@pytest.mark.parametrize("g", list(_oracle_grid()), ids=str)
def test_oracle_agreement(g):
    ms = molien_series(g)
    assert ms.bound == default_bound(g) == sum(degrees(g)) + 1
    found = extract_degrees(ms, g.rank)
    assert found == degrees(g)
    # peel soundness: prod(1 - t^d) reproduces the reciprocal exactly
    assert PolySeries.from_factors(found, ms.bound) == series_reciprocal(ms.as_series())
    first = next(k for k in range(1, ms.bound + 1) if ms.coeffs[k])
    assert first == min(found)
    recip = series_reciprocal(ms.as_series())
    assert recip[min(found)] == -found.count(min(found))
    assert all(c >= 0 for c in ms.coeffs) and ms.coeffs[0] == 1


def test_discovery_mode_bound():
    # no degree formula consulted: |G| + rank terms
    assert default_bound(Alternating(4)) == 12 + 4
    ms = molien_series(Alternating(4))
    # natural Alt(4): invariants e1, e2, e3, e4 and the Vandermonde (degree 6)
    assert list(ms.coeffs[:7]) == [1, 1, 2, 3, 5, 6, 10]


def test_truncation_too_small():
    with pytest.raises(TruncationError, match="truncation bound too small"):
        extract_degrees(molien_series(Imprimitive(3, 1, 2), 4), 2)


def test_not_a_product():
    # 1 + t + t^2 + ... is 1/(1 - t) but 1 + 2t^2 is not of the product form
    with pytest.raises(NotAProductError):
        extract_degrees(MolienSeries((Fraction(1), Fraction(0), Fraction(2), Fraction(0))), 1)
    # Alt(4) natural is not a reflection group
    with pytest.raises(NotAProductError):
        extract_degrees(molien_series(Alternating(4)), 4)


def test_not_enumerable():
    with pytest.raises(DomainRefusal):
        molien_series(Exceptional(4), 10)


def test_budget():
    with pytest.raises(EnumerationBudgetError):
        molien_series(Symmetric(12), 5, budget=20)
