"""Molien series of an enumerable group, computed exactly from its signature
families, and recovery of the fundamental degrees from the series.

This path never looks at the degree formulas in :mod:`essdim.catalog`; it
is the independent check on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .catalog import (
    Alternating,
    Cyclic,
    GroupSpec,
    Imprimitive,
    Symmetric,
    degrees,
    group_order,
    is_reflection_spec,
)
from .enumeration import DEFAULT_BUDGET, class_families, is_enumerable
from .errors import DomainRefusal, InternalConsistencyError, NotAProductError, TruncationError
from .exactnum import CyclotomicNumber, PolySeries, series_divide, series_reciprocal
from .spectra import _rep_rule, eigenvalues_of_signature


@dataclass(frozen=True)
class MolienSeries:
    coeffs: tuple[Fraction, ...]
    group: Optional[GroupSpec] = None

    @property
    def bound(self) -> int:
        return len(self.coeffs) - 1

    def as_series(self) -> PolySeries:
        return PolySeries(self.coeffs, self.bound)


def field_order(g: GroupSpec) -> int:
    """A cyclotomic order containing every eigenvalue of every element."""
    if isinstance(g, Cyclic):
        return g.m
    if isinstance(g, (Symmetric, Alternating)):
        return lcm(*range(1, g.n + 1))
    if isinstance(g, Imprimitive):
        return g.m * lcm(*range(1, g.n + 1))
    raise TypeError(f"{g.label}: no signature data")


def default_bound(g: GroupSpec) -> int:
    if is_reflection_spec(g):
        return sum(degrees(g)) + 1
    # invariants are generated in degree <= |G|
    return group_order(g) + g.rank


def molien_series(g: GroupSpec, bound: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> MolienSeries:
    """(1/|G|) * sum over elements of 1/det(1 - t*g), to ``t**bound``."""
    if not is_enumerable(g):
        raise DomainRefusal(f"{g.label}: no signature data; Molien series unavailable")
    if bound is None:
        bound = default_bound(g)
    N = field_order(g)
    rule = _rep_rule(g)
    # accumulate in Z[z]/(z^N - 1): multiplying by a root of unity is a rotation
    total = [[0] * N for _ in range(bound + 1)]
    for fam in class_families(g, budget):
        h = [[0] * N for _ in range(bound + 1)]
        h[0][0] = 1
        for t, mult in eigenvalues_of_signature(fam.signature, rule).items():
            if N % t.den:
                raise InternalConsistencyError(f"eigenvalue {t!r} outside field of order {N}")
            r = t.num * (N // t.den)
            for _ in range(mult):
                # divide by (1 - lambda t): h_k += lambda * h_{k-1}
                for k in range(1, bound + 1):
                    prev = h[k - 1]
                    rotated = prev[N - r :] + prev[: N - r]
                    h[k] = [a + b for a, b in zip(h[k], rotated)]
        c = fam.element_count
        for k in range(bound + 1):
            total[k] = [a + c * b for a, b in zip(total[k], h[k])]
    order = group_order(g)
    coeffs = []
    for k in range(bound + 1):
        value = CyclotomicNumber.from_group_ring(N, total[k])
        if not value.is_rational():
            raise InternalConsistencyError(
                f"{g.label}: Molien coefficient of t^{k} is not rational: {value!r}"
            )
        coeffs.append(value.rational_value() / order)
    if coeffs[0] != 1 or any(c < 0 for c in coeffs):
        raise InternalConsistencyError(f"{g.label}: malformed Molien series {coeffs}")
    return MolienSeries(tuple(coeffs), g)


def extract_degrees(ms: MolienSeries, n: int) -> tuple[int, ...]:
    """Peel ``1/ms = prod(1 - t**d_i)`` one factor at a time, lowest degree first."""
    q = series_reciprocal(ms.as_series())
    found: list[int] = []
    while len(found) < n:
        d = next((k for k in range(1, q.bound + 1) if q[k] != 0), None)
        if d is None:
            raise TruncationError(
                f"truncation bound too small: found {len(found)} of {n} degrees "
                f"below t^{q.bound}"
            )
        c = q[d]
        if c >= 0 or Fraction(c).denominator != 1:
            raise NotAProductError(
                f"series is not a product of (1 - t^d) factors (coefficient {c} at t^{d})"
            )
        one_minus = [0] * (q.bound + 1)
        one_minus[0] = 1
        one_minus[d] = -1
        q = series_divide(q, PolySeries(one_minus, q.bound))
        found.append(d)
    if any(q[k] != 0 for k in range(1, q.bound + 1)):
        raise NotAProductError("series is not a product of (1 - t^d) factors")
    return tuple(found)
