"""Exact arithmetic kernels: roots of unity as rational turns, cyclotomic
numbers, and truncated power series with exact coefficients.

Rationals are :class:`fractions.Fraction`; everything else is built here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import NotInvertibleError

Rational = Fraction


class Turn:
    """A root of unity ``exp(2*pi*i * num/den)`` stored as a reduced fraction
    of a full rotation with ``0 <= num < den``.

    Construction reduces, so equal roots compare and hash equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den <= 0:
            raise ValueError("turn denominator must be positive")
        num %= den
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, name, value):
        raise AttributeError("Turn is immutable")

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Turn":
        return cls(q.numerator, q.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        """Multiplicative order of the root of unity."""
        return self.den

    def __mul__(self, other: "Turn") -> "Turn":
        # multiplying roots of unity adds angles
        if not isinstance(other, Turn):
            return NotImplemented
        return Turn(self.num * other.den + other.num * self.den, self.den * other.den)

    def inverse(self) -> "Turn":
        return Turn(-self.num, self.den)

    def __pow__(self, k: int) -> "Turn":
        return turn_pow(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Turn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __lt__(self, other: "Turn") -> bool:
        return self.as_fraction() < other.as_fraction()

    def __hash__(self) -> int:
        return hash((Turn, self.num, self.den))

    def __repr__(self) -> str:
        return f"Turn({self.num},{self.den})"

    def __str__(self) -> str:
        return "0" if self.num == 0 else f"{self.num}/{self.den}"


ONE_TURN = Turn(0, 1)


def turn_pow(t: Turn, k: int) -> Turn:
    return Turn(t.num * k, t.den)


def euler_phi(n: int) -> int:
    result, p, m = n, 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, lowest degree first)


def _trim(coeffs: list) -> list:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    """Exact long division; integer inputs with a +-1 leading divisor
    coefficient stay integral."""
    num = list(num)
    den = _trim(list(den))
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], _trim(num)
    quot = [0] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c == 0:
            continue
        if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
            q = c // lead
        else:
            q = Fraction(c) / lead
        quot[k - dq] = q
        for j in range(dq + 1):
            num[k - dq + j] -= q * den[j]
    return _trim(quot), _trim(num[:dq] or [0])


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    # x^n - 1 peeled by Phi_d for every proper divisor d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly, rem = poly_divmod(poly, _cyclotomic_coeffs(d))
        assert rem == [0], (n, d, rem)
    return tuple(int(c) for c in poly)


# ---------------------------------------------------------------------------


class PolySeries:
    """Power series in ``t`` known exactly up to and including ``t**bound``.

    Coefficients may be ints, Fractions or :class:`CyclotomicNumber`; missing
    high coefficients are zero.
    """

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs: Iterable, bound: int):
        if bound < 0:
            raise ValueError("truncation bound must be non-negative")
        cs = list(coeffs)[: bound + 1]
        cs += [0] * (bound + 1 - len(cs))
        self.coeffs = cs
        self.bound = bound

    @classmethod
    def from_factors(cls, degrees: Iterable[int], bound: int) -> "PolySeries":
        """The polynomial ``prod(1 - t**d)`` truncated at ``bound``."""
        s = cls([1], bound)
        for d in degrees:
            s = s * _one_minus_t_pow(d, bound)
        return s

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k <= self.bound else 0

    def __len__(self) -> int:
        return self.bound + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.bound == other.bound and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        return f"PolySeries({self.coeffs!r}, bound={self.bound})"

    def degree(self) -> int:
        """Index of the last nonzero coefficient (-1 for the zero series)."""
        for k in range(self.bound, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return -1

    def __add__(self, other: "PolySeries") -> "PolySeries":
        b = min(self.bound, other.bound)
        return PolySeries((self[k] + other[k] for k in range(b + 1)), b)

    def __sub__(self, other: "PolySeries") -> "PolySeries":
        b = min(self.bound, other.bound)
        return PolySeries((self[k] - other[k] for k in range(b + 1)), b)

    def scale(self, c) -> "PolySeries":
        return PolySeries((c * x for x in self.coeffs), self.bound)

    def __mul__(self, other: "PolySeries") -> "PolySeries":
        b = min(self.bound, other.bound)
        out = [0] * (b + 1)
        for i in range(b + 1):
            x = self.coeffs[i]
            if x == 0:
                continue
            for j in range(b + 1 - i):
                y = other.coeffs[j]
                if y != 0:
                    out[i + j] += x * y
        return PolySeries(out, b)

    def __truediv__(self, other: "PolySeries") -> "PolySeries":
        return series_divide(self, other)


def _one_minus_t_pow(d: int, bound: int) -> PolySeries:
    cs = [0] * (bound + 1)
    cs[0] = 1
    if d <= bound:
        cs[d] -= 1
    return PolySeries(cs, bound)


def _is_unit(c) -> bool:
    return c == 1 or c == -1


def series_divide(num: PolySeries, den: PolySeries) -> PolySeries:
    """``num / den`` as a truncated series; ``den`` needs a nonzero constant term."""
    c0 = den[0]
    if c0 == 0:
        raise NotInvertibleError("not invertible as a series: zero constant term")
    b = min(num.bound, den.bound)
    inv0 = c0 if _is_unit(c0) else 1 / Fraction(c0)
    out: list = []
    for k in range(b + 1):
        acc = num[k]
        for j in range(1, k + 1):
            dj = den.coeffs[j]
            if dj != 0:
                acc = acc - dj * out[k - j]
        out.append(acc * inv0)
    return PolySeries(out, b)


def series_reciprocal(s: PolySeries) -> PolySeries:
    return series_divide(PolySeries([1], s.bound), s)


def cyclotomic_minpoly(n: int) -> PolySeries:
    """The ``n``-th cyclotomic polynomial, as an exact integer polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    cs = _cyclotomic_coeffs(n)
    return PolySeries(cs, len(cs) - 1)


# ---------------------------------------------------------------------------


Scalar = Union[int, Fraction]


class CyclotomicNumber:
    """Element of Q(zeta_N) in the power basis ``1, z, ..., z**(phi(N)-1)``
    with ``z = exp(2*pi*i/N)`` reduced modulo the ``N``-th cyclotomic polynomial."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = ()):
        phi = euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            cs = _reduce_mod_cyclotomic(cs, order)
        cs += [Fraction(0)] * (phi - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def rational(cls, order: int, q: Scalar) -> "CyclotomicNumber":
        return cls(order, [q])

    @classmethod
    def from_turn(cls, t: Turn, order: int) -> "CyclotomicNumber":
        if order % t.den:
            raise ValueError(f"{t!r} does not live in the {order}-th cyclotomic field")
        k = t.num * (order // t.den)
        return cls.from_group_ring(order, {k: 1})

    @classmethod
    def from_group_ring(cls, order: int, coeffs) -> "CyclotomicNumber":
        """Reduce an element of Q[z]/(z**N - 1), given as a sequence or a
        ``{exponent: coefficient}`` mapping, into the field."""
        if isinstance(coeffs, dict):
            dense = [0] * order
            for k, c in coeffs.items():
                dense[k % order] += c
        else:
            dense = list(coeffs)
        return cls(order, _reduce_mod_cyclotomic(dense, order))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError("cyclotomic numbers of different orders")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        raise TypeError(type(other).__name__)

    def __add__(self, other) -> "CyclotomicNumber":
        o = self._coerce(other)
        return CyclotomicNumber(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> "CyclotomicNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CyclotomicNumber":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [a * other for a in self.coeffs])
        o = self._coerce(other)
        return CyclotomicNumber(self.order, poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "CyclotomicNumber":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CyclotomicNumber({self.order}: {' + '.join(terms) or '0'})"


def _reduce_mod_cyclotomic(coeffs: list, order: int) -> list:
    phi_poly = _cyclotomic_coeffs(order)
    deg = len(phi_poly) - 1
    cs = list(coeffs)
    # Phi_N is monic: eliminate from the top down
    for k in range(len(cs) - 1, deg - 1, -1):
        c = cs[k]
        if c == 0:
            continue
        for j in range(deg + 1):
            cs[k - deg + j] -= c * phi_poly[j]
    return cs[:deg]
