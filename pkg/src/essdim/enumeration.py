"""Conjugacy-level element data for Sym(n), Alt(n) and G(m, l, n).

Elements are never materialized on the main path.  A monomial element is
summarized by its cycle signature: for every cycle of the underlying
permutation, the cycle length and the sum (mod m) of the root-of-unity
exponents sitting on that cycle.  The signature fixes the eigenvalues.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator

from .catalog import Alternating, Cyclic, GroupSpec, Imprimitive, Symmetric
from .errors import DomainRefusal, EnumerationBudgetError

DEFAULT_BUDGET = 250_000


@dataclass(frozen=True, order=True)
class CycleSignature:
    cycles: tuple[tuple[int, int], ...]  # (length, phase sum mod m), sorted
    m: int = 1

    def __post_init__(self):
        if any(c < 1 or not 0 <= s < self.m for c, s in self.cycles):
            raise ValueError(f"malformed cycle data {self.cycles} for m={self.m}")

    @property
    def degree(self) -> int:
        return sum(c for c, _ in self.cycles)

    @property
    def phase_total(self) -> int:
        return sum(s for _, s in self.cycles) % self.m

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(sorted((c for c, _ in self.cycles), reverse=True))


@dataclass(frozen=True)
class ClassFamily:
    signature: CycleSignature
    element_count: int


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in lexicographic order
    (``(1, 1, 1)`` first, ``(n,)`` last)."""

    def rec(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(1, min(remaining, max_part) + 1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def is_even_partition(part: tuple[int, ...]) -> bool:
    return sum(1 for c in part if c % 2 == 0) % 2 == 0


def permutation_class_size(part: tuple[int, ...]) -> int:
    mult = Counter(part)
    return factorial(sum(part)) // (
        prod(c**k for c, k in mult.items()) * prod(factorial(k) for k in mult.values())
    )


def _guard(count: int, budget: int) -> None:
    if count > budget:
        raise EnumerationBudgetError(budget)


def signatures_symmetric(n: int, budget: int = DEFAULT_BUDGET) -> Iterator[ClassFamily]:
    for i, part in enumerate(partitions(n), 1):
        _guard(i, budget)
        sig = CycleSignature(tuple((c, 0) for c in sorted(part)), 1)
        yield ClassFamily(sig, permutation_class_size(part))


def signatures_alternating(n: int, budget: int = DEFAULT_BUDGET) -> Iterator[ClassFamily]:
    # cycle types only: the splitting of classes inside Alt(n) does not
    # change eigenvalues
    i = 0
    for part in partitions(n):
        if not is_even_partition(part):
            continue
        i += 1
        _guard(i, budget)
        sig = CycleSignature(tuple((c, 0) for c in sorted(part)), 1)
        yield ClassFamily(sig, permutation_class_size(part))


def signatures_imprimitive(
    m: int, l: int, n: int, budget: int = DEFAULT_BUDGET
) -> Iterator[ClassFamily]:
    """Families of G(m, l, n) keyed by cycle signature.

    For a fixed permutation with ``k_c`` cycles of length ``c``, a phase sum
    ``s`` on a ``c``-cycle is realized by ``m**(c-1)`` exponent vectors, and
    the multiset of phase sums on the ``k_c`` cycles of length ``c`` can be
    placed on those labelled cycles in ``k_c! / prod(r_s!)`` ways.
    """
    count = 0
    for part in partitions(n):
        mult = sorted(Counter(part).items())
        base = factorial(n) * prod(m ** ((c - 1) * k) for c, k in mult) // prod(
            c**k for c, k in mult
        )
        # one multiset of phases per block of equal-length cycles
        blocks = [
            list(itertools.combinations_with_replacement(range(m), k)) for _, k in mult
        ]
        for choice in itertools.product(*blocks):
            if sum(sum(ph) for ph in choice) % l:
                continue
            count += 1
            _guard(count, budget)
            cycles = tuple(
                (c, s) for (c, _), phases in zip(mult, choice) for s in phases
            )
            repeats = prod(
                factorial(r) for phases in choice for r in Counter(phases).values()
            )
            yield ClassFamily(CycleSignature(cycles, m), base // repeats)


def signatures_cyclic(m: int, budget: int = DEFAULT_BUDGET) -> Iterator[ClassFamily]:
    for s in range(m):
        _guard(s + 1, budget)
        yield ClassFamily(CycleSignature(((1, s),), m), 1)


def class_families(g: GroupSpec, budget: int = DEFAULT_BUDGET) -> Iterator[ClassFamily]:
    """Dispatch to the family stream matching ``g``."""
    if isinstance(g, Cyclic):
        return signatures_cyclic(g.m, budget)
    if isinstance(g, Symmetric):
        return signatures_symmetric(g.n, budget)
    if isinstance(g, Alternating):
        return signatures_alternating(g.n, budget)
    if isinstance(g, Imprimitive):
        return signatures_imprimitive(g.m, g.l, g.n, budget)
    raise DomainRefusal(f"{g.label}: element data is not enumerable; use a_springer")


def is_enumerable(g: GroupSpec) -> bool:
    return isinstance(g, (Cyclic, Symmetric, Alternating, Imprimitive))


# ---------------------------------------------------------------------------
# test oracle: element-by-element enumeration of explicit monomial matrices


def monomial_elements(m: int, l: int, n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every element of G(m, l, n) as ``(exponents, permutation)``: the matrix
    has entry ``zeta_m**exponents[i]`` at row ``perm[i]``, column ``i``."""
    for perm in itertools.permutations(range(n)):
        for exps in itertools.product(range(m), repeat=n):
            if sum(exps) % l == 0:
                yield exps, perm


def signature_of_element(exps: tuple[int, ...], perm: tuple[int, ...], m: int) -> CycleSignature:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, phase, i = 0, 0, start
        while not seen[i]:
            seen[i] = True
            phase += exps[i]
            length += 1
            i = perm[i]
        cycles.append((length, phase % m))
    return CycleSignature(tuple(sorted(cycles)), m)


def brute_force_families(m: int, l: int, n: int) -> dict[CycleSignature, int]:
    """Signature -> element count by walking every group element."""
    return dict(Counter(signature_of_element(e, p, m) for e, p in monomial_elements(m, l, n)))
