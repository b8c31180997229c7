"""Eigenvalue multisets of monomial elements and the eigenspace statistic
a(m) computed by direct maximization over signature families."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .catalog import NATURAL, STANDARD, GroupSpec, Symmetric
from .enumeration import DEFAULT_BUDGET, CycleSignature, class_families, is_enumerable
from .errors import DomainRefusal
from .exactnum import ONE_TURN, Turn

EigenvalueMultiset = Counter  # Turn -> multiplicity


def eigenvalues_of_signature(sig: CycleSignature, rep: str = NATURAL) -> Counter:
    """A c-cycle whose entries multiply to zeta_m**s has the c roots of
    ``x**c = zeta_m**s`` as eigenvalues.  ``rep="standard"`` drops one
    eigenvalue 1 (the all-ones line of a permutation representation)."""
    m = sig.m
    ev: Counter = Counter()
    for c, s in sig.cycles:
        for j in range(c):
            ev[Turn(s + j * m, m * c)] += 1
    if rep == STANDARD:
        if m != 1 or ev[ONE_TURN] == 0:
            raise ValueError("standard representation applies to permutations only")
        ev[ONE_TURN] -= 1
        if ev[ONE_TURN] == 0:
            del ev[ONE_TURN]
    return ev


def _rep_rule(g: GroupSpec) -> str:
    if isinstance(g, Symmetric) and g.rep == STANDARD:
        return STANDARD
    return NATURAL


@lru_cache(maxsize=256)
def spectrum_table(g: GroupSpec, budget: int = DEFAULT_BUDGET) -> tuple[tuple[tuple[tuple[Turn, int], ...], int], ...]:
    """Per family: (sorted eigenvalue multiset, element count)."""
    if not is_enumerable(g):
        raise DomainRefusal(f"{g.label}: not enumerable; use a_springer")
    rule = _rep_rule(g)
    return tuple(
        (tuple(sorted(eigenvalues_of_signature(f.signature, rule).items())), f.element_count)
        for f in class_families(g, budget)
    )


def multiplicity(ev, t: Turn) -> int:
    return dict(ev).get(t, 0)


def a_direct(g: GroupSpec, m: int, budget: int = DEFAULT_BUDGET, root: Turn | None = None) -> int:
    """max over group elements of dim V(g, zeta_m), with zeta_m = Turn(1, m)
    unless another primitive root ``root`` is supplied."""
    if m < 1:
        raise ValueError("m must be positive")
    if g.base_char and m % g.base_char == 0:
        return 0
    target = Turn(1, m) if root is None else root
    if target.den != m:
        raise ValueError(f"{target!r} is not a primitive {m}-th root of unity")
    best = 0
    for ev, _ in spectrum_table(g, budget):
        best = max(best, multiplicity(ev, target))
        if best == g.rank:
            break
    return best


def reflection_count(g: GroupSpec, budget: int = DEFAULT_BUDGET) -> int:
    """Number of pseudo-reflections: elements fixing exactly a hyperplane."""
    n = g.rank
    return sum(
        count for ev, count in spectrum_table(g, budget) if dict(ev).get(ONE_TURN, 0) == n - 1
    )
