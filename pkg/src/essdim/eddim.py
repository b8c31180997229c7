"""Essential dimension of reflection groups: a(p) from degrees, ed(G; p),
ed(G), the poor man's essential dimension, and the Frobenius number."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from . import catalog
from .catalog import (
    Alternating,
    Cyclic,
    Exceptional,
    GroupSpec,
    Imprimitive,
    Symmetric,
    degrees,
    is_irreducible,
    is_reflection_spec,
    primes_up_to,
)
from .enumeration import DEFAULT_BUDGET
from .errors import DomainRefusal, InternalConsistencyError
from .spectra import a_direct

# provenance tags attached to every reported number
TAG_FAMILY_DEGREES = "family-degree-formula"
TAG_TABLE = catalog.EXCEPTIONAL_PROVENANCE
TAG_DIRECT = "direct-eigenspace-max"
TAG_ED_AT_P = "reflection-ed-at-p-equals-a"
TAG_SYM_AT_P = "symmetric-ed-at-p-floor"
TAG_ED_E6 = "ed-abs-e6-rank-minus-two"
TAG_ED_GMMN = "ed-abs-gmmn-coprime-rank-minus-one"
TAG_ED_RANK = "ed-abs-rank"
TAG_SYM_BOUNDS = "symmetric-ed-bounds"
TAG_S5 = "symmetric-5-classical"
TAG_PMED = "pmed-max-a"
TAG_PMED_ALT = "alternating-pmed-two-floor-n-over-4"
TAG_ALT_ED2 = "alternating-ed-at-2"


@dataclass(frozen=True)
class EdValue:
    """Exact value or closed interval ``[lo, hi]``; collapses when lo == hi."""

    lo: int
    hi: int
    provenance: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, v: int, provenance: str) -> "EdValue":
        return cls(v, v, provenance)

    @property
    def kind(self) -> str:
        return "exact" if self.lo == self.hi else "interval"

    @property
    def value(self) -> int:
        if self.lo != self.hi:
            raise ValueError("interval has no single value")
        return self.lo

    def __str__(self) -> str:
        return str(self.lo) if self.lo == self.hi else f"[{self.lo}, {self.hi}]"


def a_springer(d: Sequence[int], m: int, base_char: int = 0) -> int:
    """Number of degrees divisible by ``m`` (0 when the characteristic divides m)."""
    if m < 1:
        raise ValueError("m must be positive")
    if base_char and m % base_char == 0:
        return 0
    return sum(1 for di in d if di % m == 0)


def _reflection_degrees(g: GroupSpec) -> tuple[int, ...]:
    # Sym(n) is handled through its standard representation whichever
    # representation the spec names: the invariants below are group invariants
    if isinstance(g, Symmetric):
        return tuple(range(2, g.n + 1))
    return degrees(g)


def ed_at_p(g: GroupSpec, p: int) -> int:
    if not catalog.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(g, Alternating):
        raise DomainRefusal(
            f"{g.label}: ed at a prime equals a(p) only for groups generated by "
            "pseudo-reflections; only pmed/a(p) available"
        )
    value = a_springer(_reflection_degrees(g), p, g.base_char)
    if isinstance(g, Symmetric):
        floor_value = 0 if g.base_char == p else g.n // p
        if floor_value != value:
            raise InternalConsistencyError(
                f"{g.label}: degree count {value} != floor(n/p) = {floor_value} at p={p}"
            )
    return value


def ed_absolute(g: GroupSpec) -> EdValue:
    if isinstance(g, Symmetric):
        if g.base_char != 0:
            raise DomainRefusal(
                f"{g.label}: ed(Sym(n)) in positive characteristic is not determined"
            )
        n = g.n
        if n == 5:
            return EdValue.exact(2, TAG_S5)
        if n < 5:
            raise DomainRefusal(f"{g.label}: ed(Sym(n)) for n <= 4 is not determined here")
        return EdValue((n + 1) // 2, n - 3, TAG_SYM_BOUNDS)
    if isinstance(g, Alternating):
        raise DomainRefusal(
            f"{g.label}: absolute ed formula requires a group generated by pseudo-reflections"
        )
    if not is_reflection_spec(g) or not is_irreducible(g):
        raise DomainRefusal(
            f"{g.label}: absolute ed formula requires an irreducible reflection representation"
        )
    if isinstance(g, Cyclic) and g.m == 1:
        raise DomainRefusal("C1: trivial group, the absolute ed formula does not apply")
    if isinstance(g, Exceptional) and g.index == 35:
        return EdValue.exact(g.rank - 2, TAG_ED_E6)
    if isinstance(g, Imprimitive) and g.l == g.m and gcd(g.m, g.n) == 1:
        return EdValue.exact(g.n - 1, TAG_ED_GMMN)
    return EdValue.exact(g.rank, TAG_ED_RANK)


def relevant_primes(d: Sequence[int]) -> list[int]:
    """Primes dividing at least one degree; every other prime has a(p) = 0."""
    return [p for p in primes_up_to(max(d, default=1)) if any(x % p == 0 for x in d)]


def pmed(g: GroupSpec, budget: int = DEFAULT_BUDGET) -> int:
    if isinstance(g, Alternating):
        if g.n < 4:
            raise DomainRefusal(f"{g.label}: pmed(Alt(n)) is only determined for n >= 4")
        if g.base_char != 0:
            raise DomainRefusal(f"{g.label}: pmed(Alt(n)) is only determined in characteristic 0")
        closed = 2 * (g.n // 4)
        direct = max(a_direct(g, p, budget) for p in primes_up_to(g.n))
        if direct != closed:
            raise InternalConsistencyError(
                f"{g.label}: max_p a(p) = {direct} but 2*floor(n/4) = {closed}"
            )
        return closed
    d = _reflection_degrees(g)
    # a(p) = 0 once p exceeds the largest degree
    return max((a_springer(d, p, g.base_char) for p in primes_up_to(max(d))), default=0)


A_GROUP_NOTE = (
    "A-group assumed (all Sylow subgroups abelian); abelianness is not verified"
)


def pmed_a_group(sylow_ranks: dict[int, int], notes: Optional[list[str]] = None) -> int:
    """pmed of an A-group from the ranks of its Sylow subgroups.

    The caller vouches that every Sylow subgroup is abelian; the trust
    boundary is appended to ``notes`` when a list is supplied.
    """
    if any(r < 0 for r in sylow_ranks.values()):
        raise ValueError("Sylow ranks must be non-negative")
    if notes is not None:
        notes.append(A_GROUP_NOTE)
    if not sylow_ranks:
        if notes is not None:
            notes.append("trivial group")
        return 0
    return max(sylow_ranks.values())


def frobenius_number(d: Sequence[int]) -> Optional[int]:
    """Largest integer not a non-negative combination of ``d``; None if 1 is in ``d``."""
    if not d:
        raise ValueError("frobenius_number needs a nonempty list")
    if any(x < 1 for x in d):
        raise ValueError("entries must be positive")
    if reduce(gcd, d) != 1:
        raise ValueError("infinitely many non-representable values: gcd of entries exceeds 1")
    if 1 in d:
        return None
    lo, hi = min(d), max(d)
    # every integer >= (lo - 1) * (hi - 1) is representable
    limit = (lo - 1) * (hi - 1)
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for q in range(1, limit + 1):
        reachable[q] = any(q >= x and reachable[q - x] for x in d)
    return max(q for q in range(limit + 1) if not reachable[q])


# ---------------------------------------------------------------------------


@dataclass
class PrimeEntry:
    a_p: int
    ed_at_p: Optional[int]
    provenance: str


@dataclass
class EdReport:
    group: GroupSpec
    degrees: Optional[tuple[int, ...]]
    degrees_provenance: Optional[str]
    per_prime: dict[int, PrimeEntry]
    pmed: Optional[int]
    pmed_provenance: Optional[str]
    ed_abs: Optional[EdValue]
    notes: list[str] = field(default_factory=list)


def ed_report(g: GroupSpec, budget: int = DEFAULT_BUDGET) -> EdReport:
    notes: list[str] = []
    if g.base_char:
        notes.append(f"characteristic {g.base_char}: a(m) = 0 whenever {g.base_char} divides m")

    if isinstance(g, Alternating):
        per_prime: dict[int, PrimeEntry] = {}
        for p in primes_up_to(g.n):
            a = a_direct(g, p, budget)
            if not a:
                continue
            if p == 2 and g.n >= 4 and not g.base_char:
                per_prime[p] = PrimeEntry(a, a, TAG_ALT_ED2)
            else:
                per_prime[p] = PrimeEntry(a, None, TAG_DIRECT)
        notes.append("Alt(n) contains no pseudo-reflections: no fundamental degrees")
        notes.append("a(p) = 0 for every prime not listed")
        try:
            pm, pm_tag = pmed(g, budget), TAG_PMED_ALT
        except DomainRefusal as exc:
            pm, pm_tag = None, None
            notes.append(f"pmed refused: {exc}")
        notes.append(f"ed refused: {_refusal(g)}")
        return EdReport(g, None, None, per_prime, pm, pm_tag, None, notes)

    d = _reflection_degrees(g)
    if isinstance(g, Exceptional):
        deg_tag = TAG_TABLE
        notes.append(f"degrees of {g.label} ({g.name}) come from an external reference table")
    else:
        deg_tag = TAG_FAMILY_DEGREES
    if isinstance(g, Symmetric) and g.rep != catalog.STANDARD:
        notes.append("per-prime values use the degrees of the standard representation")
    if isinstance(g, Imprimitive) and not is_irreducible(g):
        notes.append(f"{g.label} is reducible")

    tag = TAG_SYM_AT_P if isinstance(g, Symmetric) else TAG_ED_AT_P
    per_prime = {}
    for p in relevant_primes(d):
        a = a_springer(d, p, g.base_char)
        per_prime[p] = PrimeEntry(a, ed_at_p(g, p), tag)
    notes.append("a(p) = ed(G; p) = 0 for every prime not listed")

    ed_abs = None
    try:
        ed_abs = ed_absolute(g)
    except DomainRefusal as exc:
        notes.append(f"ed refused: {exc}")
    report_degrees = d if is_reflection_spec(g) else None
    return EdReport(
        g,
        report_degrees,
        deg_tag if report_degrees else None,
        per_prime,
        pmed(g, budget),
        TAG_PMED,
        ed_abs,
        notes,
    )


def _refusal(g: GroupSpec) -> str:
    try:
        ed_absolute(g)
    except DomainRefusal as exc:
        return str(exc)
    return ""
