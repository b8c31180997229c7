"""Symbolic group descriptions and their scalar invariants.

A :class:`GroupSpec` names a finite group together with the representation
it acts through; no matrices are ever built from it.  Fundamental degrees
come from closed formulas for the infinite families and from a data table
for the exceptional groups ST4..ST37.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from importlib import resources
from math import factorial, gcd, prod
from typing import Optional

from .errors import CharacteristicError, NoDegreesError

DegreeVector = tuple[int, ...]

STANDARD = "standard"
NATURAL = "natural"

EXCEPTIONAL_PROVENANCE = "table-external"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def prime_factors(n: int) -> list[int]:
    return [p for p in primes_up_to(n) if n % p == 0]


@dataclass(frozen=True)
class GroupSpec:
    base_char: int = field(default=0, kw_only=True)

    def __post_init__(self):
        self._check_params()
        if self.base_char != 0 and not is_prime(self.base_char):
            raise CharacteristicError(
                f"characteristic must be 0 or a prime, got {self.base_char}"
            )
        report = validate_characteristic(self)
        if not report.ok:
            raise CharacteristicError(report.message)

    def _check_params(self) -> None:
        pass

    @property
    def label(self) -> str:
        raise NotImplementedError

    @property
    def rank(self) -> int:
        """Dimension of the representation."""
        raise NotImplementedError

    def __str__(self) -> str:
        if self.base_char:
            return f"{self.label} [char {self.base_char}]"
        return self.label


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    m: int

    def _check_params(self):
        if self.m < 1:
            raise ValueError("Cyclic(m) needs m >= 1")

    @property
    def label(self):
        return f"C{self.m}"

    @property
    def rank(self):
        return 1


@dataclass(frozen=True)
class Symmetric(GroupSpec):
    """Sym(n) on its standard (n-1)-dimensional or natural n-dimensional space."""

    n: int
    rep: str = STANDARD

    def _check_params(self):
        if self.n < 2:
            raise ValueError("Symmetric(n) needs n >= 2")
        if self.rep not in (STANDARD, NATURAL):
            raise ValueError(f"unknown representation {self.rep!r}")

    @property
    def label(self):
        return f"S{self.n}" if self.rep == STANDARD else f"S{self.n}(natural)"

    @property
    def rank(self):
        return self.n - 1 if self.rep == STANDARD else self.n


@dataclass(frozen=True)
class Alternating(GroupSpec):
    """Alt(n) on the natural n-dimensional permutation representation."""

    n: int

    def _check_params(self):
        if self.n < 2:
            raise ValueError("Alternating(n) needs n >= 2")

    @property
    def label(self):
        return f"A{self.n}"

    @property
    def rank(self):
        return self.n


@dataclass(frozen=True)
class Imprimitive(GroupSpec):
    """G(m, l, n): monomial n x n matrices with m-th root of unity entries
    whose exponents sum to 0 mod l."""

    m: int
    l: int
    n: int

    def _check_params(self):
        if self.m < 2 or self.n < 2:
            raise ValueError(
                f"G({self.m},{self.l},{self.n}) is degenerate; use normalize_imprimitive"
            )
        if self.l < 1 or self.m % self.l:
            raise ValueError(f"G(m,l,n) needs l | m, got m={self.m}, l={self.l}")

    @property
    def label(self):
        return f"G({self.m},{self.l},{self.n})"

    @property
    def rank(self):
        return self.n


@dataclass(frozen=True)
class Exceptional(GroupSpec):
    index: int

    def _check_params(self):
        if self.index not in exceptional_table():
            raise ValueError(f"no exceptional group ST{self.index}; valid range is 4..37")

    @property
    def label(self):
        return f"ST{self.index}"

    @property
    def rank(self):
        return exceptional_table()[self.index].rank

    @property
    def name(self) -> str:
        return exceptional_table()[self.index].name


# ---------------------------------------------------------------------------
# exceptional table


@dataclass(frozen=True)
class ExceptionalEntry:
    st_index: int
    rank: int
    order: int
    degrees: DegreeVector
    name: str


def parse_exceptional_table(text: str) -> dict[int, ExceptionalEntry]:
    """Parse ``st_index; rank; order; d1,d2,...; name`` records and check
    every entry's invariants."""
    table: dict[int, ExceptionalEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 5:
            raise ValueError(f"line {lineno}: expected 5 fields, got {len(parts)}")
        idx, rank, order = int(parts[0]), int(parts[1]), int(parts[2])
        degs = tuple(int(d) for d in parts[3].split(","))
        if list(degs) != sorted(degs):
            raise ValueError(f"line {lineno}: ST{idx} degrees not ascending")
        if len(degs) != rank:
            raise ValueError(f"line {lineno}: ST{idx} has rank {rank} but {len(degs)} degrees")
        if rank > 8:
            raise ValueError(f"line {lineno}: ST{idx} rank {rank} exceeds 8")
        if prod(degs) != order:
            raise ValueError(
                f"line {lineno}: ST{idx} order {order} != product of degrees {prod(degs)}"
            )
        if idx in table:
            raise ValueError(f"line {lineno}: duplicate ST{idx}")
        table[idx] = ExceptionalEntry(idx, rank, order, degs, parts[4])
    return table


@lru_cache(maxsize=None)
def exceptional_table() -> dict[int, ExceptionalEntry]:
    text = resources.files("essdim").joinpath("data/exceptional.txt").read_text()
    table = parse_exceptional_table(text)
    if sorted(table) != list(range(4, 38)):
        raise ValueError("exceptional table must cover exactly ST4..ST37")
    return table


# ---------------------------------------------------------------------------
# invariants


def is_reflection_spec(g: GroupSpec) -> bool:
    """True when ``g`` is given through a representation generated by
    pseudo-reflections (so fundamental degrees exist)."""
    if isinstance(g, Symmetric):
        return g.rep == STANDARD
    return isinstance(g, (Cyclic, Imprimitive, Exceptional))


def is_irreducible(g: GroupSpec) -> bool:
    if isinstance(g, Imprimitive):
        return (g.m, g.l, g.n) != (2, 2, 2)
    if isinstance(g, Symmetric):
        return g.rep == STANDARD
    return isinstance(g, (Cyclic, Exceptional))


def degrees(g: GroupSpec) -> DegreeVector:
    if isinstance(g, Cyclic):
        return (g.m,)
    if isinstance(g, Symmetric) and g.rep == STANDARD:
        return tuple(range(2, g.n + 1))
    if isinstance(g, Imprimitive):
        return tuple(sorted([g.m * k for k in range(1, g.n)] + [g.m * g.n // g.l]))
    if isinstance(g, Exceptional):
        return exceptional_table()[g.index].degrees
    raise NoDegreesError(
        f"{g.label}: no fundamental degrees: representation is not generated by "
        "pseudo-reflections"
    )


def group_order(g: GroupSpec) -> int:
    if isinstance(g, Cyclic):
        return g.m
    if isinstance(g, Symmetric):
        return factorial(g.n)
    if isinstance(g, Alternating):
        return factorial(g.n) // 2
    if isinstance(g, Imprimitive):
        return g.m**g.n * factorial(g.n) // g.l
    if isinstance(g, Exceptional):
        return exceptional_table()[g.index].order
    raise TypeError(type(g).__name__)


def centre_order(g: GroupSpec) -> int:
    """Order of the centre of a reflection group: the gcd of its degrees."""
    return reduce(gcd, degrees(g))


@dataclass(frozen=True)
class CharacteristicReport:
    ok: bool
    char: int
    order: int
    message: str = ""
    # a(m) is forced to 0 whenever char divides m
    zero_convention: bool = False


def validate_characteristic(g: GroupSpec, char: Optional[int] = None) -> CharacteristicReport:
    char = g.base_char if char is None else char
    order = group_order(g)
    if char == 0:
        return CharacteristicReport(True, 0, order)
    if order % char == 0:
        return CharacteristicReport(
            False,
            char,
            order,
            f"characteristic {char} divides the group order {order} of {g.label}",
        )
    return CharacteristicReport(
        True, char, order, f"a(m) = 0 for every m divisible by {char}", zero_convention=True
    )


def normalize_imprimitive(m: int, l: int, n: int, base_char: int = 0) -> tuple[GroupSpec, list[str]]:
    """Build G(m, l, n), folding the degenerate parameter sets into the family
    they coincide with."""
    if m < 1 or n < 1 or l < 1 or m % l:
        raise ValueError(f"G({m},{l},{n}) needs positive parameters with l | m")
    if n == 1:
        spec: GroupSpec = Cyclic(m // l, base_char=base_char)
        return spec, [f"G({m},{l},1) normalized to {spec.label}"]
    if m == 1:
        spec = Symmetric(n, base_char=base_char)
        return spec, [f"G(1,1,{n}) normalized to {spec.label} (standard representation)"]
    spec = Imprimitive(m, l, n, base_char=base_char)
    notes = []
    if not is_irreducible(spec):
        notes.append(f"{spec.label} is reducible")
    return spec, notes
