"""Prime ideals, spectra, their topology, radicals and components.

Two primality tests coexist: the quotient test (the quotient object has no
divisors of zero) and the elementwise test (the containment implication on
pairs).  They agree for the commutator variant and provably diverge for the
intersection variant, so the choice is an explicit parameter everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .fingroup import (
    GroupError,
    GroupTable,
    Homomorphism,
    QuotientGroup,
    Subgroup,
    normal_closure,
    normal_subgroups,
    quotient,
)
from .gobject import GGroup

__all__ = [
    "Ideal",
    "Spectrum",
    "ClosedSet",
    "VARIANTS",
    "PRIME_DEFS",
    "quotient_object",
    "is_prime",
    "spectrum",
    "vanishing_set",
    "radical",
    "irreducible_components",
]

VARIANTS = ("t1", "t2")
PRIME_DEFS = ("quotient", "elementwise")


@dataclass(frozen=True)
class Ideal:
    """A proper normal subgroup of the carrier."""

    object: GGroup
    members: Subgroup

    def __post_init__(self):
        if self.members.parent is not self.object.carrier:
            raise GroupError("ideal members must live in the carrier")
        if self.members.is_whole():
            raise GroupError("an ideal is a proper normal subgroup")
        if not self.members.is_normal():
            raise GroupError("an ideal must be normal")

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


def quotient_object(obj: GGroup, N: Subgroup) -> tuple[GGroup, QuotientGroup]:
    """The quotient carrier with the composed structure map."""
    q = quotient(obj.carrier, N)
    structure = obj.structure.compose(q.projection)
    return GGroup(obj.base, q.table, structure), q


def is_prime(obj: GGroup, I: Ideal, variant: str, prime_def: str) -> bool:
    if variant not in VARIANTS:
        raise GroupError(f"unknown variant {variant!r}")
    if prime_def not in PRIME_DEFS:
        raise GroupError(f"unknown prime_def {prime_def!r}")
    if prime_def == "quotient":
        qobj, _ = quotient_object(obj, I.members)
        return qobj.is_integral(variant)
    # elementwise: for all x, y the containment implication must hold; only
    # pairs with both x and y outside I can violate it, and the condition
    # depends on x only through its span
    H = obj.carrier
    outside_spans = set()
    for x in range(H.order):
        if x not in I.members:
            outside_spans.add(obj.g_span(x))
    spans = sorted(outside_spans, key=lambda s: s.members)
    for S1 in spans:
        for S2 in spans:
            if obj._condition(S1, S2, variant).issubset(I.members):
                return False
    return True


@dataclass(frozen=True)
class Spectrum:
    """The ordered set of prime ideals with its closed-set topology."""

    object: GGroup
    variant: str
    prime_def: str
    primes: tuple[Ideal, ...]
    _caches: dict = field(default_factory=dict, compare=False, repr=False)

    def __hash__(self):
        return hash((self.object, self.variant, self.prime_def))

    def __len__(self) -> int:
        return len(self.primes)

    def index_of(self, P: Ideal) -> int:
        return self.primes.index(P)

    # -- topology ----------------------------------------------------------

    def closed_sets(self) -> list["ClosedSet"]:
        """All distinct vanishing sets V(N), N normal in the carrier."""
        if "closed" not in self._caches:
            seen: dict[frozenset, ClosedSet] = {}
            for N in normal_subgroups(self.object.carrier):
                cs = vanishing_set(self, N)
                seen.setdefault(cs.member_indices, cs)
            self._caches["closed"] = sorted(
                seen.values(), key=lambda c: (len(c.member_indices), sorted(c.member_indices))
            )
        return self._caches["closed"]

    def open_sets(self) -> list[frozenset]:
        """Complements of the closed sets, small to large."""
        if "open" not in self._caches:
            allp = frozenset(range(len(self.primes)))
            opens = {allp - c.member_indices for c in self.closed_sets()}
            self._caches["open"] = sorted(opens, key=lambda u: (len(u), sorted(u)))
        return self._caches["open"]

    def is_open(self, U: Iterable[int]) -> bool:
        return frozenset(U) in set(self.open_sets())

    def minimal_open(self, p: int) -> frozenset:
        """Intersection of all opens containing prime #p (finite space)."""
        if "minopen" not in self._caches:
            self._caches["minopen"] = {}
        cache = self._caches["minopen"]
        if p not in cache:
            acc = frozenset(range(len(self.primes)))
            for U in self.open_sets():
                if p in U:
                    acc &= U
            cache[p] = acc
        return cache[p]

    def closure(self, S: Iterable[int]) -> frozenset:
        """Topological closure of a set of primes."""
        S = frozenset(S)
        acc = frozenset(range(len(self.primes)))
        for c in self.closed_sets():
            if S <= c.member_indices:
                acc &= c.member_indices
        return acc

    def specialization_edges(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with prime_i contained in prime_j (i generizes j)."""
        edges = []
        for i, P in enumerate(self.primes):
            for j, Q in enumerate(self.primes):
                if i != j and P.members.issubset(Q.members):
                    edges.append((i, j))
        return edges


@dataclass(frozen=True)
class ClosedSet:
    """A vanishing set V(N) with the generating normal subgroup kept."""

    spectrum: Spectrum
    member_indices: frozenset
    generator: Subgroup

    def ideals(self) -> list[Ideal]:
        return [self.spectrum.primes[i] for i in sorted(self.member_indices)]


def spectrum(obj: GGroup, variant: str, prime_def: str = "elementwise") -> Spectrum:
    """All prime ideals of the object, canonically ordered by (size, members)."""
    primes = []
    for N in normal_subgroups(obj.carrier):
        if N.is_whole():
            continue
        I = Ideal(obj, N)
        if is_prime(obj, I, variant, prime_def):
            primes.append(I)
    primes.sort(key=lambda I: (len(I.members), I.members.members))
    return Spectrum(obj, variant, prime_def, tuple(primes))


def vanishing_set(spec: Spectrum, N: Subgroup) -> ClosedSet:
    """Primes containing N; N may be the whole carrier (empty set)."""
    if N.parent is not spec.object.carrier:
        raise GroupError("subgroup of the wrong carrier")
    if not N.is_normal():
        raise GroupError("vanishing_set needs a normal subgroup")
    members = frozenset(
        i for i, P in enumerate(spec.primes) if N.issubset(P.members)
    )
    return ClosedSet(spec, members, N)


def radical(spec: Spectrum, S: Iterable[int]) -> Subgroup:
    """Intersection of the selected primes; the whole carrier when S is empty."""
    H = spec.object.carrier
    out = Subgroup(H, range(H.order))
    for i in S:
        out = out.intersection(spec.primes[i].members)
    return out


def point_radical(spec: Spectrum, p: int) -> Subgroup:
    """Radical of a point, via its minimal open neighbourhood."""
    return radical(spec, spec.minimal_open(p))


def whole_radical(spec: Spectrum) -> Subgroup:
    return radical(spec, range(len(spec.primes)))


def is_irreducible_closed(spec: Spectrum, C: frozenset) -> bool:
    """Nonempty and not a union of two proper closed subsets."""
    if not C:
        return False
    closed = [c.member_indices & C for c in spec.closed_sets()]
    proper = {c for c in closed if c != C}
    for A in proper:
        for B in proper:
            if A | B == C:
                return False
    return True


def irreducible_components(spec: Spectrum) -> list[tuple[ClosedSet, Optional[int]]]:
    """Maximal irreducible closed subsets, with generic points when present.

    The generic point is reported when the radical of the component is
    itself a member prime.
    """
    closed = spec.closed_sets()
    irr = [c for c in closed if is_irreducible_closed(spec, c.member_indices)]
    comps = [
        c
        for c in irr
        if not any(
            c.member_indices < d.member_indices for d in irr
        )
    ]
    out = []
    for c in comps:
        rad = radical(spec, c.member_indices)
        generic = None
        for i in sorted(c.member_indices):
            if spec.primes[i].members == rad:
                generic = i
                break
        out.append((c, generic))
    out.sort(key=lambda t: sorted(t[0].member_indices))
    return out
