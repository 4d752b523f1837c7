"""Structural sheaves on finite spectra, schemes, morphisms and gluing.

Sections are value maps P -> coset in H/P that admit, for every point, a
single carrier element realizing the values on the point's minimal open.
Minimal opens replace arbitrary covers: in a finite space every open cover
refines to the minimal-open cover, so the two locality conditions agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .fingroup import (
    GroupError,
    GroupTable,
    Homomorphism,
    QuotientGroup,
    Subgroup,
    quotient,
    subgroup_product,
)
from .gobject import GGroup, GMorphism, enumerate_g_morphisms
from .spectrum import (
    Ideal,
    Spectrum,
    irreducible_components,
    point_radical,
    spectrum,
    whole_radical,
)

__all__ = [
    "SheafError",
    "SchemeSection",
    "SectionGroup",
    "AffineScheme",
    "GluedScheme",
    "SchemeMorphism",
    "induced_morphism",
    "embed_quotient",
    "glue",
    "identity_gluing_iso",
    "scheme_hom_correspondence",
    "noetherian_sections",
    "check_sheaf_axioms",
    "global_sections_vs_quotient",
    "restrictions_are_isomorphisms",
    "point_vanishing_ideal",
]

SECTION_TABLE_CAP = 2000


class SheafError(ValueError):
    pass


@dataclass(frozen=True)
class SchemeSection:
    """A section: per-point value tokens plus per-point realizing elements."""

    open_set: frozenset
    values: tuple  # sorted tuple of (point, token)
    certificates: dict = field(compare=False, repr=False, default_factory=dict)

    def value_at(self, point):
        for p, v in self.values:
            if p == point:
                return v
        raise SheafError(f"point {point!r} not in the section domain")


def _mkvalues(mapping: dict) -> tuple:
    return tuple(sorted(mapping.items(), key=lambda kv: repr(kv[0])))


class SectionGroup:
    """Sections over a fixed open, under the pointwise product."""

    def __init__(self, scheme, open_set: frozenset, elements: Sequence[SchemeSection]):
        self.scheme = scheme
        self.open_set = frozenset(open_set)
        self.elements: tuple[SchemeSection, ...] = tuple(elements)
        self._index = {s.values: i for i, s in enumerate(self.elements)}
        self._ggroup: Optional[GGroup] = None

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, s: SchemeSection) -> int:
        try:
            return self._index[s.values]
        except KeyError:
            raise SheafError("section does not belong to this group") from None

    def multiply(self, i: int, j: int) -> int:
        return self.index_of(self.scheme.mul_sections(self.elements[i], self.elements[j]))

    def identity_index(self) -> int:
        return self.index_of(self.scheme.constant_section(self.open_set, self.scheme.base.id))

    def constant_index(self, g: int) -> int:
        return self.index_of(self.scheme.constant_section(self.open_set, g))

    def as_ggroup(self, cap: int = SECTION_TABLE_CAP) -> GGroup:
        """Materialize the multiplication table; only for small groups."""
        if self._ggroup is None:
            n = len(self.elements)
            if n > cap:
                raise SheafError(f"section group of order {n} exceeds table cap {cap}")
            mul = [[self.multiply(i, j) for j in range(n)] for i in range(n)]
            table = GroupTable(mul, name=f"O({len(self.open_set)}pts)", validate=False)
            G = self.scheme.base
            structure = Homomorphism(G, table, [self.constant_index(g) for g in range(G.order)])
            self._ggroup = GGroup(G, table, structure)
        return self._ggroup

    def restriction_indices(self, smaller: "SectionGroup") -> list[int]:
        """Index map of the restriction to a smaller open's section group."""
        if not smaller.open_set <= self.open_set:
            raise SheafError("restriction target is not a subset")
        return [
            smaller.index_of(self.scheme.restrict(s, smaller.open_set))
            for s in self.elements
        ]


# -- affine schemes --------------------------------------------------------


class AffineScheme:
    """The spectrum of an object with its structural sheaf."""

    def __init__(self, spec: Spectrum):
        self.spectrum = spec
        self.base = spec.object.base
        self.points: tuple = tuple(range(len(spec.primes)))
        self._sections: dict[frozenset, SectionGroup] = {}
        self._quotients: dict[int, QuotientGroup] = {}

    def label(self) -> str:
        return f"Spec_{self.spectrum.variant}({self.spectrum.object.label()})"

    def opens(self) -> list[frozenset]:
        return self.spectrum.open_sets()

    def is_open(self, U: Iterable) -> bool:
        return self.spectrum.is_open(U)

    def minimal_open(self, p) -> frozenset:
        return self.spectrum.minimal_open(p)

    def point_quotient(self, p: int) -> QuotientGroup:
        if p not in self._quotients:
            self._quotients[p] = quotient(
                self.spectrum.object.carrier, self.spectrum.primes[p].members
            )
        return self._quotients[p]

    # -- section arithmetic ------------------------------------------------

    def constant_section(self, U: frozenset, g: int) -> SchemeSection:
        h = self.spectrum.object.structure(g)
        return self.section_from_element(U, h)

    def section_from_element(self, U: frozenset, h: int) -> SchemeSection:
        vals = {p: self.point_quotient(p).projection(h) for p in U}
        return SchemeSection(frozenset(U), _mkvalues(vals), {p: h for p in U})

    def mul_sections(self, s: SchemeSection, t: SchemeSection) -> SchemeSection:
        if s.open_set != t.open_set:
            raise SheafError("sections over different opens")
        vals, certs = {}, {}
        for (p, a), (_, b) in zip(s.values, t.values):
            q = self.point_quotient(p)
            vals[p] = q.table.op(a, b)
        for p in s.open_set:
            certs[p] = self._certify(s.open_set, vals, p)
        return SchemeSection(s.open_set, _mkvalues(vals), certs)

    def restrict(self, s: SchemeSection, U2: frozenset) -> SchemeSection:
        if not U2 <= s.open_set:
            raise SheafError("restriction to a non-subset")
        vals = {p: v for p, v in s.values if p in U2}
        certs = {p: h for p, h in s.certificates.items() if p in U2}
        return SchemeSection(frozenset(U2), _mkvalues(vals), certs)

    def _certify(self, U: frozenset, vals: dict, p: int) -> int:
        """A carrier element realizing vals on the minimal open of p, or raise."""
        H = self.spectrum.object.carrier
        q = self.point_quotient(p)
        mo = self.minimal_open(p)
        rep = next(h for h in range(H.order) if q.projection(h) == vals[p])
        members = self.spectrum.primes[p].members.members
        for m in members:
            h = H.op(rep, m)
            if all(self.point_quotient(r).projection(h) == vals[r] for r in mo):
                return h
        raise SheafError(f"no realizing element at point {p}")

    def _valid_values(self, U: frozenset, vals: dict) -> Optional[dict]:
        try:
            return {p: self._certify(U, vals, p) for p in U}
        except SheafError:
            return None

    def section_group(self, U: Iterable) -> SectionGroup:
        U = frozenset(U)
        if U not in self._sections:
            if not self.is_open(U):
                raise SheafError(f"{sorted(U)} is not open")
            pts = sorted(U)
            out = []
            ranges = [range(self.point_quotient(p).table.order) for p in pts]
            for combo in itertools.product(*ranges):
                vals = dict(zip(pts, combo))
                certs = self._valid_values(U, vals)
                if certs is not None:
                    out.append(SchemeSection(U, _mkvalues(vals), certs))
            self._sections[U] = SectionGroup(self, U, out)
        return self._sections[U]

    def section_value(self, s: SchemeSection, p):
        return s.value_at(p)

    def stalk(self, p: int) -> tuple[SectionGroup, dict]:
        """Sections over the minimal open, compared with H/rad(point)."""
        mo = self.minimal_open(p)
        group = self.section_group(mo)
        rad = point_radical(self.spectrum, p)
        q = quotient(self.spectrum.object.carrier, rad)
        images = set()
        injective = True
        for ci in range(q.table.order):
            h = next(
                x for x in range(self.spectrum.object.carrier.order)
                if q.projection(x) == ci
            )
            s = self.section_from_element(mo, h)
            idx = group.index_of(s)
            if idx in images:
                injective = False
            images.add(idx)
        report = {
            "from_quotient": q,
            "surjective": len(images) == len(group),
            "injective": injective,
        }
        return group, report

    def charts(self) -> list[tuple[frozenset, "AffineScheme", dict]]:
        return [(frozenset(self.points), self, {p: p for p in self.points})]


# -- glued schemes ---------------------------------------------------------


@dataclass(frozen=True)
class GluingIso:
    """Point bijection U1 -> U2 with a section transport realizing it."""

    point_map: dict  # U1 point -> U2 point
    transport: Callable  # SchemeSection on X1 over W <= U1 -> section on X2


def identity_gluing_iso(X1: AffineScheme, X2: AffineScheme, U1: frozenset, U2: frozenset) -> GluingIso:
    """The identity identification of equal opens in equal spectra."""
    s1, s2 = X1.spectrum, X2.spectrum
    if (
        s1.object.carrier is not s2.object.carrier
        or [P.members for P in s1.primes] != [P.members for P in s2.primes]
        or frozenset(U1) != frozenset(U2)
    ):
        raise SheafError("identity gluing needs equal spectra and equal opens")
    pm = {p: p for p in U1}

    def transport(s: SchemeSection) -> SchemeSection:
        return SchemeSection(s.open_set, s.values, dict(s.certificates))

    return GluingIso(pm, transport)


class GluedScheme:
    """Pushout of two schemes along an isomorphism of opens.

    Points are labeled ("L", p) for the first piece and ("R", q) for the
    second; identified points keep their "L" label.  A set is open iff both
    its traces are open (the quotient topology).
    """

    def __init__(self, X1, X2, U1: frozenset, U2: frozenset, iso: GluingIso):
        self.X1, self.X2 = X1, X2
        self.U1, self.U2 = frozenset(U1), frozenset(U2)
        self.iso = iso
        self.base = X1.base
        if X2.base is not X1.base:
            raise SheafError("gluing schemes over different bases")
        if set(iso.point_map) != set(self.U1) or set(iso.point_map.values()) != set(self.U2):
            raise SheafError("gluing map is not a bijection U1 -> U2")
        self._inv = {v: k for k, v in iso.point_map.items()}
        self.points = tuple(
            [("L", p) for p in X1.points]
            + [("R", q) for q in X2.points if q not in self._inv]
        )
        self._opens: Optional[list[frozenset]] = None
        self._sections: dict[frozenset, SectionGroup] = {}
        self._verify_iso()

    def label(self) -> str:
        return f"Glued({self.X1.label()},{self.X2.label()})"

    def _verify_iso(self) -> None:
        """The gluing data must be a homeomorphism with sheaf transport."""
        pm = self.iso.point_map
        opens1 = {W & self.U1 for W in self.X1.opens()}
        opens2 = {W & self.U2 for W in self.X2.opens()}
        for W in opens1:
            if frozenset(pm[p] for p in W) not in opens2:
                raise SheafError("gluing map is not open")
        for W in opens2:
            if frozenset(self._inv[q] for q in W) not in opens1:
                raise SheafError("gluing map is not continuous")
        for W in sorted(opens1, key=lambda w: (len(w), repr(sorted(w, key=repr)))):
            G1 = self.X1.section_group(self._extend_open(self.X1, W))
            # transported sections must be exactly the sections on the image
            img = frozenset(pm[p] for p in W)
            full2 = self._extend_open(self.X2, img)
            G2 = self.X2.section_group(full2)
            seen = set()
            for s in G1.elements:
                t = self.iso.transport(self.X1.restrict(s, W))
                t_full = self._lift_exact(self.X2, t, img)
                if t_full is None:
                    raise SheafError("transported section is not a section")
                seen.add(t.values)
            expect = {self.X2.restrict(t, img).values for t in G2.elements}
            restricted = {self.X1.restrict(s, W).values for s in G1.elements}
            if len(restricted) != len(seen) or not seen <= expect:
                raise SheafError("gluing transport is not an isomorphism of sections")

    @staticmethod
    def _extend_open(X, W: frozenset) -> frozenset:
        """Smallest open of X containing W (W is open in an open subspace)."""
        acc = frozenset(W)
        for p in W:
            acc |= X.minimal_open(p)
        return acc

    @staticmethod
    def _lift_exact(X, s: SchemeSection, W: frozenset):
        """s if it is a genuine section of X over W, else None."""
        vals = dict(s.values)
        if set(vals) != set(W):
            return None
        got = X._valid_values(frozenset(W), vals) if hasattr(X, "_valid_values") else None
        if got is None:
            return None
        return SchemeSection(frozenset(W), _mkvalues(vals), got)

    # -- topology ----------------------------------------------------------

    def _trace(self, W: frozenset) -> tuple[frozenset, frozenset]:
        left = frozenset(p for side, p in W if side == "L")
        right = frozenset(p for side, p in W if side == "R")
        # identified points also belong to the right piece
        right |= frozenset(
            self.iso.point_map[p] for p in left if p in self.iso.point_map
        )
        return left, right

    def opens(self) -> list[frozenset]:
        if self._opens is None:
            o1 = set(self.X1.opens())
            o2 = set(self.X2.opens())
            out = set()
            for W in itertools.chain.from_iterable(
                itertools.combinations(self.points, r) for r in range(len(self.points) + 1)
            ):
                W = frozenset(W)
                l, r = self._trace(W)
                if l in o1 and r in o2:
                    out.add(W)
            self._opens = sorted(out, key=lambda w: (len(w), repr(sorted(w, key=repr))))
        return self._opens

    def is_open(self, W: Iterable) -> bool:
        return frozenset(W) in set(self.opens())

    def minimal_open(self, point) -> frozenset:
        acc = frozenset(self.points)
        for W in self.opens():
            if point in W:
                acc &= W
        return acc

    # -- sections ----------------------------------------------------------

    def _parts(self, s: SchemeSection) -> tuple[SchemeSection, SchemeSection]:
        return s.certificates["left"], s.certificates["right"]

    def _assemble(self, W: frozenset, s1: SchemeSection, s2: SchemeSection) -> SchemeSection:
        vals = {}
        for side, p in W:
            if side == "L":
                vals[("L", p)] = s1.value_at(p)
            else:
                vals[("R", p)] = s2.value_at(p)
        return SchemeSection(W, _mkvalues(vals), {"left": s1, "right": s2})

    def section_group(self, W: Iterable) -> SectionGroup:
        W = frozenset(W)
        if W not in self._sections:
            if not self.is_open(W):
                raise SheafError(f"{sorted(W, key=repr)} is not open")
            l, r = self._trace(W)
            G1 = self.X1.section_group(l)
            G2 = self.X2.section_group(r)
            shared = frozenset(p for p in l if p in self.iso.point_map)
            out = []
            for s1 in G1.elements:
                t = (
                    self.iso.transport(self.X1.restrict(s1, shared))
                    if shared
                    else None
                )
                for s2 in G2.elements:
                    if shared:
                        img = frozenset(self.iso.point_map[p] for p in shared)
                        if self.X2.restrict(s2, img).values != t.values:
                            continue
                    out.append(self._assemble(W, s1, s2))
            self._sections[W] = SectionGroup(self, W, out)
        return self._sections[W]

    def mul_sections(self, s: SchemeSection, t: SchemeSection) -> SchemeSection:
        s1, s2 = self._parts(s)
        t1, t2 = self._parts(t)
        return self._assemble(
            s.open_set, self.X1.mul_sections(s1, t1), self.X2.mul_sections(s2, t2)
        )

    def restrict(self, s: SchemeSection, W2: frozenset) -> SchemeSection:
        s1, s2 = self._parts(s)
        l, r = self._trace(frozenset(W2))
        return self._assemble(frozenset(W2), self.X1.restrict(s1, l), self.X2.restrict(s2, r))

    def constant_section(self, W: frozenset, g: int) -> SchemeSection:
        l, r = self._trace(frozenset(W))
        return self._assemble(
            frozenset(W),
            self.X1.constant_section(l, g),
            self.X2.constant_section(r, g),
        )

    def section_value(self, s: SchemeSection, point):
        return s.value_at(point)

    def stalk(self, point) -> tuple[SectionGroup, dict]:
        side, p = point
        mo = self.minimal_open(point)
        group = self.section_group(mo)
        inner, report = (self.X1 if side == "L" else self.X2).stalk(p)
        return group, {"chart_stalk_order": len(inner), **report}

    def charts(self):
        left = frozenset(("L", p) for p in self.X1.points)
        right_map = {}
        for q in self.X2.points:
            pt = ("L", self._inv[q]) if q in self._inv else ("R", q)
            right_map[pt] = q
        return [
            (left, self.X1, {("L", p): p for p in self.X1.points}),
            (frozenset(right_map), self.X2, right_map),
        ]


def glue(X1, X2, U1: Iterable, U2: Iterable, iso: Optional[GluingIso] = None) -> GluedScheme:
    U1, U2 = frozenset(U1), frozenset(U2)
    if not X1.is_open(U1) or not X2.is_open(U2):
        raise SheafError("gluing opens must be open")
    if iso is None:
        iso = identity_gluing_iso(X1, X2, U1, U2)
    return GluedScheme(X1, X2, U1, U2, iso)


# -- morphisms -------------------------------------------------------------


@dataclass
class SchemeMorphism:
    """Geometric point map plus the compatible pullback on sections."""

    source: object
    target: object
    point_map: dict  # source point -> target point
    pullback: Callable  # section of target over U -> section of source
    algebraic: Optional[GMorphism] = None  # carrier-level map when available

    def preimage(self, U: Iterable) -> frozenset:
        U = frozenset(U)
        return frozenset(p for p, q in self.point_map.items() if q in U)

    def verify(self) -> dict:
        """Continuity, commuting restriction squares, and localness."""
        for U in self.target.opens():
            if not self.source.is_open(self.preimage(U)):
                raise SheafError("geometric map is not continuous")
        for U in self.target.opens():
            GU = self.target.section_group(U)
            W = self.preimage(U)
            GW = self.source.section_group(W)
            for V in self.target.opens():
                if not V < U:
                    continue
                WV = self.preimage(V)
                for s in GU.elements:
                    down = self.pullback(self.target.restrict(s, V))
                    across = self.source.restrict(self.pullback(s), WV)
                    if down.values != across.values:
                        raise SheafError("restriction square does not commute")
            for s in GU.elements:
                GW.index_of(self.pullback(s))  # pullback lands in sections
        local = True
        for p, q in self.point_map.items():
            mo_p = self.source.minimal_open(p)
            mo_q = self.target.minimal_open(q)
            Gq = self.target.section_group(mo_q)
            for s in Gq.elements:
                vanish_target = _is_id_value(self.target, s, q)
                t = self.source.restrict(self.pullback(self._extendback(s, mo_q)), mo_p)
                vanish_source = _is_id_value(self.source, t, p)
                if vanish_target != vanish_source:
                    local = False
        if not local:
            raise SheafError("morphism is not local")
        return {"continuous": True, "squares": True, "local": True}

    def _extendback(self, s: SchemeSection, U: frozenset) -> SchemeSection:
        return s if s.open_set == U else self.target.restrict(s, U)


def _is_id_value(scheme, s: SchemeSection, point) -> bool:
    idsec = scheme.constant_section(s.open_set, scheme.base.id)
    return s.value_at(point) == idsec.value_at(point)


def induced_morphism(f: GMorphism, variant: str, prime_def: str = "elementwise") -> SchemeMorphism:
    """The scheme morphism Spec(target of f) -> Spec(source of f), P -> f^-1(P)."""
    specH = spectrum(f.source, variant, prime_def)
    specHp = spectrum(f.target, variant, prime_def)
    X = AffineScheme(specHp)
    Y = AffineScheme(specH)
    pm = {}
    for i, Pp in enumerate(specHp.primes):
        K = f.map.preimage_subgroup(Pp.members)
        if K.is_whole():
            raise SheafError(
                f"preimage of prime #{i} is the whole carrier; no induced point"
            )
        match = None
        for j, P in enumerate(specH.primes):
            if P.members == K:
                match = j
                break
        if match is None:
            raise SheafError(
                f"preimage of prime #{i} fails the {variant}/{prime_def} primality test"
            )
        pm[i] = match

    def pullback(s: SchemeSection) -> SchemeSection:
        U = s.open_set
        W = frozenset(p for p, q in pm.items() if q in U)
        vals, certs = {}, {}
        for p in W:
            q = pm[p]
            h = s.certificates[q]
            certs[p] = f(h)
            vals[p] = X.point_quotient(p).projection(f(h))
        return SchemeSection(W, _mkvalues(vals), certs)

    m = SchemeMorphism(X, Y, pm, pullback, algebraic=f)
    m.verify()
    return m


def embed_quotient(obj: GGroup, I: Ideal, variant: str, prime_def: str = "elementwise") -> tuple[SchemeMorphism, bool]:
    """The induced morphism of the quotient projection, with isomorphism flag.

    The image is the vanishing set V(I); when I is the radical the morphism
    is an isomorphism onto the whole space.
    """
    from .spectrum import quotient_object, vanishing_set

    qobj, q = quotient_object(obj, I.members)
    f = GMorphism(obj, qobj, q.projection)
    m = induced_morphism(f, variant, prime_def)
    specH = m.target.spectrum
    image = frozenset(m.point_map.values())
    VI = vanishing_set(specH, I.members).member_indices
    if image != VI:
        raise SheafError("embedding image differs from V(I)")
    if len(set(m.point_map.values())) != len(m.point_map):
        raise SheafError("embedding is not injective on points")
    # homeomorphism onto the image: closed sets correspond
    src_closed = {
        frozenset(m.point_map[p] for p in (frozenset(m.source.points) - U))
        for U in m.source.opens()
    }
    tgt_closed = {
        (frozenset(m.target.points) - U) & image for U in m.target.opens()
    }
    if src_closed != tgt_closed:
        raise SheafError("embedding is not a homeomorphism onto V(I)")
    iso = I.members == whole_radical(specH)
    if iso:
        whole_src = frozenset(m.source.points)
        whole_tgt = frozenset(m.target.points)
        GS = m.source.section_group(whole_src)
        GT = m.target.section_group(whole_tgt)
        pulled = {m.pullback(s).values for s in GT.elements}
        if len(GS) != len(GT) or len(pulled) != len(GT):
            raise SheafError("radical embedding failed the sheaf isomorphism check")
    return m, iso


# -- audits and theorem-shaped helpers -------------------------------------


def check_sheaf_axioms(scheme) -> dict:
    """Identity and gluing on pair covers and minimal-open covers of each open."""
    checked_pairs = 0
    checked_minimal = 0
    for U in scheme.opens():
        GU = scheme.section_group(U)
        opens_in_U = [V for V in scheme.opens() if V <= U]
        # pair covers by proper opens (a cover containing U itself glues
        # trivially once the identity axiom holds)
        for V1, V2 in itertools.combinations(opens_in_U, 2):
            if V1 | V2 != U or V1 == U or V2 == U:
                continue
            G1 = scheme.section_group(V1)
            G2 = scheme.section_group(V2)
            inter = V1 & V2
            glued = set()
            for s1 in G1.elements:
                for s2 in G2.elements:
                    if scheme.restrict(s1, inter).values != scheme.restrict(s2, inter).values:
                        continue
                    merged = dict(scheme.restrict(s1, V1).values)
                    merged.update(dict(s2.values))
                    glued.add(_mkvalues(merged))
            have = {s.values for s in GU.elements}
            if glued != have:
                raise SheafError(
                    f"gluing axiom fails on {sorted(U, key=repr)} = "
                    f"{sorted(V1, key=repr)} | {sorted(V2, key=repr)}"
                )
            checked_pairs += 1
        # minimal-open cover: identity axiom
        if U:
            cover = [scheme.minimal_open(p) for p in U]
            seen = {}
            for s in GU.elements:
                key = tuple(scheme.restrict(s, V).values for V in cover)
                if key in seen:
                    raise SheafError("identity axiom fails on the minimal-open cover")
                seen[key] = s
            checked_minimal += 1
    return {"pair_covers": checked_pairs, "minimal_covers": checked_minimal}


def global_sections_vs_quotient(spec: Spectrum) -> dict:
    """Whether sections over the whole space coincide with H/rad.

    The comparison map sends h to its constant section; the hypothesis under
    which equality is claimed is that the irreducible components have a
    common point.
    """
    X = AffineScheme(spec)
    whole = frozenset(X.points)
    G = X.section_group(whole)
    rad = whole_radical(spec)
    H = spec.object.carrier
    comps = irreducible_components(spec)
    inter = frozenset(X.points)
    for c, _ in comps:
        inter &= c.member_indices
    hypothesis = bool(inter) or not comps
    if not spec.primes:
        return {"hypothesis": hypothesis, "isomorphic": len(G) == 1,
                "sections": len(G), "quotient_order": 1}
    q = quotient(H, rad)
    images = set()
    for ci in range(q.table.order):
        h = next(x for x in range(H.order) if q.projection(x) == ci)
        images.add(G.index_of(X.section_from_element(whole, h)))
    return {
        "hypothesis": hypothesis,
        "isomorphic": len(images) == q.table.order == len(G),
        "sections": len(G),
        "quotient_order": q.table.order,
    }


def restrictions_are_isomorphisms(spec: Spectrum) -> bool:
    """For irreducible spectra, restrictions between nonempty opens are bijective."""
    X = AffineScheme(spec)
    whole = frozenset(X.points)
    from .spectrum import is_irreducible_closed

    if not is_irreducible_closed(spec, whole):
        raise SheafError("the spectrum is not irreducible")
    opens = [U for U in X.opens() if U]
    for U in opens:
        GU = X.section_group(U)
        for V in opens:
            if V < U:
                GV = X.section_group(V)
                idx = GU.restriction_indices(GV)
                if len(set(idx)) != len(GV) or len(idx) != len(GV):
                    return False
    return True


def point_vanishing_ideal(group: SectionGroup, point) -> Ideal:
    """I_P(U) = sections with identity value at the point, as an ideal."""
    gg = group.as_ggroup()
    scheme = group.scheme
    members = [
        i for i, s in enumerate(group.elements) if _is_id_value(scheme, s, point)
    ]
    return Ideal(gg, Subgroup(gg.carrier, members))


def noetherian_sections(spec: Spectrum) -> dict:
    """Global sections as compatible tuples over the component generic primes.

    Tuples (g_j) in the product of the H/P_j, constrained by agreement in
    H/(P_j P_k) whenever the closures of the generic points meet.
    """
    H = spec.object.carrier
    comps = irreducible_components(spec)
    if not comps:
        return {"order": 1, "tuples": [()], "isomorphic_to_sections": True}
    generics = []
    for c, g in comps:
        if g is None:
            raise SheafError("a component has no generic member prime")
        generics.append(g)
    quots = [quotient(H, spec.primes[g].members) for g in generics]
    closures = [spec.closure({g}) for g in generics]
    pair_quots = {}
    for j, k in itertools.combinations(range(len(generics)), 2):
        if closures[j] & closures[k]:
            prod = subgroup_product(
                H, spec.primes[generics[j]].members, spec.primes[generics[k]].members
            )
            pair_quots[(j, k)] = quotient(H, prod)
    tuples = []
    for combo in itertools.product(*[range(q.table.order) for q in quots]):
        ok = True
        for (j, k), pq in pair_quots.items():
            hj = next(x for x in range(H.order) if quots[j].projection(x) == combo[j])
            hk = next(x for x in range(H.order) if quots[k].projection(x) == combo[k])
            if pq.projection(hj) != pq.projection(hk):
                ok = False
                break
        if ok:
            tuples.append(combo)
    X = AffineScheme(spec)
    whole = frozenset(X.points)
    G = X.section_group(whole)
    # natural comparison: a section is sent to its values at the generic points
    image = set()
    injective = True
    for s in G.elements:
        key = tuple(s.value_at(g) for g in generics)
        if key in image:
            injective = False
        image.add(key)
    iso = injective and image == set(tuples)
    return {
        "order": len(tuples),
        "tuples": tuples,
        "sections_order": len(G),
        "isomorphic_to_sections": iso,
    }


# -- the Hom correspondence for schemes ------------------------------------


def scheme_hom_correspondence(X, Hobj: GGroup, variant: str, prime_def: str = "elementwise") -> dict:
    """Scheme morphisms X -> Spec(H) against G-morphisms H/rad -> O_X(X).

    Requires every chart of X to be an irreducible spectrum and the global
    sections of Spec(H) to coincide with H/rad.
    """
    from .spectrum import is_irreducible_closed, quotient_object

    for (_, chart, _) in X.charts():
        cs = chart.spectrum
        if not is_irreducible_closed(cs, frozenset(range(len(cs.primes)))):
            raise SheafError("a chart is not irreducible")
    specH = spectrum(Hobj, variant, prime_def)
    Y = AffineScheme(specH)
    gv = global_sections_vs_quotient(specH)
    if not gv["isomorphic"]:
        raise SheafError("global sections of the target are not H/rad")
    rad = whole_radical(specH)
    if rad.is_trivial():
        A = Hobj
        proj = Homomorphism.identity(Hobj.carrier)
    else:
        A, q = quotient_object(Hobj, rad)
        proj = q.projection
    whole_X = frozenset(X.points)
    B = X.section_group(whole_X).as_ggroup()
    homs = enumerate_g_morphisms(A, B)
    GX = X.section_group(whole_X)

    def Phi(m: SchemeMorphism) -> Optional[int]:
        """Index of the G-morphism matching the global pullback of m."""
        whole_Y = frozenset(Y.points)
        image = []
        for a in range(A.carrier.order):
            h = next(x for x in range(Hobj.carrier.order) if proj(x) == a)
            s = Y.section_from_element(whole_Y, h)
            image.append(GX.index_of(m.pullback(s)))
        for i, v in enumerate(homs):
            if list(v.map.image) == image:
                return i
        return None

    def Psi(vi: int) -> SchemeMorphism:
        """Rebuild the geometric map from prime preimages of vanishing ideals."""
        v = homs[vi]
        pm = {}
        for x in X.points:
            members = [
                h for h in range(Hobj.carrier.order)
                if _is_id_value(X, GX.elements[v(proj(h))], x)
            ]
            K = Subgroup(Hobj.carrier, members)
            match = None
            for j, P in enumerate(specH.primes):
                if P.members == K:
                    match = j
                    break
            if match is None:
                raise SheafError(
                    f"vanishing preimage at point {x!r} is not a prime of the target"
                )
            pm[x] = match

        def pullback(s: SchemeSection) -> SchemeSection:
            U = s.open_set
            W = frozenset(p for p, qq in pm.items() if qq in U)
            # per point, push the realizing element of s through v
            vals = {}
            for p in W:
                h = s.certificates[pm[p]]
                vals[p] = GX.elements[v(proj(h))].value_at(p)
            target_vals = _mkvalues(vals)
            for t in X.section_group(W).elements:
                if t.values == target_vals:
                    return t
            raise SheafError("rebuilt pullback is not a section")

        m = SchemeMorphism(X, Y, pm, pullback, algebraic=None)
        m.verify()
        return m

    roundtrips = []
    for vi in range(len(homs)):
        m = Psi(vi)
        back = Phi(m)
        m2 = Psi(back) if back is not None else None
        roundtrips.append(
            {
                "hom": vi,
                "phi_psi_identity": back == vi,
                "psi_phi_point_map_stable": m2 is not None and m2.point_map == m.point_map,
            }
        )
    return {
        "hom_count": len(homs),
        "homs": homs,
        "Phi": Phi,
        "Psi": Psi,
        "roundtrips": roundtrips,
        "all_identity": all(r["phi_psi_identity"] and r["psi_phi_point_map_stable"] for r in roundtrips),
    }
