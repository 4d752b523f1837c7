"""Finite group kernel: Cayley tables, subgroups, homomorphisms, quotients.

Every group is materialized as a full multiplication table over element
indices 0..n-1 with a fixed canonical order, so all downstream searches are
exhaustive and deterministic.  Set-valued results are always emitted sorted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "GroupTable",
    "Subgroup",
    "Homomorphism",
    "QuotientGroup",
    "normal_closure",
    "commutator_subgroup",
    "subgroup_product",
    "quotient",
    "is_nilpotent",
    "normal_subgroups",
    "is_simple",
    "cyclic",
    "symmetric",
    "alternating",
    "dihedral",
    "quaternion8",
    "direct_product",
    "from_permutations",
    "parse_cayley_text",
    "parse_perm_text",
]


class GroupError(ValueError):
    """Raised for malformed tables, non-normal subgroups, bad indices."""


def _dtype_for(n: int):
    return np.int16 if n < 2 ** 15 else np.int32


class GroupTable:
    """A finite group given by its multiplication table on indices 0..n-1."""

    def __init__(
        self,
        mul: Sequence[Sequence[int]] | np.ndarray,
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
        validate: Optional[bool] = None,
    ):
        mul = np.asarray(mul)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise GroupError("multiplication table must be square")
        n = mul.shape[0]
        if n == 0:
            raise GroupError("empty table")
        if mul.min() < 0 or mul.max() >= n:
            raise GroupError("table entries out of range")
        self.order: int = int(n)
        self.mul: np.ndarray = mul.astype(_dtype_for(n))
        self.name = name or f"group{n}"
        self.labels: list[str] = (
            [str(x) for x in labels] if labels is not None else [f"g{i}" for i in range(n)]
        )
        if len(self.labels) != n:
            raise GroupError("label count mismatch")

        self.id: int = self._find_identity()
        self.inv: np.ndarray = self._find_inverses()
        # Full associativity check is cubic; only run it on tables small
        # enough that it stays cheap.  Structured constructors are valid by
        # construction and pass validate=False.
        if validate is None:
            validate = n <= 256
        if validate:
            self._check_associative()
        self._span_cache: dict = {}
        self._conj_class_cache: Optional[list] = None

    def _find_identity(self) -> int:
        for e in range(self.order):
            if np.array_equal(self.mul[e], np.arange(self.order)) and np.array_equal(
                self.mul[:, e], np.arange(self.order)
            ):
                return e
        raise GroupError("table has no two-sided identity")

    def _find_inverses(self) -> np.ndarray:
        inv = np.full(self.order, -1, dtype=self.mul.dtype)
        rows, cols = np.nonzero(self.mul == self.id)
        for r, c in zip(rows, cols):
            if inv[r] == -1:
                inv[r] = c
        for a in range(self.order):
            b = int(inv[a])
            if b < 0 or self.mul[a, b] != self.id or self.mul[b, a] != self.id:
                raise GroupError(f"element {a} has no two-sided inverse")
        return inv

    def _check_associative(self) -> None:
        m = self.mul.astype(np.int32)
        left = m[m, :]          # (a*b)*c indexed [a,b,c]
        right = m[:, m]         # a*(b*c) indexed [a,b,c]
        if not np.array_equal(left, right):
            raise GroupError("table is not associative")

    # -- basic arithmetic --------------------------------------------------

    def op(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def commutator(self, a: int, b: int) -> int:
        """a * b * a^-1 * b^-1."""
        return int(self.mul[self.mul[self.mul[a, b], self.inv[a]], self.inv[b]])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(a), -k)
        r = self.id
        while k:
            if k & 1:
                r = self.op(r, a)
            a = self.op(a, a)
            k >>= 1
        return r

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.id:
            x = self.op(x, a)
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"

    # -- structure helpers -------------------------------------------------

    def generated_subgroup(self, gens: Iterable[int]) -> "Subgroup":
        """Subgroup generated by gens (closure under multiplication).

        A small generating subsequence is extracted first; subgroup chains
        have logarithmic length, which keeps the closure products narrow.
        """
        cand = np.unique(np.asarray(list(gens) + [self.id], dtype=np.int64))
        member = np.zeros(self.order, dtype=bool)
        member[self.id] = True
        small: list[int] = []
        while True:
            outside = cand[~member[cand]]
            if outside.size == 0:
                break
            g = int(outside[0])
            small.append(g)
            member[g] = True
            # every element is a word in the small generators, so closing
            # under right-multiplication by them from the current members
            # rebuilds the enlarged subgroup
            frontier = np.flatnonzero(member)
            sm = np.asarray(small)
            while frontier.size:
                prods = np.unique(self.mul[np.ix_(frontier, sm)])
                new = prods[~member[prods]]
                member[new] = True
                frontier = new
            if member.all():
                break
        return Subgroup(self, np.flatnonzero(member))

    def conjugacy_classes(self) -> list[np.ndarray]:
        """Conjugacy classes as sorted index arrays, ordered by least member."""
        if self._conj_class_cache is None:
            seen = np.zeros(self.order, dtype=bool)
            classes = []
            allg = np.arange(self.order)
            for x in range(self.order):
                if seen[x]:
                    continue
                cls = np.unique(self.mul[self.mul[allg, x], self.inv[allg]])
                seen[cls] = True
                classes.append(cls)
            self._conj_class_cache = classes
        return self._conj_class_cache

    def conjugacy_class_of(self, x: int) -> np.ndarray:
        for cls in self.conjugacy_classes():
            if x in cls:
                return cls
        raise GroupError(f"element {x} out of range")


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a parent GroupTable as a flat sorted member tuple."""

    parent: GroupTable
    members: tuple[int, ...]
    _mask: np.ndarray = field(compare=False, repr=False, default=None)

    def __init__(self, parent: GroupTable, members: Iterable[int]):
        arr = np.unique(np.asarray(list(members), dtype=np.int64))
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "members", tuple(int(x) for x in arr))
        mask = np.zeros(parent.order, dtype=bool)
        mask[arr] = True
        object.__setattr__(self, "_mask", mask)
        if parent.id not in self.members:
            raise GroupError("subgroup must contain the identity")

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    def __contains__(self, x: int) -> bool:
        return bool(self._mask[x])

    def __len__(self) -> int:
        return len(self.members)

    def issubset(self, other: "Subgroup") -> bool:
        return not bool((self._mask & ~other._mask).any())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def verify(self) -> None:
        m = np.asarray(self.members)
        prods = self.parent.mul[np.ix_(m, m)]
        if not self._mask[prods].all():
            raise GroupError("not closed under multiplication")
        if not self._mask[self.parent.inv[m]].all():
            raise GroupError("not closed under inverses")

    def is_normal(self) -> bool:
        m = np.asarray(self.members)
        allg = np.arange(self.parent.order)
        # conjugate each member by every group element
        conj = self.parent.mul[
            self.parent.mul[np.ix_(allg, m)], self.parent.inv[allg][:, None]
        ]
        return bool(self._mask[conj].all())

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_whole(self) -> bool:
        return len(self.members) == self.parent.order

    def intersection(self, other: "Subgroup") -> "Subgroup":
        if other.parent is not self.parent:
            raise GroupError("subgroups of different parents")
        return Subgroup(self.parent, np.flatnonzero(self._mask & other._mask))

    def is_abelian(self) -> bool:
        m = np.asarray(self.members)
        return bool(
            np.array_equal(self.parent.mul[np.ix_(m, m)], self.parent.mul[np.ix_(m, m)].T)
        )


@dataclass(frozen=True)
class Homomorphism:
    """Group homomorphism given by the per-element image table."""

    source: GroupTable
    target: GroupTable
    image: tuple[int, ...]

    def __init__(self, source: GroupTable, target: GroupTable, image: Sequence[int]):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "image", tuple(int(x) for x in image))
        if len(self.image) != source.order:
            raise GroupError("image table has wrong length")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def verify(self) -> None:
        img = np.asarray(self.image)
        if img[self.source.id] != self.target.id:
            raise GroupError("identity not preserved")
        lhs = img[self.source.mul]
        rhs = self.target.mul[np.ix_(img, img)]
        if not np.array_equal(lhs, rhs):
            raise GroupError("map is not a homomorphism")

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.order

    def kernel(self) -> Subgroup:
        img = np.asarray(self.image)
        return Subgroup(self.source, np.flatnonzero(img == self.target.id))

    def image_subgroup(self) -> Subgroup:
        return self.target.generated_subgroup(set(self.image))

    def compose(self, outer: "Homomorphism") -> "Homomorphism":
        """outer o self (apply self first)."""
        if outer.source is not self.target:
            raise GroupError("composition mismatch")
        return Homomorphism(self.source, outer.target, [outer.image[i] for i in self.image])

    def preimage_subgroup(self, sub: Subgroup) -> Subgroup:
        img = np.asarray(self.image)
        return Subgroup(self.source, np.flatnonzero(sub.mask[img]))

    @staticmethod
    def identity(g: GroupTable) -> "Homomorphism":
        return Homomorphism(g, g, list(range(g.order)))


@dataclass(frozen=True)
class QuotientGroup:
    """Coset group H/N with its projection, cosets ordered by least member."""

    parent: GroupTable
    kernel: Subgroup
    table: GroupTable
    projection: Homomorphism


def normal_closure(H: GroupTable, S: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup of H containing S."""
    S = list(S)
    if not S:
        return Subgroup(H, [H.id])
    allg = np.arange(H.order)
    gens: set[int] = set()
    for s in S:
        conj = np.unique(H.mul[H.mul[allg, s], H.inv[allg]])
        gens.update(int(c) for c in conj)
    # conjugates of generators are closed under conjugation, so the
    # generated subgroup is already normal
    return H.generated_subgroup(gens)


@lru_cache(maxsize=None)
def commutator_subgroup(H: GroupTable, L: Subgroup, Lp: Subgroup) -> Subgroup:
    """Subgroup generated by all commutators [l, l'], l in L, l' in L'."""
    a = np.asarray(L.members)
    b = np.asarray(Lp.members)
    p = H.mul[np.ix_(a, b)]
    p = H.mul[p, H.inv[a][:, None]]
    p = H.mul[p, H.inv[b][None, :]]
    return H.generated_subgroup(np.unique(p))


def subgroup_product(H: GroupTable, A: Subgroup, B: Subgroup) -> Subgroup:
    """Product AB of two normal subgroups (as the generated subgroup)."""
    if not (A.is_normal() and B.is_normal()):
        raise GroupError("subgroup_product requires normal inputs")
    return H.generated_subgroup(set(A.members) | set(B.members))


@lru_cache(maxsize=None)
def quotient(H: GroupTable, N: Subgroup) -> QuotientGroup:
    """Quotient H/N for normal N, cosets canonically ordered by least member."""
    if not N.is_normal():
        raise GroupError("quotient requires a normal subgroup")
    m = np.asarray(N.members)
    # coset representative of x = least member of xN
    rep = H.mul[:, m].min(axis=1)
    reps = np.unique(rep)
    index_of = {int(r): i for i, r in enumerate(reps)}
    proj = [index_of[int(rep[x])] for x in range(H.order)]
    proj_arr = np.asarray(proj)
    qmul = proj_arr[H.mul[np.ix_(reps, reps)]]
    labels = [H.labels[int(r)] + "*" if len(N) > 1 else H.labels[int(r)] for r in reps]
    table = GroupTable(qmul, labels=labels, name=f"{H.name}/{len(N)}", validate=False)
    projection = Homomorphism(H, table, proj)
    return QuotientGroup(H, N, table, projection)


def is_nilpotent(L: Subgroup) -> bool:
    """True iff the lower central series of L reaches the trivial group."""
    H = L.parent
    current = L
    while True:
        nxt = commutator_subgroup(H, L, current)
        if nxt.is_trivial():
            return True
        if nxt == current:
            return False
        current = nxt


@lru_cache(maxsize=None)
def normal_subgroups(H: GroupTable) -> tuple[Subgroup, ...]:
    """All normal subgroups, ordered by (size, member tuple)."""
    classes = H.conjugacy_classes()
    trivial = Subgroup(H, [H.id])
    found = {trivial.members: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for N in frontier:
            for cls in classes:
                c = int(cls[0])
                if c in N:
                    continue
                # union of conjugacy classes, so the closure is normal
                M = H.generated_subgroup(list(N.members) + list(cls))
                if M.members not in found:
                    found[M.members] = M
                    nxt.append(M)
        frontier = nxt
    return tuple(sorted(found.values(), key=lambda s: (len(s), s.members)))


def is_simple(H: GroupTable) -> bool:
    if H.order == 1:
        raise GroupError("simplicity is undefined for the trivial group")
    return len(normal_subgroups(H)) == 2


# -- constructors ----------------------------------------------------------


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable(mul, labels=[str(i) for i in range(n)], name=f"Z{n}", validate=False)


def _perm_group(perms: list[tuple[int, ...]], name: str) -> GroupTable:
    perms = sorted(set(perms))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = np.empty((n, n), dtype=_dtype_for(n))
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mul[i, j] = index[tuple(p[k] for k in q)]
    return GroupTable(mul, labels=[_cycle_label(p) for p in perms], name=name, validate=False)


def _cycle_label(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) or "e"


def symmetric(n: int) -> GroupTable:
    return _perm_group([p for p in itertools.permutations(range(n))], f"S{n}")


def _parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    sign = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        sign += ln - 1
    return sign % 2


def alternating(n: int) -> GroupTable:
    return _perm_group(
        [p for p in itertools.permutations(range(n)) if _parity(p) == 0], f"A{n}"
    )


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n (symmetries of the n-gon)."""
    if n < 1:
        raise GroupError("dihedral(n) needs n >= 1")
    # element (r, s): rotation by r composed with s reflections
    elems = [(r, s) for s in range(2) for r in range(n)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        r1, s1 = a
        r2, s2 = b
        if s1 == 0:
            return ((r1 + r2) % n, s2)
        return ((r1 - r2) % n, 1 - s2)

    table = [[index[mul(a, b)] for b in elems] for a in elems]
    labels = [("r%d" % r if s == 0 else "sr%d" % r) for r, s in elems]
    return GroupTable(table, labels=labels, name=f"D{n}", validate=False)


def quaternion8() -> GroupTable:
    # elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign)
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    axis = [0, 0, 1, 1, 2, 2, 3, 3]  # 0 = scalar, 1 = i, 2 = j, 3 = k
    sign = [1, -1, 1, -1, 1, -1, 1, -1]
    mul_axis = {
        (0, a): a for a in range(4)
    }
    for a in range(4):
        mul_axis[(a, 0)] = a
    qtab = {
        (1, 1): (0, -1),
        (2, 2): (0, -1),
        (3, 3): (0, -1),
        (1, 2): (3, 1),
        (2, 1): (3, -1),
        (2, 3): (1, 1),
        (3, 2): (1, -1),
        (3, 1): (2, 1),
        (1, 3): (2, -1),
    }

    def mul(i, j):
        a1, s1, a2, s2 = axis[i], sign[i], axis[j], sign[j]
        if a1 == 0 or a2 == 0:
            a, s = mul_axis[(a1, a2)], 1
        else:
            a, s = qtab[(a1, a2)]
        s = s * s1 * s2
        return names.index(names[2 * a] if a else "1") + (0 if s == 1 else 1)

    table = [[mul(i, j) for j in range(8)] for i in range(8)]
    return GroupTable(table, labels=names, name="Q8", validate=True)


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    n, m = A.order, B.order
    big = A.mul.astype(np.int64)[:, None, :, None] * m + B.mul.astype(np.int64)[None, :, None, :]
    mul = big.reshape(n * m, n * m)
    labels = [f"({a},{b})" for a in A.labels for b in B.labels]
    return GroupTable(mul, labels=labels, name=f"{A.name}x{B.name}", validate=False)


def from_permutations(degree: int, gens: Sequence[tuple[int, ...]], name: str = "perm") -> GroupTable:
    """Expand permutation generators (0-based image tuples) to a full table."""
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError(f"not a permutation of 0..{degree - 1}: {g}")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[k]] for k in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return _perm_group(list(seen), name)


# -- text formats ----------------------------------------------------------


def parse_cayley_text(text: str) -> GroupTable:
    """Cayley-table format: first line ``order n``, then n rows of n indices."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("order"):
        raise GroupError("expected first line 'order n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise GroupError("malformed order line") from None
    if len(lines) != n + 1:
        raise GroupError(f"expected {n} table rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = [int(tok) for tok in ln.split()]
        if len(row) != n:
            raise GroupError("table row has wrong length")
        rows.append(row)
    return GroupTable(rows, name="table")


def _parse_cycles(s: str, degree: int) -> tuple[int, ...]:
    img = list(range(degree))
    s = s.strip()
    if s in ("", "()", "e"):
        return tuple(img)
    depth = 0
    cycles, cur = [], []
    token = ""
    for ch in s:
        if ch == "(":
            if depth:
                raise GroupError("nested parenthesis in cycle")
            depth, cur, token = 1, [], ""
        elif ch == ")":
            if token:
                cur.append(int(token))
            token = ""
            depth = 0
            cycles.append(cur)
        elif ch in " ,":
            if token:
                cur.append(int(token))
            token = ""
        elif ch.isdigit():
            token += ch
        else:
            raise GroupError(f"bad character {ch!r} in cycle notation")
    if depth:
        raise GroupError("unbalanced parenthesis in cycle notation")
    for cyc in cycles:
        pts = [c - 1 for c in cyc]  # 1-based on the wire
        if any(p < 0 or p >= degree for p in pts):
            raise GroupError("cycle point out of range")
        for i, p in enumerate(pts):
            img[p] = pts[(i + 1) % len(pts)]
    return tuple(img)


def parse_perm_text(text: str) -> GroupTable:
    """Permutation format: ``perm n: (a b c)(d e) ; (x y) ; ...`` (1-based)."""
    text = text.strip()
    if not text.startswith("perm"):
        raise GroupError("expected 'perm n: ...'")
    head, _, rest = text.partition(":")
    try:
        degree = int(head.split()[1])
    except (IndexError, ValueError):
        raise GroupError("malformed perm header") from None
    gens = [_parse_cycles(part, degree) for part in rest.split(";") if part.strip()]
    if not gens:
        gens = [tuple(range(degree))]
    return from_permutations(degree, gens, name=f"perm{degree}")
