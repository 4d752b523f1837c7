"""Independent brute-force oracles, written straight from the definitions.

These avoid the library's optimized paths: subgroups are closed by
repeated multiplication to a fixpoint, normal subgroups come from the
join lattice of conjugacy-class closures, and primality scans every
pair of spans outside the candidate ideal.  Repeated closures of the
same generating set are memoized; nothing else is shared.
"""

import numpy as np

from groupspec.fingroup import GroupTable


def _all(G: GroupTable) -> np.ndarray:
    return np.arange(G.order, dtype=np.int64)


def conjugates_of(G: GroupTable, x: int, by: np.ndarray) -> np.ndarray:
    return np.unique(G.mul[G.mul[by, x], G.inv[by]])


def naive_generated(G: GroupTable, gens) -> frozenset:
    members = np.unique(np.asarray(sorted(set(gens) | {G.id}), dtype=np.int64))
    while True:
        if len(members) == G.order:
            return frozenset(range(G.order))
        prods = np.unique(
            np.concatenate(
                [members, G.inv[members], G.mul[np.ix_(members, members)].ravel()]
            )
        )
        if len(prods) == len(members):
            return frozenset(int(x) for x in members)
        members = prods


def naive_is_normal(G: GroupTable, S: frozenset) -> bool:
    arr = np.fromiter(sorted(S), dtype=np.int64)
    g = _all(G)
    conj = G.mul[G.mul[g[:, None], arr[None, :]], G.inv[g][:, None]]
    return set(int(x) for x in np.unique(conj)) == S


def naive_normal_subgroups(G: GroupTable) -> list[frozenset]:
    """Join lattice of the normal closures of single conjugacy classes."""
    classes = {frozenset(int(c) for c in conjugates_of(G, x, _all(G))) for x in range(G.order)}
    atoms = [naive_generated(G, c) for c in classes]
    found = {frozenset({G.id})}
    frontier = [frozenset({G.id})]
    while frontier:
        N = frontier.pop()
        for A in atoms:
            join = naive_generated(G, N | A)
            if join not in found:
                found.add(join)
                frontier.append(join)
    for N in found:
        assert naive_is_normal(G, N)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def commutator_closure(G: GroupTable, Sx: frozenset, Sy: frozenset) -> frozenset:
    """<[a,b] : a in Sx, b in Sy>, accumulated in row blocks.  Stops as
    soon as the closure is the whole group: further generators cannot
    enlarge it."""
    A = np.fromiter(sorted(Sx), dtype=np.int64)
    B = np.fromiter(sorted(Sy), dtype=np.int64)
    gens: set[int] = {G.id}
    closure: frozenset = frozenset({G.id})
    for start in range(0, len(A), 64):
        a = A[start : start + 64]
        ab = G.mul[a[:, None], B[None, :]]
        comms = G.mul[G.mul[ab, G.inv[a][:, None]], G.inv[B][None, :]]
        before = len(gens)
        gens.update(int(c) for c in np.unique(comms))
        if len(gens) != before:
            closure = naive_generated(G, gens)
            if len(closure) == G.order:
                return closure
    return closure


class SpanOracle:
    """Spans and pair conditions with memoized closures."""

    def __init__(self, structure):
        self.structure = structure
        self.images = np.asarray(structure.image, dtype=np.int64)
        self._closures: dict[bytes, frozenset] = {}
        self._conditions: dict[tuple, frozenset] = {}

    def span(self, x: int) -> frozenset:
        H = self.structure.target
        gens = conjugates_of(H, x, self.images)
        key = gens.tobytes()
        if key not in self._closures:
            self._closures[key] = naive_generated(H, (int(c) for c in gens))
        return self._closures[key]

    def condition(self, Sx: frozenset, Sy: frozenset, variant: str) -> frozenset:
        if variant == "t2":
            return Sx & Sy
        key = (id(Sx), id(Sy))
        if key not in self._conditions:
            self._conditions[key] = commutator_closure(self.structure.target, Sx, Sy)
        return self._conditions[key]


def naive_is_prime(structure, I: frozenset, variant: str, oracle=None) -> bool:
    """Elementwise definition: no pair outside I may have its divisor
    condition land inside I."""
    H = structure.target
    if len(I) == H.order:
        return False
    if oracle is None:
        oracle = SpanOracle(structure)
    spans = {id(S): S for x in range(H.order) if x not in I for S in [oracle.span(x)]}
    for Sx in spans.values():
        for Sy in spans.values():
            if oracle.condition(Sx, Sy, variant) <= I:
                return False
    return True


def naive_spectrum(structure, variant: str) -> list[frozenset]:
    G = structure.target
    candidates = [N for N in naive_normal_subgroups(G) if len(N) < G.order]
    oracle = SpanOracle(structure)
    return [N for N in candidates if naive_is_prime(structure, N, variant, oracle)]
