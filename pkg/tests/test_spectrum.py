import pytest

from groupspec.fingroup import (
    GroupError,
    Homomorphism,
    Subgroup,
    alternating,
    cyclic,
    direct_product,
    normal_subgroups,
    symmetric,
)
from groupspec.gobject import GGroup, identity_object
from groupspec.spectrum import (
    Ideal,
    irreducible_components,
    is_prime,
    point_radical,
    radical,
    spectrum,
    vanishing_set,
    whole_radical,
)

from oracles import naive_spectrum

Z2 = cyclic(2)
S3 = symmetric(3)
S5 = symmetric(5)
A5 = alternating(5)


def _prime_sets(spec):
    return [frozenset(P.members.members) for P in spec.primes]


def test_frozen_spectra_match_brute_force_oracle():
    cases = [
        (identity_object(Z2), "t1"),
        (identity_object(Z2), "t2"),
        (identity_object(S3), "t1"),
        (identity_object(A5), "t1"),
        (identity_object(S5), "t2"),
    ]
    for obj, variant in cases:
        assert _prime_sets(spectrum(obj, variant)) == naive_spectrum(obj.structure, variant)


def test_frozen_spectra_values():
    assert spectrum(identity_object(Z2), "t1").primes == ()
    assert _prime_sets(spectrum(identity_object(Z2), "t2")) == [frozenset({0})]
    assert spectrum(identity_object(S3), "t1").primes == ()
    assert _prime_sets(spectrum(identity_object(A5), "t1")) == [frozenset({0})]
    s = spectrum(identity_object(S5), "t2")
    assert [len(P.members) for P in s.primes] == [1, 60]
    assert s.specialization_edges() == [(0, 1)]


def test_spectrum_small_catalog_oracle():
    # every small catalog object, both variants, against the naive scan
    from groupspec.catalog import small_catalog

    for name, obj in small_catalog():
        for variant in ("t1", "t2"):
            assert _prime_sets(spectrum(obj, variant)) == naive_spectrum(
                obj.structure, variant
            ), (name, variant)


def test_nonidentity_structure_spectrum():
    transposition = next(x for x in range(120) if x != 0 and S5.mul[x][x] == 0)
    obj = GGroup(Z2, S5, Homomorphism(Z2, S5, [0, transposition]))
    for variant in ("t1", "t2"):
        assert _prime_sets(spectrum(obj, variant)) == naive_spectrum(obj.structure, variant)


def test_ideal_rejects_whole_and_non_normal():
    obj = identity_object(S3)
    with pytest.raises(GroupError):
        Ideal(obj, Subgroup(S3, range(6)))
    non_normal = next(
        Subgroup(S3, (0, x)) for x in range(1, 6) if not Subgroup(S3, (0, x)).is_normal()
    )
    with pytest.raises(GroupError):
        Ideal(obj, non_normal)


def test_closed_sets_form_topology():
    s = spectrum(identity_object(S5), "t2")
    closed = [c.member_indices for c in s.closed_sets()]
    allp = frozenset(range(len(s.primes)))
    assert frozenset() in closed and allp in closed
    for a in closed:
        for b in closed:
            assert a & b in closed
            assert a | b in closed


def test_vanishing_set_antitone():
    s = spectrum(identity_object(S5), "t2")
    subs = sorted(normal_subgroups(S5), key=len)
    for i, N in enumerate(subs):
        for M in subs[i:]:
            if frozenset(N.members) <= frozenset(M.members):
                assert vanishing_set(s, M).member_indices <= vanishing_set(s, N).member_indices


def test_radical_galois_connection():
    s = spectrum(identity_object(S5), "t2")
    for c in s.closed_sets():
        r = radical(s, c.member_indices)
        assert vanishing_set(s, r).member_indices == c.member_indices
    # empty set of primes has the whole carrier as radical
    assert len(radical(s, frozenset())) == 120
    assert len(whole_radical(s)) == 1
    # minimal open of the closed point contains the generic point too
    assert len(point_radical(s, 1)) == 1
    assert frozenset(point_radical(s, 0).members) == frozenset(s.primes[0].members.members)


def test_irreducible_components_disjoint_case():
    obj = identity_object(direct_product(A5, A5))
    s = spectrum(obj, "t1")
    comps = irreducible_components(s)
    assert len(comps) == 2
    assert all(generic is not None for _, generic in comps)
    assert {frozenset(c.member_indices) for c, _ in comps} == {frozenset({0}), frozenset({1})}


def test_minimal_open_and_specialization():
    s = spectrum(identity_object(S5), "t2")
    # the generic point {1} specializes to A5; its minimal open is itself
    assert s.minimal_open(0) == frozenset({0})
    assert s.minimal_open(1) == frozenset({0, 1})
    assert s.closure({0}) == frozenset({0, 1})


def test_prime_defs_agree_on_t1():
    for G in (Z2, S3, cyclic(4)):
        obj = identity_object(G)
        for N in normal_subgroups(G):
            if N.is_whole():
                continue
            I = Ideal(obj, N)
            assert is_prime(obj, I, "t1", "quotient") == is_prime(obj, I, "t1", "elementwise")


def test_prime_defs_diverge_on_t2_v4():
    V4 = direct_product(Z2, Z2)
    obj = identity_object(V4)
    diag = next(
        N for N in normal_subgroups(V4) if len(N) == 2 and all(x in (0, 3) for x in N.members)
    )
    I = Ideal(obj, diag)
    assert is_prime(obj, I, "t2", "quotient")
    assert not is_prime(obj, I, "t2", "elementwise")
