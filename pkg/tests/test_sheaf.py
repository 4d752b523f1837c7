import pytest

from groupspec.fingroup import (
    Homomorphism,
    alternating,
    cyclic,
    direct_product,
    normal_subgroups,
    quotient,
    Subgroup,
    symmetric,
)
from groupspec.gobject import GGroup, GMorphism, identity_object
from groupspec.spectrum import Ideal, quotient_object, spectrum
from groupspec.sheaf import (
    AffineScheme,
    SheafError,
    check_sheaf_axioms,
    embed_quotient,
    global_sections_vs_quotient,
    glue,
    induced_morphism,
    noetherian_sections,
    point_vanishing_ideal,
    restrictions_are_isomorphisms,
    scheme_hom_correspondence,
)

S5 = symmetric(5)
A5 = alternating(5)
Z2 = cyclic(2)


def _s5_scheme():
    return AffineScheme(spectrum(identity_object(S5, "S5"), "t2"))


def test_global_sections_of_s5():
    X = _s5_scheme()
    G = X.section_group(frozenset(X.points))
    assert len(G) == 120


def test_sections_over_generic_point_only():
    X = _s5_scheme()
    G = X.section_group(frozenset({0}))
    assert len(G) == 120


def test_stalks_bijective_for_s5():
    X = _s5_scheme()
    for p in X.points:
        group, report = X.stalk(p)
        assert report["surjective"] and report["injective"]
        from groupspec.spectrum import point_radical

        assert len(group) == quotient(S5, point_radical(X.spectrum, p)).table.order


def test_sheaf_axioms_on_catalog_examples():
    for obj, variant in [
        (identity_object(S5, "S5"), "t2"),
        (identity_object(A5, "A5"), "t1"),
        (identity_object(cyclic(4), "Z4"), "t2"),
    ]:
        report = check_sheaf_axioms(AffineScheme(spectrum(obj, variant)))
        assert report["minimal_covers"] > 0


def test_disjoint_components_product_sections():
    obj = identity_object(direct_product(A5, A5), "A5xA5")
    X = AffineScheme(spectrum(obj, "t1"))
    assert len(X.section_group(frozenset(X.points))) == 3600


def test_global_sections_vs_quotient_hypothesis():
    rep = global_sections_vs_quotient(spectrum(identity_object(S5, "S5"), "t2"))
    assert rep["hypothesis"] and rep["isomorphic"]
    rep = global_sections_vs_quotient(
        spectrum(identity_object(direct_product(A5, A5), "A5xA5"), "t1")
    )
    assert not rep["hypothesis"]


def test_restrictions_isomorphisms_irreducible():
    assert restrictions_are_isomorphisms(spectrum(identity_object(A5, "A5"), "t1"))
    with pytest.raises(SheafError):
        restrictions_are_isomorphisms(
            spectrum(identity_object(direct_product(A5, A5), "A5xA5"), "t1")
        )


def test_noetherian_sections_iso():
    for obj, variant in [
        (identity_object(S5, "S5"), "t2"),
        (identity_object(direct_product(A5, A5), "A5xA5"), "t1"),
    ]:
        rep = noetherian_sections(spectrum(obj, variant))
        assert rep["isomorphic_to_sections"], rep


def test_point_vanishing_ideal_is_prime_elementwise():
    X = _s5_scheme()
    G = X.section_group(frozenset(X.points))
    I = point_vanishing_ideal(G, 1)
    from groupspec.spectrum import is_prime

    assert is_prime(I.object, I, "t2", "elementwise")


def test_induced_morphism_quotient_s5():
    obj = identity_object(S5, "S5")
    a5 = next(N for N in normal_subgroups(S5) if len(N) == 60)
    qobj, q = quotient_object(obj, a5)
    m = induced_morphism(GMorphism(obj, qobj, q.projection), "t2")
    # the single prime of Spec(S5/A5) pulls back to A5, the closed point
    assert m.point_map == {0: 1}


def test_induced_morphism_z4_to_z2():
    Z4 = cyclic(4)
    obj = identity_object(Z4, "Z4")
    two = next(N for N in normal_subgroups(Z4) if len(N) == 2)
    qobj, q = quotient_object(obj, two)
    m = induced_morphism(GMorphism(obj, qobj, q.projection), "t2")
    assert m.point_map == {0: 1}


def test_induced_identity_is_identity():
    obj = identity_object(S5, "S5")
    m = induced_morphism(GMorphism(obj, obj, Homomorphism.identity(S5)), "t2")
    assert m.point_map == {p: p for p in m.point_map}


def test_embed_quotient_flags():
    obj = identity_object(S5, "S5")
    a5 = next(N for N in normal_subgroups(S5) if len(N) == 60)
    m, iso = embed_quotient(obj, Ideal(obj, a5), "t2")
    assert not iso  # A5 is not the radical of Spec2(S5)
    trivial = next(N for N in normal_subgroups(S5) if len(N) == 1)
    m, iso = embed_quotient(obj, Ideal(obj, trivial), "t2")
    assert iso
    prod = identity_object(direct_product(A5, A5), "A5xA5")
    triv2 = next(N for N in normal_subgroups(prod.carrier) if len(N) == 1)
    m, iso = embed_quotient(prod, Ideal(prod, triv2), "t1")
    assert iso  # here the radical is trivial


def test_glue_doubled_point():
    X1 = _s5_scheme()
    X2 = _s5_scheme()
    U = frozenset({0})
    D = glue(X1, X2, U, U)
    assert len(D.points) == 3
    assert len(D.section_group(frozenset(D.points))) == 120
    assert check_sheaf_axioms(D)["minimal_covers"] > 0


def test_glue_whole_gives_single_copy():
    X1 = _s5_scheme()
    X2 = _s5_scheme()
    whole = frozenset(X1.points)
    D = glue(X1, X2, whole, whole)
    assert len(D.points) == 2
    assert len(D.section_group(frozenset(D.points))) == 120


def test_glue_empty_gives_disjoint_union():
    X = AffineScheme(spectrum(identity_object(A5, "A5"), "t1"))
    D = glue(X, X, frozenset(), frozenset())
    assert len(D.points) == 2
    assert len(D.section_group(frozenset(D.points))) == 3600


def test_scheme_hom_correspondence_affine_and_glued():
    obj = identity_object(S5, "S5")
    X = _s5_scheme()
    rep = scheme_hom_correspondence(X, obj, "t2")
    assert rep["hom_count"] == 1 and rep["all_identity"]
    D = glue(_s5_scheme(), _s5_scheme(), frozenset({0}), frozenset({0}))
    rep = scheme_hom_correspondence(D, obj, "t2")
    assert rep["hom_count"] == 1 and rep["all_identity"]
    # the unique morphism collapses the doubled closed point
    pm = rep["Psi"](0).point_map
    assert pm[("L", 1)] == pm[("R", 1)]
