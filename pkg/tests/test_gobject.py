import pytest

from groupspec.fingroup import GroupError, Homomorphism, cyclic, direct_product, symmetric
from groupspec.freeprod import WordContext, parse_word
from groupspec.gobject import GGroup, GMorphism, enumerate_g_morphisms, identity_object

from oracles import SpanOracle


def test_identity_object_spans_are_normal_closures():
    S3 = symmetric(3)
    obj = identity_object(S3)
    oracle = SpanOracle(obj.structure)
    for x in range(6):
        assert frozenset(obj.g_span(x).members) == oracle.span(x)


def test_span_with_partial_structure():
    # base Z2 hits S3 only through one transposition; the span of a
    # 3-cycle under conjugation by {e, (12)} is the full A3
    Z2, S3 = cyclic(2), symmetric(3)
    transposition = next(x for x in range(6) if x != 0 and S3.mul[x][x] == 0)
    obj = GGroup(Z2, S3, Homomorphism(Z2, S3, [0, transposition]))
    three_cycle = next(x for x in range(6) if S3.mul[x][x] not in (0,) and S3.element_order(x) == 3)
    assert len(obj.g_span(three_cycle)) == 3
    oracle = SpanOracle(obj.structure)
    for x in range(6):
        assert frozenset(obj.g_span(x).members) == oracle.span(x)


def test_integrality_flags():
    # abelian carriers have commuting spans everywhere, so every element
    # is a T1 divisor; T2 needs two nontrivially-intersecting spans
    assert not identity_object(cyclic(2)).is_integral("t1")
    assert identity_object(cyclic(2)).is_integral("t2")
    assert not identity_object(symmetric(3)).is_integral("t1")
    assert identity_object(symmetric(3)).is_integral("t2")
    assert not identity_object(direct_product(cyclic(2), cyclic(2))).is_integral("t2")


def test_divisor_witness_consistency():
    for G in (cyclic(2), cyclic(3), symmetric(3), direct_product(cyclic(2), cyclic(2))):
        obj = identity_object(G)
        for variant in ("t1", "t2"):
            witnesses = [obj.divisor_witness(x, variant) for x in range(1, G.order)]
            any_divisor = any(w is not None for w in witnesses)
            assert any_divisor != obj.is_integral(variant)


def test_gmorphism_checks_commutation():
    Z4, Z2 = cyclic(4), cyclic(2)
    A = identity_object(Z4)
    proj = Homomorphism(Z4, Z2, [0, 1, 0, 1])
    B = GGroup(Z4, Z2, proj)
    GMorphism(A, B, proj)  # commutes
    with pytest.raises(GroupError):
        GMorphism(A, B, Homomorphism(Z4, Z2, [0, 0, 0, 0]))


def test_gmorphism_rejects_mismatched_base():
    A = identity_object(cyclic(4))
    B = identity_object(cyclic(2))
    with pytest.raises(GroupError):
        GMorphism(A, B, Homomorphism(cyclic(4), cyclic(2), [0, 1, 0, 1]))


def test_enumerate_g_morphisms_v4():
    # carrier V4 with structure hitting (1,0): endomorphisms fixing that
    # generator are free on the other, giving four morphisms
    Z2 = cyclic(2)
    V4 = direct_product(Z2, Z2)
    fixed = next(x for x in range(4) if x != 0)
    obj = GGroup(Z2, V4, Homomorphism(Z2, V4, [0, fixed]))
    homs = enumerate_g_morphisms(obj, obj)
    assert len(homs) == 4
    assert len({m.map.image for m in homs}) == 4
    for m in homs:
        assert m.map.image[fixed] == fixed


def test_enumerate_g_morphisms_identity_only():
    obj = identity_object(symmetric(3))
    homs = enumerate_g_morphisms(obj, obj)
    assert len(homs) == 1
    assert homs[0].map.image == tuple(range(6))


def test_evaluate_words_on_object():
    S3 = symmetric(3)
    obj = identity_object(S3)
    ctx = WordContext(S3, 1)
    word = parse_word(ctx, "X1^2")
    sq = {obj.evaluate(word, [x]) for x in range(6)}
    assert sq == {int(S3.mul[x][x]) for x in range(6)}
