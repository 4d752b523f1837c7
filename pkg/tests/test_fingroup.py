import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from groupspec.fingroup import (
    GroupError,
    Homomorphism,
    Subgroup,
    alternating,
    commutator_subgroup,
    cyclic,
    dihedral,
    direct_product,
    is_nilpotent,
    normal_closure,
    normal_subgroups,
    parse_cayley_text,
    quaternion8,
    quotient,
    subgroup_product,
    symmetric,
)

from oracles import naive_generated, naive_is_normal, naive_normal_subgroups

SMALL = [cyclic(2), cyclic(6), symmetric(3), dihedral(4), quaternion8(), alternating(4)]


def test_constructor_orders():
    assert cyclic(5).order == 5
    assert symmetric(4).order == 24
    assert alternating(4).order == 12
    assert dihedral(6).order == 12
    assert quaternion8().order == 8
    assert direct_product(cyclic(2), symmetric(3)).order == 12


def test_group_axioms():
    for G in SMALL:
        e = G.id
        xs = range(G.order)
        assert all(G.mul[e][x] == x and G.mul[x][e] == x for x in xs)
        assert all(G.mul[x][G.inv[x]] == e for x in xs)
        m = np.asarray(G.mul)
        # (xy)z == x(yz), full table check
        assert np.array_equal(m[m, :], m[:, m])


def test_normal_closure_against_oracle():
    for G in SMALL:
        for x in range(min(G.order, 8)):
            N = normal_closure(G, (x,))
            gens = {int(G.mul[G.mul[g][x]][G.inv[g]]) for g in range(G.order)}
            assert frozenset(N.members) == naive_generated(G, gens)
            assert naive_is_normal(G, frozenset(N.members))


def test_normal_subgroups_against_oracle():
    for G in SMALL:
        got = sorted(frozenset(N.members) for N in normal_subgroups(G))
        assert sorted(got) == sorted(naive_normal_subgroups(G))


def test_commutator_subgroup_known():
    S3 = symmetric(3)
    D = commutator_subgroup(S3, Subgroup(S3, range(6)), Subgroup(S3, range(6)))
    assert len(D) == 3
    Q = quaternion8()
    D = commutator_subgroup(Q, Subgroup(Q, range(8)), Subgroup(Q, range(8)))
    assert len(D) == 2
    A5 = alternating(5)
    D = commutator_subgroup(A5, Subgroup(A5, range(60)), Subgroup(A5, range(60)))
    assert len(D) == 60


def test_quotient_s3_by_a3():
    S3 = symmetric(3)
    A3 = next(N for N in normal_subgroups(S3) if len(N) == 3)
    q = quotient(S3, A3)
    assert q.table.order == 2
    # projection is a homomorphism
    q.projection.verify()


def test_quotient_rejects_non_normal():
    S3 = symmetric(3)
    H = next(
        Subgroup(S3, (0, x))
        for x in range(1, 6)
        if S3.mul[x][x] == 0 and not Subgroup(S3, (0, x)).is_normal()
    )
    with pytest.raises(GroupError):
        quotient(S3, H)


def test_subgroup_product():
    Z6 = cyclic(6)
    A = Subgroup(Z6, (0, 2, 4))
    B = Subgroup(Z6, (0, 3))
    assert subgroup_product(Z6, A, B).members == tuple(range(6))


def _whole(G) -> Subgroup:
    return Subgroup(G, range(G.order))


def test_nilpotency():
    assert is_nilpotent(_whole(cyclic(8)))
    assert is_nilpotent(_whole(quaternion8()))
    assert is_nilpotent(_whole(dihedral(4)))
    assert not is_nilpotent(_whole(symmetric(3)))
    assert not is_nilpotent(_whole(alternating(4)))


def _sylow_normal_oracle(G) -> bool:
    # nilpotent iff every Sylow subgroup is normal; brute-forced from all
    # subgroups generated by subsets of bounded size
    n = G.order
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    for p in primes:
        pp = 1
        while n % (pp * p) == 0:
            pp *= p
        # find one Sylow p-subgroup by closing p-elements greedily
        members = {G.id}
        for x in range(n):
            cand = naive_generated(G, members | {x})
            if len(cand) <= pp and pp % len(cand) == 0:
                members = set(cand)
        if len(members) != pp:
            continue
        if not naive_is_normal(G, frozenset(members)):
            return False
    return True


def test_nilpotency_against_sylow_oracle():
    for G in SMALL:
        assert is_nilpotent(_whole(G)) == _sylow_normal_oracle(G)


def test_homomorphism_compose_and_verify():
    Z4 = cyclic(4)
    Z2 = cyclic(2)
    f = Homomorphism(Z4, Z2, [0, 1, 0, 1])
    f.verify()
    g = Homomorphism.identity(Z2)
    assert f.compose(g).image == f.image
    with pytest.raises(GroupError):
        Homomorphism(Z4, Z2, [0, 1, 1, 0]).verify()


def test_parse_cayley_roundtrip():
    G = symmetric(3)
    text = "order 6\n" + "\n".join(" ".join(str(int(x)) for x in row) for row in G.mul)
    H = parse_cayley_text(text)
    assert H.order == 6
    assert np.array_equal(np.asarray(H.mul), np.asarray(G.mul))


@given(st.integers(0, 7), st.integers(0, 7))
@settings(max_examples=50, deadline=None)
def test_inverse_antihomomorphism(x, y):
    G = quaternion8()
    assert G.inv[G.mul[x][y]] == G.mul[G.inv[y]][G.inv[x]]


@given(st.sets(st.integers(0, 23), max_size=3))
@settings(max_examples=30, deadline=None)
def test_normal_closure_minimality(gens):
    G = symmetric(4)
    N = frozenset(normal_closure(G, tuple(gens)).members)
    assert naive_is_normal(G, N)
    assert gens <= N
    for M in naive_normal_subgroups(G):
        if gens <= M:
            assert N <= M
