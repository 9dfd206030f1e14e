import pytest

import oracle
from lcgroups.config import CapExceeded, caps
from lcgroups.perm import Permutation, center, is_normal, subgroup_from_indices, subgroup_generated
from lcgroups.structure import (
    all_subgroups,
    big_omega,
    derived_series,
    fitting_subgroup,
    is_frobenius_with_kernel,
    is_nilpotent,
    is_regular_p_group,
    is_solvable,
    is_supersolvable,
    maximal_subgroups,
    mho,
    nilpotency_class,
    normal_subgroups,
    omega,
    p_core,
    prime_factors,
    quotient,
    sylow_subgroup,
    upper_central_series,
)

P = Permutation.from_cycles


def rotation(G):
    return subgroup_generated(G, [G.generators[0]])


def test_number_helpers():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []
    assert big_omega(360) == 6 and big_omega(1) == 0


def test_quotient_examples(group):
    D = group("Dih(8)")
    q = quotient(D, D.whole)
    assert q.image.order == 1
    Z = center(D)
    q = quotient(D, Z)
    assert (q.image.order, q.image.exponent) == (4, 2)
    assert q.pullback(q.image.trivial) == Z
    assert q.push(D.whole).order == 4


def test_quotient_rejects_non_normal(group):
    S3 = group("Sym(3)")
    with pytest.raises(ValueError):
        quotient(S3, subgroup_generated(S3, [P(3, [(0, 1)])]))


def test_quotient_is_homomorphism(group):
    G = group("prod(Sym(3),Cyc(2))")
    for N in normal_subgroups(G):
        q = quotient(G, N)
        f = q.forward_index
        assert q.image.order * N.order == G.order
        for i in range(0, G.order, 3):
            for j in range(G.order):
                assert f[G.mul(i, j)] == q.image.mul(f[i], f[j])
        assert {i for i in range(G.order) if f[i] == f[0]} == N.members


def test_upper_central_series(group):
    s = upper_central_series(group("Cyc(6)"))
    assert [T.order for T in s.terms] == [1, 6] and s.nilpotency_class == 1
    s = upper_central_series(group("Dih(8)"))
    assert [T.order for T in s.terms] == [1, 2, 8] and s.nilpotency_class == 2
    s = upper_central_series(group("Sym(3)"))
    assert not s.reaches_group and s.nilpotency_class is None


@pytest.mark.parametrize("spec", ["Dih(8)", "Dic(2)", "Heis(3)", "Wr(3)", "ElemAb(2,3)", "Cyc(16)"])
def test_p_groups_nilpotent(group, spec):
    assert is_nilpotent(group(spec))


def test_solvability(group):
    S3 = group("Sym(3)")
    assert not is_nilpotent(S3) and is_solvable(S3)
    assert [T.order for T in derived_series(S3)] == [6, 3, 1]
    assert not is_solvable(group("Alt(5)"))


@pytest.mark.parametrize("spec,expected", [
    ("Sym(3)", True), ("Alt(4)", False), ("Sym(4)", False), ("Dih(24)", True),
    ("Dic(3)", True), ("Cyc(1)", True), ("prod(Alt(4),Cyc(2))", False), ("Heis(3)", True),
])
def test_supersolvable(group, spec, expected):
    assert is_supersolvable(group(spec)) is expected


def test_sylow(group):
    D = group("Dih(8)")
    assert sylow_subgroup(D, 2).order == 8
    S4 = group("Sym(4)")
    assert sylow_subgroup(S4, 2).order == 8
    assert sylow_subgroup(S4, 3).order == 3
    S5 = group("Sym(5)")
    assert [sylow_subgroup(S5, p).order for p in (2, 3, 5)] == [8, 3, 5]


def test_fitting(group):
    assert fitting_subgroup(group("Dih(8)")).order == 8
    F = fitting_subgroup(group("Sym(4)"))
    assert F.order == 4 and is_normal(F.parent, F)
    assert fitting_subgroup(group("Sym(3)")).order == 3
    assert fitting_subgroup(group("Alt(5)")).order == 1
    assert p_core(group("Sym(4)"), 3).order == 1


def test_omega(group):
    D = group("Dih(8)")
    raw, sub = omega(D, 2, 0)
    assert len(raw) == 1 and sub.is_trivial
    raw, sub = omega(D, 2, 1)
    assert len(raw) == 6 and sub.order == 8
    Q = group("Dic(2)")
    raw, sub = omega(Q, 2, 1)
    assert len(raw) == 2 and sub.order == 2


def test_omega_inside_subgroup(group):
    D = group("Dih(8)")
    raw, sub = omega(rotation(D), 2, 1)
    assert len(raw) == 2 and sub.order == 2


def test_mho(group):
    D = group("Dih(8)")
    assert mho(D, 2, 0).order == 8
    M = mho(D, 2, 1)
    assert M.order == 2 and M == center(D)
    assert mho(group("ElemAb(3,3)"), 3, 1).is_trivial


def test_regularity(group):
    assert is_regular_p_group(group("Cyc(8)"), 2)
    assert is_regular_p_group(group("ElemAb(2,3)"), 2)
    assert not is_regular_p_group(group("Dih(8)"), 2)
    assert is_regular_p_group(group("Heis(3)"), 3)


def test_frobenius(group):
    A4 = group("Alt(4)")
    assert is_frobenius_with_kernel(A4, fitting_subgroup(A4))
    S3 = group("Sym(3)")
    assert is_frobenius_with_kernel(S3, fitting_subgroup(S3))
    D = group("Dih(8)")
    assert not is_frobenius_with_kernel(D, rotation(D))


def _oracle_subgroup_count(G):
    # every subgroup of these small groups is generated by at most two elements
    elems = [g.images for g in G.elements]
    subs = set()
    for a in elems:
        for b in elems:
            subs.add(frozenset(oracle.closure([a, b])))
    return len(subs)


@pytest.mark.parametrize("spec,count", [
    ("Cyc(5)", 2), ("Dih(8)", 10), ("Sym(3)", 6), ("Alt(4)", 10), ("Dic(2)", 6), ("Sym(4)", 30),
])
def test_subgroup_counts(group, spec, count):
    G = group(spec)
    assert len(all_subgroups(G)) == count == _oracle_subgroup_count(G)


def test_lattice_lists(group):
    D = group("Dih(8)")
    assert [N.order for N in normal_subgroups(D)] == [1, 2, 4, 4, 4, 8]
    assert sorted(M.order for M in maximal_subgroups(D)) == [4, 4, 4]
    assert len(all_subgroups(group("Alt(5)"))) == 59


def test_lattice_cap(group):
    G = group("prod(Sym(3),Cyc(2))")
    with caps(lattice=10):
        with pytest.raises(CapExceeded):
            all_subgroups(G)
