import pytest

from lcgroups.lcseries import (
    GInvariantSeries,
    find_h_supersolvable_series,
    lc_class_bound,
    lc_class_bound_check,
    lc_series,
    verify_series_containment,
)
from lcgroups.perm import is_normal
from lcgroups.structure import big_omega, fitting_subgroup, is_supersolvable, quotient


@pytest.mark.parametrize("spec,orders", [
    ("Alt(4)", [1, 4, 12]),
    ("Dih(8)", [1, 4, 8]),
    ("Wr(2)", [1, 4, 8]),
    ("Wr(3)", [1, 81]),
    ("Heis(3)", [1, 27]),
    ("Sym(3)", [1, 3, 6]),
    ("Dic(3)", [1, 6, 12]),
    ("prod(Alt(4),Cyc(2))", [1, 8, 24]),
    ("prod(Dih(8),Dih(8))", [1, 64]),
    ("Alt(5)", [1]),
    ("Sym(4)", [1]),
])
def test_series_orders(group, spec, orders):
    assert lc_series(group(spec)).orders == orders


def test_a4_series(group):
    r = lc_series(group("Alt(4)"))
    assert r.lc_class == 2 and r.factors_nilpotent == (True, True) and r.lc_nilpotent


def test_a5_stalls(group):
    r = lc_series(group("Alt(5)"))
    assert r.term(1).is_trivial
    assert not r.terminated_at_G and r.lc_class is None and not r.lc_nilpotent


def test_terms_are_normal_and_nested(group):
    G = group("Dih(24)")
    r = lc_series(G)
    for a, b in zip(r.terms, r.terms[1:]):
        assert a.members < b.members and is_normal(G, b)
        assert quotient(G, a).push(b).order == b.order // a.order


def test_class_bound(group):
    b = lc_class_bound(group("Heis(3)"))
    assert (b.p, b.nilpotency_class, b.bound, b.lc_class) == (3, 2, 2, 1)
    b = lc_class_bound(group("Dih(8)"))
    assert (b.nilpotency_class, b.bound, b.lc_class) == (2, 3, 2) and b.holds
    b = lc_class_bound(group("Wr(3)"))
    assert (b.nilpotency_class, b.bound) == (3, 2)
    assert lc_class_bound_check(group("Wr(3)"))


def test_class_bound_needs_p_group(group):
    with pytest.raises(ValueError):
        lc_class_bound(group("Sym(3)"))


def test_h_series_abelian(group):
    G = group("Cyc(12)")
    s = find_h_supersolvable_series(G, G.whole)
    assert len(s.terms) - 1 == big_omega(12)
    s.validate()


def test_h_series_examples(group):
    S3 = group("Sym(3)")
    s = find_h_supersolvable_series(S3, fitting_subgroup(S3))
    assert [T.order for T in s.terms] == [1, 3]
    assert verify_series_containment(S3, s)
    A4 = group("Alt(4)")
    assert find_h_supersolvable_series(A4, fitting_subgroup(A4)) is None


def test_trivial_series(group):
    G = group("Sym(3)")
    assert verify_series_containment(G, GInvariantSeries(G, (G.trivial,)))


def test_series_validation(group):
    G = group("Sym(3)")
    with pytest.raises(ValueError):
        GInvariantSeries(G, (G.whole,)).validate()
    with pytest.raises(ValueError):
        GInvariantSeries(G, (G.trivial, G.whole)).validate()


@pytest.mark.parametrize("spec", ["Sym(3)", "Dih(24)", "Dic(5)", "prod(Sym(3),Cyc(5))", "Dih(30)", "Heis(3)"])
def test_supersolvable_groups_full_series(group, spec):
    G = group(spec)
    assert is_supersolvable(G)
    s = find_h_supersolvable_series(G, G.whole)
    assert s is not None and verify_series_containment(G, s)
    assert lc_series(G).lc_nilpotent


def test_maxclass81_is_sharp_for_p3():
    import oracle
    from lcgroups.harness.corpus import fixture_path
    from lcgroups.harness.groupfile import load_group_file

    G = load_group_file(fixture_path("maxclass81.txt"))
    b = lc_class_bound(G)
    assert (G.order, b.p, b.nilpotency_class, b.bound, b.lc_class) == (81, 3, 3, 2, 2)
    assert lc_series(G).orders == [1, 27, 81]
    E = oracle.images(G)
    L = oracle.lcm_set(E)
    assert len(L) == 27 and len(oracle.closure(list(L), 27)) == 27


def test_wreath3_has_class_one():
    # C3 wr C3 is not the sharp example at p = 3: its LCM set already generates it
    import oracle
    from lcgroups.constructors import build_group

    W = build_group("Wr(3)")
    assert lc_series(W).lc_class == 1
    L = oracle.lcm_set(oracle.images(W))
    assert len(L) == 45 and len(oracle.closure(list(L), 9)) == 81
