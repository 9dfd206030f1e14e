import math

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracle
from lcgroups.constructors import direct_product, pair_element
from lcgroups.lcm import is_cp2, is_lcm_group, lcm_p_set, lcm_set, lcm_set_fast
from lcgroups.lcseries import lc_series
from lcgroups.perm import Permutation, conjugate_indices, enumerate_group, subgroup_from_indices
from lcgroups.structure import fitting_subgroup, is_nilpotent, normal_subgroups, prime_factors, quotient

perm5 = st.permutations(range(5)).map(Permutation)
gens = st.lists(perm5, min_size=1, max_size=3)
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SETTINGS
@given(gens)
def test_enumeration_matches_oracle(gs):
    G = enumerate_group(gs)
    assert oracle.images(G) == oracle.closure([g.images for g in gs], 5)


@SETTINGS
@given(gens)
def test_lcm_set_matches_oracle_and_fast_path(gs):
    G = enumerate_group(gs)
    L = lcm_set(G)
    assert {G.elements[i].images for i in L} == oracle.lcm_set(oracle.images(G))
    assert lcm_set_fast(G) == L


@SETTINGS
@given(gens)
def test_lcm_p_sets_are_conjugation_closed_p_generating(gs):
    G = enumerate_group(gs)
    for p in prime_factors(G.order):
        S = lcm_p_set(G, p)
        for g in G.gen_indices:
            assert set(conjugate_indices(G, S, g).tolist()) <= S
        assert prime_factors(subgroup_from_indices(G, S).order) in ([], [p])


@SETTINGS
@given(gens)
def test_lcm_set_is_normal_and_power_closed(gs):
    G = enumerate_group(gs)
    L = lcm_set(G)
    for x in L:
        assert set(G.cyclic_members(x)) <= L
    for g in G.gen_indices:
        assert set(conjugate_indices(G, L, g).tolist()) == L
    # LC(G) is nilpotent, hence inside the Fitting subgroup
    assert subgroup_from_indices(G, L).members <= fitting_subgroup(G).members


@SETTINGS
@given(gens)
def test_cp2_and_lcm_routes(gs):
    G = enumerate_group(gs)
    v = is_cp2(G)
    assert v.routes_agree and v.holds is oracle.cp2(oracle.images(G))
    assert is_lcm_group(G, "definition") is is_lcm_group(G, "sylow")


@SETTINGS
@given(gens)
def test_quotient_orders(gs):
    G = enumerate_group(gs)
    for N in normal_subgroups(G) if G.order <= 60 else []:
        q = quotient(G, N)
        assert q.image.order * N.order == G.order
        assert q.pullback(q.push(G.whole)) == G.whole


@SETTINGS
@given(gens)
def test_lc_series_terms_normal_nested(gs):
    G = enumerate_group(gs)
    r = lc_series(G)
    for a, b in zip(r.terms, r.terms[1:]):
        assert a.members < b.members
    if is_nilpotent(G):
        # nilpotent groups reach G and have nilpotent factors
        assert r.lc_nilpotent


small = st.lists(st.permutations(range(4)).map(Permutation), min_size=1, max_size=2)


@settings(max_examples=25, deadline=None)
@given(small, small)
def test_product_containment(g1, g2):
    A, B = enumerate_group(g1), enumerate_group(g2)
    T = direct_product(A, B)
    L = lcm_set(T)
    img = {T.index(pair_element(A.elements[a], B.elements[b])) for a in lcm_set(A) for b in lcm_set(B)}
    assert img <= L
    if math.gcd(A.exponent, B.exponent) == 1:
        assert img == L
