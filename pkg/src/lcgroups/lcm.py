"""LCM-sets, LC subgroups, the CP2 class and minimal non-LCM groups.

An element ``x`` is in ``LCM(G)`` when ``o(hy)`` divides ``lcm(o(h), o(y))``
for every ``h`` in ``<x>`` and every ``y`` in ``G``. Quantifying over
``h in <x>`` is the same as quantifying over all powers ``x^n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .perm import Element, FiniteGroup, Subgroup, conjugate_indices, subgroup_from_indices
from .structure import (
    all_subgroups,
    center,
    fitting_subgroup,
    frobenius_complement,
    is_nilpotent,
    is_normal_in,
    maximal_subgroups,
    mho,
    omega,
    p_elements,
    p_group_prime,
    p_part,
    power_index,
    prime_factors,
    quotient,
    regularity_witness,
    subgroups_of,
    sylow_subgroup,
)


class TheoremViolation(AssertionError):
    """Two computations that must agree did not."""


# -- membership -------------------------------------------------------------------

@dataclass(frozen=True)
class LcmMembershipWitness:
    """Outcome of testing ``x`` for LCM membership.

    On failure ``failing_h`` is a power of ``x`` and ``failing_y`` an element with
    ``o(hy)`` not dividing ``lcm(o(h), o(y))``; ``orders`` is ``(o(h), o(y), o(hy))``.
    """

    x: int
    failing_h: int | None = None
    failing_y: int | None = None
    orders: tuple[int, int, int] | None = None

    @property
    def member(self) -> bool:
        return self.failing_h is None

    def describe(self, G: FiniteGroup) -> dict:
        out = {"x": G.elements[self.x].cycle_string(), "member": self.member}
        if not self.member:
            out.update(h=G.elements[self.failing_h].cycle_string(),
                       y=G.elements[self.failing_y].cycle_string(),
                       orders=list(self.orders))
        return out


def _failures(G: FiniteGroup, p: int | None = None) -> np.ndarray:
    """``fail[h]`` = first partner ``y`` breaking divisibility for ``h`` (-1 if none).

    With ``p``, both ``h`` and ``y`` range over ``p``-elements only.
    """
    key = ("lcm_failures", p)
    if key not in G.cache:
        if p is None:
            mask = np.ones(G.order, dtype=np.uint8)
        else:
            mask = p_elements(G, p).astype(np.uint8)
        G.cache[key] = kernels.first_failures(G.table, G.orders, mask, mask)
    return G.cache[key]


def lcm_member(G: FiniteGroup, x: Element) -> LcmMembershipWitness:
    xi = G.index(x)
    fail = _failures(G)
    for h in sorted(G.cyclic_members(xi)):
        y = int(fail[h])
        if y >= 0:
            hy = G.mul(h, y)
            return LcmMembershipWitness(xi, h, y, (int(G.orders[h]), int(G.orders[y]), int(G.orders[hy])))
    return LcmMembershipWitness(xi)


def _closed_under_powers(G: FiniteGroup, good: np.ndarray, candidates) -> frozenset[int]:
    return frozenset(x for x in candidates if all(good[h] for h in G.cyclic_members(x)))


def lcm_set(G: FiniteGroup) -> frozenset[int]:
    """Indices of ``LCM(G)``, by exhaustive check against every ``y``."""
    if "lcm_set" not in G.cache:
        good = _failures(G) < 0
        G.cache["lcm_set"] = _closed_under_powers(G, good, range(G.order))
    return G.cache["lcm_set"]


def lc_subgroup(G: FiniteGroup) -> Subgroup:
    """``LC(G) = <LCM(G)>``."""
    if "lc_subgroup" not in G.cache:
        G.cache["lc_subgroup"] = subgroup_from_indices(G, lcm_set(G))
    return G.cache["lc_subgroup"]


def lcm_p_set(G: FiniteGroup, p: int, check: bool = True) -> frozenset[int]:
    """``p``-elements passing the LCM test against ``p``-elements only.

    With ``check``, also confirms the set is closed under conjugation and
    generates a ``p``-group, raising :class:`TheoremViolation` otherwise.
    """
    key = ("lcm_p_set", p)
    if key not in G.cache:
        pel = p_elements(G, p)
        good = (_failures(G, p) < 0) & pel
        G.cache[key] = _closed_under_powers(G, good, np.flatnonzero(pel).tolist())
    result = G.cache[key]
    if check:
        for g in G.gen_indices:
            if not set(conjugate_indices(G, result, g).tolist()) <= result:
                raise TheoremViolation(f"LCM_{p} set not closed under conjugation by {g}")
        gen = subgroup_from_indices(G, result)
        if gen.order > 1 and prime_factors(gen.order) != [p]:
            raise TheoremViolation(f"<LCM_{p}> has order {gen.order}, not a power of {p}")
    return result


def p_component(G: FiniteGroup, x: int, p: int) -> int:
    """``x_p`` in the unique factorization of ``x`` into commuting prime-power parts."""
    o = int(G.orders[x])
    q = p_part(o, p)
    m = o // q
    return power_index(G, x, m * pow(m, -1, q) % o if q > 1 else 0)


def lcm_set_fast(G: FiniteGroup) -> frozenset[int]:
    """``LCM(G)`` assembled from the prime-wise sets: ``x`` is accepted iff each
    of its prime-power components lies in the matching ``lcm_p_set``."""
    per_prime = {p: lcm_p_set(G, p, check=False) for p in prime_factors(G.order)}
    out = []
    for x in range(G.order):
        o = int(G.orders[x])
        if all(p_component(G, x, p) in per_prime[p] for p in prime_factors(o)):
            out.append(x)
    return frozenset(out)


# -- CP2 --------------------------------------------------------------------------

@dataclass(frozen=True)
class Cp2Verdict:
    """CP2 membership: ``o(xy) <= max(o(x), o(y))`` for all ``x != y``.

    ``holds`` comes from the pairwise definition; ``structural_route`` names the
    structural characterization that certified membership ("p-group",
    "frobenius") or "none", and ``routes_agree`` compares the two.
    """

    holds: bool
    counterexample: tuple[int, int, int, int, int] | None
    structural_route: str
    structural_holds: bool

    @property
    def routes_agree(self) -> bool:
        return self.holds == self.structural_holds


def cp2_counterexample(G: FiniteGroup) -> tuple[int, int, int, int, int] | None:
    key = "cp2_counterexample"
    if key not in G.cache:
        x, y = kernels.cp2_violation(G.table, G.orders)
        if x < 0:
            G.cache[key] = None
        else:
            o = G.orders
            G.cache[key] = (x, y, int(o[x]), int(o[y]), int(o[G.mul(x, y)]))
    return G.cache[key]


def omega_condition(G: FiniteGroup, p: int) -> bool:
    """Each ``{x : x^(p^n) = 1}`` is already a subgroup."""
    n = 0
    while p ** n < G.exponent:
        n += 1
        raw, sub = omega(G, p, n)
        if len(raw) != sub.order:
            return False
    return True


def cp2_structural(G: FiniteGroup) -> tuple[bool, str]:
    """CP2 via the structural dichotomy: a p-group whose Omega-sets are subgroups,
    or a Frobenius group of order p^a q^b (p < q) with kernel the Fitting
    subgroup of order p^a and a cyclic complement."""
    if G.order == 1:
        return True, "p-group"
    p = p_group_prime(G)
    if p is not None:
        return (True, "p-group") if omega_condition(G, p) else (False, "none")
    primes = prime_factors(G.order)
    if len(primes) != 2:
        return False, "none"
    small = primes[0]
    F = fitting_subgroup(G)
    if F.order != p_part(G.order, small):
        return False, "none"
    Q = frobenius_complement(G, F)
    if Q is None:
        return False, "none"
    cyclic = any(int(G.orders[q]) == Q.order for q in Q.members)
    return (True, "frobenius") if cyclic else (False, "none")


def is_cp2(G: FiniteGroup) -> Cp2Verdict:
    ce = cp2_counterexample(G)
    structural, route = cp2_structural(G)
    return Cp2Verdict(ce is None, ce, route, structural)


# -- LCM-groups -------------------------------------------------------------------

def lcm_group_by_definition(G: FiniteGroup) -> bool:
    return len(lcm_set(G)) == G.order


def lcm_group_by_sylows(G: FiniteGroup) -> bool:
    """Nilpotent with every Sylow subgroup in CP2."""
    if not is_nilpotent(G):
        return False
    return all(cp2_counterexample(sylow_subgroup(G, p).as_group) is None
               for p in prime_factors(G.order))


def is_lcm_group(G: FiniteGroup, route: str = "both") -> bool:
    """``route`` is "definition", "sylow" or "both" (which checks agreement)."""
    if route == "definition":
        return lcm_group_by_definition(G)
    if route == "sylow":
        return lcm_group_by_sylows(G)
    if route != "both":
        raise ValueError(f"unknown route {route!r}")
    a, b = lcm_group_by_definition(G), lcm_group_by_sylows(G)
    if a != b:
        raise TheoremViolation(f"LCM-group routes disagree on {G!r}: definition={a}, sylow={b}")
    return a


# -- minimal non-LCM groups -------------------------------------------------------

@dataclass
class NlcmReport:
    """Result of :func:`nlcm_check`.

    ``checks`` holds the structural assertions made about a minimal non-LCM
    group (empty unless ``is_nlcm``); ``details`` records the witnesses.
    """

    is_nlcm: bool
    reason: str
    p: int | None = None
    failing_section: tuple[int, int] | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)
    minimal_irregular: bool | None = None

    @property
    def structure_holds(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {
            "is_nlcm": self.is_nlcm,
            "reason": self.reason,
            "p": self.p,
            "failing_section": list(self.failing_section) if self.failing_section else None,
            "checks": dict(self.checks),
            "details": dict(self.details),
            "minimal_irregular": self.minimal_irregular,
        }


def _section_is_lcm(G: FiniteGroup, S: Subgroup, N: Subgroup) -> bool:
    SG = S.as_group
    if N.is_trivial:
        return lcm_group_by_definition(SG)
    members = frozenset(SG.index(G.elements[i]) for i in N.members)
    gens = tuple(SG.index(G.elements[i]) for i in N.gens)
    return lcm_group_by_definition(quotient(SG, Subgroup(SG, members, gens)).image)


def failing_section(G: FiniteGroup) -> tuple[Subgroup, Subgroup] | None:
    """First proper section ``S/N`` that is not an LCM-group, if any.

    Proper subgroups are tried first (largest first), then their quotients,
    then the quotients of ``G`` itself.
    """
    lattice = all_subgroups(G)
    proper = [S for S in reversed(lattice) if S.order < G.order]
    for S in proper:
        if not _section_is_lcm(G, S, G.trivial):
            return S, G.trivial
    for S in proper:
        for N in subgroups_of(G, S):
            if N.is_trivial or N.order == S.order or not is_normal_in(G, N, S):
                continue
            if not _section_is_lcm(G, S, N):
                return S, N
    for N in lattice:
        if N.is_trivial or N.order == G.order or not is_normal_in(G, N, G.whole):
            continue
        if not _section_is_lcm(G, G.whole, N):
            return G.whole, N
    return None


def nlcm_check(G: FiniteGroup) -> NlcmReport:
    """Whether ``G`` is a minimal non-LCM group, with its structure report."""
    if lcm_group_by_definition(G):
        return NlcmReport(False, "lcm-group")
    bad = failing_section(G)
    if bad is not None:
        S, N = bad
        return NlcmReport(False, "non-lcm proper section", failing_section=(S.order, N.order))
    p = p_group_prime(G)
    report = NlcmReport(True, "minimal", p=p)
    if p is None:
        report.checks["not_nilpotent"] = not is_nilpotent(G)
        report.checks["maximal_subgroups_nilpotent"] = all(
            is_nilpotent(M.as_group) for M in maximal_subgroups(G))
        return report
    _p_group_structure(G, p, report)
    return report


def _p_group_structure(G: FiniteGroup, p: int, report: NlcmReport) -> None:
    maximals = maximal_subgroups(G)
    split = None
    for H in maximals:
        if H.exponent != p:
            continue
        u = next((u for u in range(G.order) if u not in H.members and int(G.orders[u]) == p), None)
        if u is not None:
            split = (H, u)
            break
    report.checks["exponent_p_maximal_with_complement"] = split is not None
    if split:
        report.details["H_order"] = split[0].order
        report.details["u"] = G.elements[split[1]].cycle_string()

    raw, generated = omega(G, p, 1)
    report.checks["omega1_is_G_but_not_the_set"] = generated.order == G.order and len(raw) < G.order
    report.details["omega1_set_size"] = len(raw)

    pair = None
    for i in range(1, G.order):
        for j in range(i + 1, G.order):
            if subgroup_from_indices(G, [i, j]).order == G.order:
                pair = (i, j)
                break
        if pair:
            break
    report.checks["two_generated"] = pair is not None
    if pair:
        report.details["generating_pair"] = [G.elements[k].cycle_string() for k in pair]

    Z = center(G)
    mho1 = mho(G, p, 1)
    exp_quot = quotient(G, Z).image.exponent
    report.details.update(center_order=Z.order, mho1_order=mho1.order, exp_G_mod_Z=exp_quot)
    report.checks["center_mho_exponent_all_p"] = Z.order == mho1.order == exp_quot == p

    irregular = regularity_witness(G, p) is not None
    report.minimal_irregular = irregular and all(
        regularity_witness(M.as_group, p) is None for M in maximals)
