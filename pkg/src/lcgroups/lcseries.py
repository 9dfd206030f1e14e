"""LC-series, LC-nilpotency class, and series normal in an ambient group."""
from __future__ import annotations

from dataclasses import dataclass

from .lcm import TheoremViolation, lc_subgroup
from .perm import FiniteGroup, Subgroup, is_normal
from .structure import (
    prime_order_normal_subgroup,
    big_omega,
    is_nilpotent,
    nilpotency_class,
    p_group_prime,
    quotient,
)


@dataclass(frozen=True)
class LcSeriesResult:
    """``1 = LC_0 <= LC_1 <= ...``, each term materialized in the original group."""

    group: FiniteGroup
    terms: tuple[Subgroup, ...]
    factors_nilpotent: tuple[bool, ...]
    terminated_at_G: bool

    @property
    def lc_class(self) -> int | None:
        return len(self.terms) - 1 if self.terminated_at_G else None

    @property
    def lc_nilpotent(self) -> bool:
        return self.terminated_at_G and all(self.factors_nilpotent)

    @property
    def orders(self) -> list[int]:
        return [T.order for T in self.terms]

    def term(self, i: int) -> Subgroup:
        """``LC_i``; past the end this is the last term reached."""
        return self.terms[min(i, len(self.terms) - 1)]


def lc_series(G: FiniteGroup) -> LcSeriesResult:
    """Iterate ``LC_i / LC_{i-1} = LC(G / LC_{i-1})`` until reaching ``G`` or stalling.

    A stall (trivial LC subgroup in a nontrivial quotient) means the series
    can never reach ``G``.
    """
    if "lc_series" in G.cache:
        return G.cache["lc_series"]
    terms = [G.trivial]
    factors: list[bool] = []
    while terms[-1].order < G.order:
        q = quotient(G, terms[-1])
        L = lc_subgroup(q.image)
        if L.is_trivial:
            break
        nxt = q.pullback(L)
        if q.push(nxt) != L:
            raise TheoremViolation("pullback of LC does not map onto LC of the quotient")
        if not is_normal(G, nxt):
            raise TheoremViolation(f"LC_{len(terms)} is not normal")
        factors.append(is_nilpotent(L.as_group))
        terms.append(nxt)
    result = LcSeriesResult(G, tuple(terms), tuple(factors), terms[-1].order == G.order)
    G.cache["lc_series"] = result
    return result


@dataclass(frozen=True)
class ClassBound:
    p: int
    nilpotency_class: int
    bound: int
    lc_class: int | None

    @property
    def holds(self) -> bool:
        return self.lc_class is not None and self.lc_class <= self.bound


def lc_class_bound(G: FiniteGroup) -> ClassBound:
    """LC-class of a p-group against ``floor(t / (p - 1)) + 1``, ``t`` the nilpotency class."""
    p = p_group_prime(G)
    if p is None:
        raise ValueError(f"order {G.order} is not a prime power")
    t = nilpotency_class(G)
    return ClassBound(p, t, t // (p - 1) + 1, lc_series(G).lc_class)


def lc_class_bound_check(G: FiniteGroup) -> bool:
    return lc_class_bound(G).holds


@dataclass(frozen=True)
class GInvariantSeries:
    """``1 = N_0 < ... < N_k`` with every term normal in ``ambient`` and prime indices."""

    ambient: FiniteGroup
    terms: tuple[Subgroup, ...]

    def validate(self) -> None:
        H = self.ambient
        if not self.terms or not self.terms[0].is_trivial:
            raise ValueError("series must start at the trivial subgroup")
        for i, N in enumerate(self.terms):
            if N.parent is not H or not is_normal(H, N):
                raise ValueError(f"term {i} is not normal in the ambient group")
            if i and (not self.terms[i - 1].members < N.members
                      or big_omega(N.order // self.terms[i - 1].order) != 1):
                raise ValueError(f"index of term {i - 1} in term {i} is not prime")


def find_h_supersolvable_series(H: FiniteGroup, G: Subgroup) -> GInvariantSeries | None:
    """Greedy chain of ``H``-normal subgroups through ``G`` with prime-order steps.

    Any ``H``-normal subgroup of prime order can start such a chain if one exists
    at all, so the greedy choice never loses a solution.
    """
    if not is_normal(H, G):
        raise ValueError("G is not normal in H")
    terms = [H.trivial]
    while terms[-1].order < G.order:
        q = quotient(H, terms[-1])
        C = prime_order_normal_subgroup(q.image, inside=q.push(G))
        if C is None:
            return None
        terms.append(q.pullback(C))
    return GInvariantSeries(H, tuple(terms))


def verify_series_containment(H: FiniteGroup, series: GInvariantSeries) -> bool:
    """Whether ``N_i <= LC_i(H)`` for every term of the series."""
    series.validate()
    lc = lc_series(H)
    return all(N.members <= lc.term(i).members for i, N in enumerate(series.terms))
