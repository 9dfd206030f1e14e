"""Theorem campaigns: each checks one claim over every applicable corpus group."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

from .. import __version__, kernels
from ..config import CapExceeded, current_caps
from ..constructors import Product, build_group, direct_product, dihedral, pair_element, alternating
from ..lcm import (
    TheoremViolation,
    cp2_counterexample,
    is_cp2,
    lc_subgroup,
    lcm_group_by_definition,
    lcm_group_by_sylows,
    lcm_member,
    lcm_p_set,
    lcm_set,
    lcm_set_fast,
    nlcm_check,
)
from ..lcseries import (
    find_h_supersolvable_series,
    lc_class_bound,
    lc_series,
    verify_series_containment,
)
from ..perm import FiniteGroup, Subgroup, center, conjugate_indices, subgroup_from_indices
from ..structure import (
    big_omega,
    derived_subgroup,
    fitting_subgroup,
    is_supersolvable,
    omega,
    p_elements,
    p_group_prime,
    prime_factors,
    quotient,
    sylow_subgroup,
    upper_central_term,
)
from .corpus import CorpusEntry, default_corpus, filter_corpus


@dataclass
class Outcome:
    passed: bool
    witness: dict | None = None
    info: dict | None = None


Check = Callable[[CorpusEntry, FiniteGroup], Outcome]


@dataclass(frozen=True)
class Campaign:
    id: str
    claim: str
    tag: str = "all"
    check: Check | None = None
    applies: Callable[[FiniteGroup], bool] | None = None
    examples: Callable[[], list[tuple[str, Outcome]]] | None = None


@dataclass
class Row:
    campaign: str
    group: str
    verdict: str
    witness: dict | None = None
    info: dict | None = None
    wall_time: float = 0.0

    def as_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "group": self.group,
            "verdict": self.verdict,
            "witness": self.witness,
            "info": self.info,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass
class CampaignReport:
    campaign: str
    rows: list[Row] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skipped": 0, "error": 0}
        for r in self.rows:
            key = r.verdict.split(":")[0]
            counts[key] = counts.get(key, 0) + 1
        counts["total"] = len(self.rows)
        return counts

    @property
    def passed(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["error"] == 0

    def as_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "engine": {"name": "lcgroups", "version": __version__, "backend": kernels.BACKEND},
            "caps": current_caps().as_dict(),
            "groups": [r.as_dict() for r in self.rows],
            "summary": self.summary,
        }


def _cyc(G: FiniteGroup, i: int) -> str:
    return G.elements[i].cycle_string()


# -- checks ---------------------------------------------------------------------

def check_thm_cp2(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    a, b = lcm_group_by_definition(G), lcm_group_by_sylows(G)
    info = {"lcm_group": a}
    if a == b:
        return Outcome(True, info=info)
    witness = {"definition": a, "sylow_route": b}
    outside = sorted(set(range(G.order)) - lcm_set(G))
    if outside:
        witness["non_member"] = lcm_member(G, outside[0]).describe(G)
    return Outcome(False, witness, info)


def check_thm_a(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    v = is_cp2(G)
    info = {"cp2": v.holds, "route": v.structural_route}
    if v.routes_agree:
        return Outcome(True, info=info)
    witness = {"definition": v.holds, "structural": v.structural_holds}
    if v.counterexample:
        x, y, ox, oy, oxy = v.counterexample
        witness.update(x=_cyc(G, x), y=_cyc(G, y), orders=[ox, oy, oxy])
    return Outcome(False, witness, info)


def check_prop_equ(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    slow, fast = lcm_set(G), lcm_set_fast(G)
    if slow != fast:
        x = min(slow ^ fast)
        return Outcome(False, {"element": _cyc(G, x), "in_definition_set": x in slow})
    for p in prime_factors(G.order):
        pel = set(p_elements(G, p).nonzero()[0].tolist())
        lp = lcm_p_set(G, p, check=False)
        if lp != slow & pel:
            x = min(lp ^ (slow & pel))
            return Outcome(False, {"prime": p, "element": _cyc(G, x), "in_lcm_p": x in lp})
    # commuting members of coprime order multiply into LCM(G)
    t, o = G.table, G.orders
    members = sorted(slow)
    for x in members:
        for y in members:
            if t[x, y] == t[y, x] and math.gcd(int(o[x]), int(o[y])) == 1 and int(t[x, y]) not in slow:
                return Outcome(False, {"coprime_pair": [_cyc(G, x), _cyc(G, y)]})
    return Outcome(True, info={"lcm_size": len(slow)})


def check_lemma_ces(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    sizes = {}
    for p in prime_factors(G.order):
        try:
            lp = lcm_p_set(G, p, check=True)
        except TheoremViolation as exc:
            return Outcome(False, {"prime": p, "violation": str(exc)})
        for g in range(G.order):
            if not set(conjugate_indices(G, lp, g).tolist()) <= lp:
                return Outcome(False, {"prime": p, "conjugator": _cyc(G, g)})
        sizes[str(p)] = subgroup_from_indices(G, lp).order
    return Outcome(True, info={"generated_orders": sizes})


def check_lemma_a2(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    p = p_group_prime(G)
    raw, omega1 = omega(G, p, 1)
    if len(raw) != omega1.order:
        return Outcome(True, info={"hypothesis": False})
    top = quotient(G, omega1).image
    if cp2_counterexample(top) is not None:
        return Outcome(True, info={"hypothesis": False})
    ce = cp2_counterexample(G)
    if ce is None:
        return Outcome(True, info={"hypothesis": True})
    x, y, ox, oy, oxy = ce
    return Outcome(False, {"x": _cyc(G, x), "y": _cyc(G, y), "orders": [ox, oy, oxy]})


def check_lemma_ccc(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    p = p_group_prime(G)
    raw = frozenset(x for x in lcm_set(G) if p % int(G.orders[x]) == 0)
    gen = subgroup_from_indices(G, raw)
    extra = gen.members - raw
    if extra:
        return Outcome(False, {"element": _cyc(G, min(extra)), "order": int(G.orders[min(extra)])})
    return Outcome(True, info={"omega1_lcm_size": len(raw)})


def check_prop_pro(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    root = entry.spec.root
    left, right = build_group(str(root.left)), build_group(str(root.right))
    target = lcm_set(G)
    image = set()
    for g in lcm_set(left):
        for h in lcm_set(right):
            k = G.index(pair_element(left.elements[g], right.elements[h]))
            image.add(k)
            if k not in target:
                return Outcome(False, {"g": _cyc(left, g), "h": _cyc(right, h)})
    coprime = math.gcd(left.exponent, right.exponent) == 1
    info = {"coprime_exponents": coprime, "product_of_sets": len(image), "lcm_of_product": len(target)}
    if coprime and image != target:
        x = min(target - image)
        return Outcome(False, {"extra_member": _cyc(G, x)}, info)
    return Outcome(True, info=info)


def check_cor_42(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    fit = fitting_subgroup(G)
    L = lcm_set(G)
    used = []
    for p in prime_factors(G.order):
        if cp2_counterexample(sylow_subgroup(G, p).as_group) is not None:
            continue
        used.append(p)
        P = fit.from_group_indices(sylow_subgroup(fit.as_group, p).members)
        missing = P - L
        if missing:
            x = min(missing)
            return Outcome(False, {"prime": p, "element": _cyc(G, x),
                                   "membership": lcm_member(G, x).describe(G)})
    return Outcome(True, info={"cp2_sylow_primes": used})


def check_thm_min(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    report = nlcm_check(G)
    info = {"is_nlcm": report.is_nlcm, "reason": report.reason}
    if report.is_nlcm and report.p is not None:
        info["minimal_irregular"] = report.minimal_irregular
    if report.is_nlcm and not report.structure_holds:
        return Outcome(False, report.as_dict(), info)
    return Outcome(True, info=info)


def check_lemma_zp(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    p = p_group_prime(G)
    Z = upper_central_term(G, p - 1)
    missing = Z.members - lcm_set(G)
    if missing:
        return Outcome(False, lcm_member(G, min(missing)).describe(G))
    return Outcome(True, info={"p": p, "z_order": Z.order})


def check_thm_222(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    b = lc_class_bound(G)
    info = {"p": b.p, "nilpotency_class": b.nilpotency_class, "bound": b.bound, "lc_class": b.lc_class}
    if b.holds:
        return Outcome(True, info=info)
    return Outcome(False, {"lc_series": lc_series(G).orders}, info)


def check_thm_5(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    candidates: dict[frozenset[int], tuple[str, Subgroup]] = {}
    for label, N in (("whole", G.whole), ("fitting", fitting_subgroup(G)), ("lc", lc_subgroup(G)),
                     ("center", center(G)), ("derived", derived_subgroup(G))):
        candidates.setdefault(N.members, (label, N))
    found = []
    for label, N in candidates.values():
        series = find_h_supersolvable_series(G, N)
        if series is None:
            continue
        found.append(label)
        if not verify_series_containment(G, series):
            lc = lc_series(G)
            bad = next(i for i, T in enumerate(series.terms) if not T.members <= lc.term(i).members)
            return Outcome(False, {"subgroup": label, "series": [T.order for T in series.terms],
                                   "lc_series": lc.orders, "first_bad_term": bad})
    return Outcome(True, info={"series_found": found})


def _cor7_applies(G: FiniteGroup) -> bool:
    return big_omega(G.order) <= 3 or is_supersolvable(G)


def check_cor_7(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    r = lc_series(G)
    info = {"supersolvable": is_supersolvable(G), "lc_series": r.orders}
    if r.lc_nilpotent:
        return Outcome(True, info=info)
    return Outcome(False, {"lc_series": r.orders, "factors_nilpotent": list(r.factors_nilpotent)}, info)


def check_lc_factors(entry: CorpusEntry, G: FiniteGroup) -> Outcome:
    r = lc_series(G)
    info = {"lc_series": r.orders, "lc_class": r.lc_class}
    if r.terminated_at_G and not all(r.factors_nilpotent):
        return Outcome(False, {"factors_nilpotent": list(r.factors_nilpotent)}, info)
    return Outcome(True, info=info)


# -- worked examples -------------------------------------------------------------

@dataclass(frozen=True)
class D8Pair:
    """``T = <x, y> x <a, b>`` with two dihedral groups of order 8.

    ``x``/``a`` are the rotations (order 4) and ``y``/``b`` the reflections.
    """

    D: FiniteGroup
    T: FiniteGroup
    x: int
    y: int
    a: int
    b: int

    @classmethod
    def build(cls) -> "D8Pair":
        D = dihedral(8)
        T = direct_product(D, D)
        r, s = D.generators
        e = D.identity
        return cls(D, T, T.index(pair_element(r, e)), T.index(pair_element(s, e)),
                   T.index(pair_element(e, r)), T.index(pair_element(e, s)))

    @property
    def xya(self) -> int:
        return self.T.mul(self.T.mul(self.x, self.y), self.a)


def worked_examples() -> list[tuple[str, Outcome]]:
    out = []

    D = dihedral(8)
    r = D.index(D.generators[0])
    lc = lc_subgroup(D)
    ok = lc.members == frozenset(D.cyclic_members(r)) and int(D.orders[r]) == 4
    out.append(("LC(Dih(8)) = <rotation>", Outcome(ok, None if ok else {"lc_order": lc.order},
                                                  {"lc_order": lc.order})))

    P = D8Pair.build()
    T = P.T
    xa = subgroup_from_indices(T, [P.x, P.a])
    in_lcm = P.xya in lcm_set(T)
    ok = in_lcm and P.xya not in xa.members and xa.order == 16
    out.append(("xya in LCM(T) but not in <x> x <a>",
                Outcome(ok, None if ok else {"in_lcm": in_lcm, "in_xa": P.xya in xa.members},
                        {"xya": _cyc(T, P.xya), "lcm_size": len(lcm_set(T)), "lc_order": lc_subgroup(T).order})))

    a2 = T.mul(P.a, P.a)
    N = subgroup_from_indices(T, [a2])
    q = quotient(T, N)
    img = q.forward_index[P.xya]
    Q = q.image
    xa_y = q.forward_index[T.mul(P.xya, int(T.inverses[P.y]))]
    orders = {"o(xyaN)": int(Q.orders[img]), "o(xya y^-1 N)": int(Q.orders[xa_y]),
              "o(y^-1 N)": int(Q.orders[q.forward_index[int(T.inverses[P.y])]])}
    ok = (orders["o(xyaN)"] == 2 and orders["o(xya y^-1 N)"] == 4
          and img not in lcm_set(Q) and img not in lc_subgroup(Q).members)
    out.append(("xyaN not in LC(T/<a^2>)", Outcome(ok, None if ok else orders, orders)))

    A = alternating(4)
    s = lc_series(A)
    ok = s.orders == [1, 4, 12] and s.lc_class == 2 and not is_supersolvable(A)
    out.append(("LC-series of Alt(4) = [1, 4, 12]",
                Outcome(ok, None if ok else {"lc_series": s.orders}, {"lc_series": s.orders})))
    return out


CAMPAIGNS: dict[str, Campaign] = {c.id: c for c in [
    Campaign("paper-examples", "worked examples for Dih(8), Dih(8)xDih(8) and Alt(4)", examples=worked_examples),
    Campaign("thm-cp2", "LCM-group iff nilpotent with CP2 Sylow subgroups", check=check_thm_cp2),
    Campaign("thm-a", "CP2 iff Omega-condition p-group or Frobenius with cyclic complement", check=check_thm_a),
    Campaign("prop-equ", "p-elements: LCM_p membership equals LCM membership", check=check_prop_equ),
    Campaign("lemma-ces", "LCM_p(G) is conjugation-invariant and generates a p-group", check=check_lemma_ces),
    Campaign("lemma-a2", "Omega_1 = Omega_(1) and G/Omega_1 in CP2 imply G in CP2", "p-group", check_lemma_a2),
    Campaign("lemma-ccc", "Omega_1(LCM(G)) = Omega_(1)(LCM(G)) for p-groups", "p-group", check_lemma_ccc),
    Campaign("prop-pro", "LCM(G) x LCM(H) inside LCM(G x H), equal for coprime exponents", "product",
             check_prop_pro),
    Campaign("cor-42", "CP2 Sylow p-subgroup puts the Sylow p-subgroup of Fit(G) in LCM(G)", check=check_cor_42),
    Campaign("thm-min", "structure of minimal non-LCM groups", check=check_thm_min),
    Campaign("lemma-zp", "Z_{p-1}(G) lies in LCM(G) for p-groups", "p-group", check_lemma_zp),
    Campaign("thm-222", "LC-class of a p-group is at most floor(t/(p-1)) + 1", "p-group", check_thm_222),
    Campaign("thm-5", "H-supersolvable series terms lie in the LC-series of H", check=check_thm_5),
    Campaign("cor-7", "supersolvable groups and orders pq, pq^2, pqr are LC-nilpotent", check=check_cor_7,
             applies=_cor7_applies),
    Campaign("lc-factors", "LC-series factors are nilpotent whenever the series reaches G", check=check_lc_factors),
]}


class GroupCache:
    """Builds each corpus group once per run so derived tables are shared."""

    def __init__(self):
        self._groups: dict[str, FiniteGroup | Exception] = {}

    def get(self, entry: CorpusEntry) -> FiniteGroup:
        if entry.name not in self._groups:
            try:
                self._groups[entry.name] = build_group(entry.spec)
            except Exception as exc:  # reported per entry
                self._groups[entry.name] = exc
        got = self._groups[entry.name]
        if isinstance(got, Exception):
            raise got
        return got


def run_campaign(campaign_id: str, tag: str | None = None, corpus: list[CorpusEntry] | None = None,
                 cache: GroupCache | None = None) -> CampaignReport:
    if campaign_id not in CAMPAIGNS:
        raise KeyError(f"unknown campaign {campaign_id!r}; known: {', '.join(CAMPAIGNS)}")
    c = CAMPAIGNS[campaign_id]
    report = CampaignReport(c.id)
    if c.examples is not None:
        for name, outcome in _timed_examples(c):
            report.rows.append(outcome)
        return report
    entries = filter_corpus(corpus if corpus is not None else default_corpus(), tag)
    entries = [e for e in entries if c.tag in e.tags]
    cache = cache or GroupCache()
    for entry in entries:
        start = time.perf_counter()
        try:
            G = cache.get(entry)
            if c.applies is not None and not c.applies(G):
                continue
            outcome = c.check(entry, G)
            verdict = "pass" if outcome.passed else "fail"
            row = Row(c.id, entry.name, verdict, outcome.witness, outcome.info)
        except CapExceeded as exc:
            row = Row(c.id, entry.name, "skipped: cap", None, {"cap": exc.what, "size": exc.size})
        except TheoremViolation as exc:
            row = Row(c.id, entry.name, "fail", {"violation": str(exc)})
        except Exception as exc:
            row = Row(c.id, entry.name, "error", {"error": f"{type(exc).__name__}: {exc}"})
        row.wall_time = time.perf_counter() - start
        report.rows.append(row)
    return report


def _timed_examples(c: Campaign):
    start = time.perf_counter()
    results = c.examples()
    elapsed = (time.perf_counter() - start) / max(1, len(results))
    for name, outcome in results:
        yield name, Row(c.id, name, "pass" if outcome.passed else "fail", outcome.witness, outcome.info, elapsed)


def run_all(tag: str | None = None, corpus: list[CorpusEntry] | None = None) -> CampaignReport:
    """Every campaign in registry order, merged into one report."""
    cache = GroupCache()
    merged = CampaignReport("all")
    for cid in CAMPAIGNS:
        merged.rows.extend(run_campaign(cid, tag, corpus, cache).rows)
    return merged
