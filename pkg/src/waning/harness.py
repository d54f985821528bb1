"""Exhaustive and sampled verification over bounded universes.

The universe with bound B holds every partial bijection whose domain and
image sit inside range(B); refuting a containment on the slice refutes it
outright, since intersecting with the slice preserves inclusions.  All checks
report counterexamples in a canonical order, so reports are deterministic
for a fixed (bound, seed, sample) regardless of worker count; only the
elapsed-time field varies between runs.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from . import descriptors as de
from .errors import BoundTooLarge, NoWitness, UnknownSuite
from .extnat import OMEGA
from .functions import (
    CONST_OMEGA,
    GenFn,
    WaningFn,
    closure,
    count_with_first_value_below,
    descending_chain_element,
    enumerate_below,
    preceq,
)
from .pbij import EMPTY, PBij, collapse
from .serialize import dumps, pb_to_obj
from .topology import FinitePoset, embed_poset

MAX_BOUND = 7


def universe_size(bound: int) -> int:
    """Closed form: sum over k of C(bound, k)^2 * k!."""
    return sum(
        math.comb(bound, k) ** 2 * math.factorial(k) for k in range(bound + 1)
    )


@lru_cache(maxsize=None)
def enumerate_universe(bound: int, max_bound: int = MAX_BOUND) -> tuple[PBij, ...]:
    """All partial bijections inside range(bound), in lexicographic order."""
    if bound > max_bound:
        raise BoundTooLarge(f"bound {bound} exceeds the maximum {max_bound}")
    elements = []
    points = range(bound)
    for k in range(bound + 1):
        for dom in itertools.combinations(points, k):
            for img in itertools.permutations(points, k):
                elements.append(PBij._from_sorted(tuple(zip(dom, img))))
    elements.sort(key=lambda p: p.pairs)
    assert len(elements) == universe_size(bound)
    as_set = set(elements)
    for h in elements:
        assert h.inverse() in as_set
        assert all(h.restrict(r) in as_set for r in range(bound))
    return tuple(elements)


@dataclass(frozen=True)
class CheckReport:
    name: str
    cases: int
    counterexamples: tuple[tuple[str, PBij], ...]
    elapsed_ms: float

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_obj(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            "counterexamples": [
                {"inputs": inputs, "witness": pb_to_obj(w)}
                for inputs, w in self.counterexamples
            ],
            "ms": round(self.elapsed_ms, 3),
        }

    def summary(self) -> str:
        verdict = "pass" if self.ok else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return (
            f"{self.name}: {verdict}, {self.cases} cases, "
            f"{self.elapsed_ms:.0f} ms"
        )


def _sorted_counterexamples(
    found: Iterable[tuple[str, PBij]]
) -> tuple[tuple[str, PBij], ...]:
    return tuple(sorted(found, key=lambda c: (dumps(pb_to_obj(c[1])), c[0])))


def _report(name: str, cases: int, found, started: float) -> CheckReport:
    return CheckReport(
        name=name,
        cases=cases,
        counterexamples=_sorted_counterexamples(found),
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )


def subset_check(
    d1: de.SetDescriptor, d2: de.SetDescriptor, bound: int, name: str = "subset"
) -> CheckReport:
    """Report every universe element in the first set but not the second."""
    started = time.perf_counter()
    found = []
    label = dumps({"d1": _describe(d1), "d2": _describe(d2)})
    for h in enumerate_universe(bound):
        if de.member(d1, h) and not de.member(d2, h):
            found.append((label, h))
    return _report(name, universe_size(bound), found, started)


def equality_check(
    d1: de.SetDescriptor, d2: de.SetDescriptor, bound: int, name: str = "equality"
) -> CheckReport:
    started = time.perf_counter()
    found = list(subset_check(d1, d2, bound).counterexamples)
    found += list(subset_check(d2, d1, bound).counterexamples)
    return _report(name, 2 * universe_size(bound), found, started)


def product_containment_check(
    f: WaningFn, a: PBij, b: PBij, bound: int
) -> CheckReport:
    """Verify products of the two factor neighbourhoods land in the target one."""
    started = time.perf_counter()
    c = a * b
    r = de.valid_r_min(f, c)
    p = de.continuity_p(f, a, b, r)
    wa = de.WNbhd(f, a, p)
    wb = de.WNbhd(f, b, p)
    wc = de.WNbhd(f, c, r)
    us = enumerate_universe(bound)
    left = [d for d in us if de.member(wa, d)]
    right = [e for e in us if de.member(wb, e)]
    label = dumps(
        {"f": _describe_fn(f), "a": pb_to_obj(a), "b": pb_to_obj(b), "p": p, "r": r}
    )
    found = []
    cases = 0
    for d in left:
        for e in right:
            cases += 1
            if not de.member(wc, d * e):
                found.append((label, d * e))
    return _report("product-containment", cases, found, started)


def _describe_fn(f) -> dict:
    from .serialize import fn_to_obj

    return fn_to_obj(f)


def _describe(d: de.SetDescriptor) -> dict:
    from .serialize import descriptor_to_obj

    return descriptor_to_obj(d)


# ---------------------------------------------------------------------------
# fixed waning-function sample
# ---------------------------------------------------------------------------


def waning_sample() -> tuple[WaningFn, ...]:
    """The fixed 50-function sample used by the seeded suites.

    Covers every branch behaviour: all omega-free functions with at most
    three drops drawn from {1..5}, the constant-OMEGA function, leading-OMEGA
    forms of several depths, the longer staircases, and a stretch of the
    descending chain.
    """
    out: list[WaningFn] = []
    for size in range(4):
        for combo in itertools.combinations((5, 4, 3, 2, 1), size):
            out.append(WaningFn(drops=combo))
    out.append(CONST_OMEGA)
    out.append(WaningFn(omega_prefix=1, drops=(2, 1)))
    out.append(WaningFn(omega_prefix=2, drops=(1,)))
    for combo in itertools.combinations((5, 4, 3, 2, 1), 4):
        out.append(WaningFn(drops=combo))
    out.append(WaningFn(drops=(5, 4, 3, 2, 1)))
    for n in range(6, 13):
        out.append(descending_chain_element(n))
    out.extend(
        [
            WaningFn(omega_prefix=1, drops=(1,)),
            WaningFn(omega_prefix=1, drops=(3, 1)),
            WaningFn(omega_prefix=2, drops=(2, 1)),
            WaningFn(omega_prefix=3, drops=(1,)),
            WaningFn(omega_prefix=1, drops=(4, 2)),
            WaningFn(omega_prefix=2, drops=(3, 1)),
            WaningFn(omega_prefix=4, drops=(2, 1)),
            WaningFn(omega_prefix=5, drops=(1,)),
        ]
    )
    assert len(out) == 50 and len(set(out)) == 50
    return tuple(out)


def _rand_subset(rng: random.Random, pool: range, max_size: int) -> frozenset[int]:
    size = rng.randint(0, max_size)
    return frozenset(rng.sample(list(pool), size))


def _rand_genfn(rng: random.Random) -> GenFn:
    values: list = [0, 1, 2, 3, 4, OMEGA]
    prefix = tuple(rng.choice(values) for _ in range(rng.randint(0, 3)))
    tail = rng.choice([0, OMEGA])
    omega = rng.choice([0, OMEGA])
    return GenFn(prefix=prefix, tail=tail, omega=omega)


# ---------------------------------------------------------------------------
# suite batteries
# ---------------------------------------------------------------------------


def _basis_cases(bound: int, seed: int, sample: int) -> list:
    rng = random.Random(seed)
    fs = waning_sample()
    us = enumerate_universe(bound)
    cases = []
    while len(cases) < sample:
        f = rng.choice(fs)
        g = rng.choice(us)
        n = rng.randint(0, 3)
        avoid = _rand_subset(rng, range(bound + 1), 3)
        if not de.member(de.UBasic(f, n, avoid), g):
            continue
        cases.append((f, g, n, avoid, rng.randint(0, 3), rng.randint(0, 3)))
    return cases


def _basis_eval(bound: int, case) -> list[tuple[str, PBij]]:
    f, g, n, avoid, extra_r, extra_p = case
    label = dumps(
        {
            "f": _describe_fn(f),
            "g": pb_to_obj(g),
            "n": n,
            "X": sorted(avoid),
        }
    )
    found = []
    r = de.valid_r_min(f, g) + extra_r
    p = r + extra_p
    wide = de.WNbhd(f, g, r)
    narrow = de.WNbhd(f, g, p)
    basic = de.UBasic(f, n, avoid)
    refined = de.WNbhd(f, g, de.basis_refinement(f, n, avoid, g))
    for h in enumerate_universe(bound):
        if de.member(narrow, h) and not de.member(wide, h):
            found.append((label + "#monotone", h))
        if de.member(refined, h) and not de.member(basic, h):
            found.append((label + "#refine", h))
    return found


def _much_wan_cases(bound: int, seed: int, sample: int) -> list:
    rng = random.Random(seed)
    us = enumerate_universe(bound)
    cases = []
    for _ in range(sample):
        f = _rand_genfn(rng)
        g = rng.choice(us)
        r = de.valid_r_min(closure(f), g) + rng.randint(0, 2)
        cases.append(("equal", f, g, r, None, None))
    refinements = 0
    while refinements < sample:
        f = _rand_genfn(rng)
        g = rng.choice(us)
        n = rng.randint(0, 3)
        avoid = _rand_subset(rng, range(bound + 1), 3)
        if not de.member(de.UBasic(f, n, avoid), g):
            continue
        cases.append(("refine", f, g, None, n, avoid))
        refinements += 1
    return cases


def _much_wan_eval(bound: int, case) -> list[tuple[str, PBij]]:
    kind, f, g, r, n, avoid = case
    found = []
    if kind == "equal":
        label = dumps({"f": _describe_fn(f), "g": pb_to_obj(g), "r": r})
        built = de.much_wan_witness(f, g, r)
        target = de.WNbhd(closure(f), g, r)
        for h in enumerate_universe(bound):
            if de.member(built, h) != de.member(target, h):
                found.append((label + "#equal", h))
    else:
        label = dumps(
            {"f": _describe_fn(f), "g": pb_to_obj(g), "n": n, "X": sorted(avoid)}
        )
        basic = de.UBasic(f, n, avoid)
        refined = de.tfprime_refinement(f, n, avoid, g)
        if not de.member(refined, g):
            found.append((label + "#base-point", g))
        for h in enumerate_universe(bound):
            if de.member(refined, h) and not de.member(basic, h):
                found.append((label + "#refine", h))
    return found


def _continuity_cases(bound: int, seed: int, sample: int) -> list:
    rng = random.Random(seed)
    fs = waning_sample()
    small = enumerate_universe(3)
    return [
        (rng.choice(fs), rng.choice(small), rng.choice(small))
        for _ in range(sample)
    ]


def _continuity_eval(bound: int, case) -> list[tuple[str, PBij]]:
    f, a, b = case
    return list(product_containment_check(f, a, b, bound).counterexamples)


def _order_cases(bound: int, seed: int, sample: int) -> list:
    fs = waning_sample()[:sample]
    return [(f, g) for f in fs for g in fs]


def _safe_radius(f: WaningFn, g: WaningFn) -> int:
    ends = [0 if w.const_omega else w.support_end for w in (f, g)]
    return sum(ends) + max(f.drops, default=0) + 2


def _order_eval(bound: int, case) -> list[tuple[str, PBij]]:
    f, g = case
    label = dumps({"f": _describe_fn(f), "g": _describe_fn(g)})
    ordered = preceq(f, g)
    try:
        r = _safe_radius(f, g)
        n, b, h = de.order_counterexample(f, g, r)
        separated = de.member(de.WNbhd(g, PBij.identity(n), r), h) and not de.member(
            de.WNbhd(f, PBij.identity(n), b), h
        )
        witness = h
    except NoWitness:
        separated = False
        witness = EMPTY
    if ordered == separated:
        return [(label + "#dichotomy", witness)]
    return []


def _remark_cases(bound: int, seed: int, sample: int) -> list:
    cases = []
    for n in (0, 2):
        cases.append(("empty-family", n, None))
        cases.append(("single-point", n, None))
        cases.append(("initial-segment", n, 2))
        for r in (3, 5):
            cases.append(("cosize-three", n, r))
    return cases


def _remark_eval(bound: int, case) -> list[tuple[str, PBij]]:
    kind, n, param = case
    dom_clear = [de.DomMiss(i) for i in range(n)]
    if kind == "empty-family":
        lhs = de.Wany(n, [frozenset()])
        rhs = de.Intersection(dom_clear)
    elif kind == "single-point":
        lhs = de.Wany(n, [frozenset({0})])
        rhs = de.Intersection(dom_clear + [de.ImMiss(0)])
    elif kind == "initial-segment":
        lhs = de.Wany(n, [frozenset(range(param + 1))])
        rhs = de.Intersection(dom_clear + [de.ImMiss(i) for i in range(param + 1)])
    else:
        # sets of co-size 3 inside range(param); missing one of them caps the
        # image hits in range(param) at 3
        lhs = de.Wany(
            n,
            [frozenset(ys) for ys in itertools.combinations(range(param), param - 3)],
        )
        cap = de.UBasic(GenFn(prefix=(), tail=3, omega=3), 0, range(param))
        rhs = de.Intersection(dom_clear + [cap])
    label = dumps({"identity": kind, "n": n, "param": param})
    found = []
    for h in enumerate_universe(bound):
        if de.member(lhs, h) != de.member(rhs, h):
            found.append((label, h))
    return found


def _rand_descriptor(rng: random.Random, depth: int = 0) -> de.SetDescriptor:
    fs = waning_sample()
    small = enumerate_universe(3)
    kinds = ["hit", "dommiss", "immiss", "U", "W", "wany", "fix"]
    if depth < 2:
        kinds += ["dual", "and"]
    kind = rng.choice(kinds)
    if kind == "hit":
        return de.PointHit(rng.randint(0, 3), rng.randint(0, 3))
    if kind == "dommiss":
        return de.DomMiss(rng.randint(0, 3))
    if kind == "immiss":
        return de.ImMiss(rng.randint(0, 3))
    if kind == "U":
        return de.UBasic(
            rng.choice(fs), rng.randint(0, 3), _rand_subset(rng, range(4), 3)
        )
    if kind == "W":
        f = rng.choice(fs)
        g = rng.choice(small)
        return de.WNbhd(f, g, de.valid_r_min(f, g) + rng.randint(0, 2))
    if kind == "wany":
        families = [
            _rand_subset(rng, range(4), 2) for _ in range(rng.randint(1, 3))
        ]
        return de.Wany(rng.randint(0, 3), families)
    if kind == "fix":
        return de.FixBelow(rng.choice(small), rng.randint(0, 4))
    if kind == "dual":
        return de.Dual(_rand_descriptor(rng, depth + 1))
    return de.Intersection(
        [_rand_descriptor(rng, depth + 1) for _ in range(2)]
    )


def _dual_cases(bound: int, seed: int, sample: int) -> list:
    rng = random.Random(seed)
    return [_rand_descriptor(rng) for _ in range(sample)]


def _dual_eval(bound: int, case) -> list[tuple[str, PBij]]:
    d = case
    label = dumps(_describe(d))
    found = []
    for h in enumerate_universe(bound):
        if de.member(de.Dual(d), h) != de.member(d, h.inverse()):
            found.append((label, h))
        if de.member(de.Dual(de.Dual(d)), h) != de.member(d, h):
            found.append((label + "#involution", h))
    return found


def _dmap_cases(bound: int, seed: int, sample: int) -> list:
    return [0, 1, 2]


def _dmap_eval(bound: int, case) -> list[tuple[str, PBij]]:
    n = case
    g = PBij.identity(n)
    ups = [h for h in enumerate_universe(bound) if h.extends(g)]
    label = dumps({"idempotent": pb_to_obj(g)})
    found = []
    images = {}
    for h in ups:
        dh = collapse(g, h)
        if dh in images:
            found.append((label + "#injective", h))
        images[dh] = h
    for h in ups:
        dh = collapse(g, h)
        for k in ups:
            if collapse(g, h * k) != dh * collapse(g, k):
                found.append((label + "#homomorphism", h * k))
    return found


def _census_cases(bound: int, seed: int, sample: int) -> list:
    return list(range(11))


def _census_eval(bound: int, case) -> list[tuple[str, PBij]]:
    c = case
    if count_with_first_value_below(c) != 2**c:
        return [(dumps({"c": c}), EMPTY)]
    return []


def _chains_cases(bound: int, seed: int, sample: int) -> list:
    rng = random.Random(seed)
    cases: list = [("chain", n, None) for n in range(100)]
    for _ in range(sample):
        size = rng.randint(1, 4)
        drops = tuple(sorted(rng.sample(range(1, 9), size), reverse=True))
        cases.append(("below", None, WaningFn(drops=drops)))
    return cases


def _longest_chain(fns: list[WaningFn]) -> int:
    # total value decreases along preceq, so sorting by it is topological
    def total(w: WaningFn) -> int:
        return sum(w.drops)

    fns = sorted(fns, key=total, reverse=True)
    best = [1] * len(fns)
    for j in range(len(fns)):
        for i in range(j):
            if fns[i] != fns[j] and preceq(fns[i], fns[j]):
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def _chains_eval(bound: int, case) -> list[tuple[str, PBij]]:
    kind, n, f = case
    if kind == "chain":
        e1 = descending_chain_element(n)
        e2 = descending_chain_element(n + 1)
        ok = preceq(e2, e1) and e1 != e2 and not preceq(e1, e2)
        return [] if ok else [(dumps({"chain": n}), EMPTY)]
    below = enumerate_below(f)
    cap = math.prod(f(i) + 1 for i in range(f.support_end))
    depth_cap = 1 + sum(f(i) for i in range(f.support_end))
    if len(below) > cap or _longest_chain(below) > depth_cap:
        return [(dumps({"f": _describe_fn(f)}), EMPTY)]
    return []


_LABELS = ("a", "b", "c", "d")


def all_posets(max_size: int = 4) -> list[FinitePoset]:
    """Every labeled poset on 1..max_size elements, by relation enumeration."""
    out = []
    for n in range(1, max_size + 1):
        labels = _LABELS[:n]
        off_diag = [(i, j) for i in range(n) for j in range(n) if i != j]
        for picks in itertools.product((False, True), repeat=len(off_diag)):
            rel = {(i, i) for i in range(n)}
            rel.update(p for p, take in zip(off_diag, picks) if take)
            if any((b, a) in rel for a, b in rel if a != b):
                continue
            if any(
                (a, b) in rel and (b, c) in rel and (a, c) not in rel
                for a in range(n)
                for b in range(n)
                for c in range(n)
            ):
                continue
            out.append(
                FinitePoset(
                    labels, [(labels[a], labels[b]) for a, b in rel]
                )
            )
    return out


def _embed_cases(bound: int, seed: int, sample: int) -> list:
    return all_posets()


def _embed_eval(bound: int, case) -> list[tuple[str, PBij]]:
    poset = case
    mapping = embed_poset(poset)
    label = dumps({"elements": list(poset.elements), "leq": sorted(poset.leq)})
    fns = list(mapping.values())
    if len(set(fns)) != len(fns):
        return [(label + "#injective", EMPTY)]
    for x in poset.elements:
        for y in poset.elements:
            if poset.le(x, y) != preceq(mapping[x], mapping[y]):
                return [(label + "#order", EMPTY)]
    return []


def _compact_cases(bound: int, seed: int, sample: int) -> list:
    rng = random.Random(seed)
    cases = []
    for _ in range(sample):
        n = rng.randint(0, 3)
        avoid = _rand_subset(rng, range(8), 2)
        pairs = []
        used = set(avoid)
        for x in range(n):
            if rng.random() < 0.6:
                y = rng.choice([v for v in range(10) if v not in used])
                used.add(y)
                pairs.append((x, y))
        covered = _rand_subset(rng, range(12), 10)
        cases.append((n, PBij(pairs), avoid, covered, rng.random() < 0.5))
    return cases


def _compact_eval(bound: int, case) -> list[tuple[str, PBij]]:
    n, h0, avoid, covered, with_dommiss = case
    label = dumps(
        {
            "n": n,
            "h0": pb_to_obj(h0),
            "X": sorted(avoid),
            "covered": sorted(covered),
            "dommiss": with_dommiss,
        }
    )
    w = de.cover_witness(n, h0, avoid, covered, with_dommiss)
    in_base = w.restrict(n) == h0 and not (w.image & avoid)
    target = w.get(n)
    escapes = all(target != m for m in covered) and (
        not with_dommiss or target is not None
    )
    # the full cover has one member per value of target plus the domain-miss set
    in_full_cover = target is None or target >= 0
    if not (in_base and escapes and in_full_cover):
        return [(label, w)]
    return []


_SUITES = {
    "basis": (_basis_cases, _basis_eval, 5, 200),
    "much-wan": (_much_wan_cases, _much_wan_eval, 5, 100),
    "continuity": (_continuity_cases, _continuity_eval, 5, 100),
    "order": (_order_cases, _order_eval, 4, 50),
    "remark": (_remark_cases, _remark_eval, 5, 0),
    "dual": (_dual_cases, _dual_eval, 4, 50),
    "d-map": (_dmap_cases, _dmap_eval, 4, 0),
    "census": (_census_cases, _census_eval, 0, 0),
    "chains": (_chains_cases, _chains_eval, 0, 20),
    "embed": (_embed_cases, _embed_eval, 0, 0),
    "compactness": (_compact_cases, _compact_eval, 0, 20),
}


def suite_names() -> tuple[str, ...]:
    return tuple(_SUITES)


def _eval_cases(args):
    name, bound, cases = args
    _, evaluate, _, _ = _SUITES[name]
    found = []
    for case in cases:
        found.extend(evaluate(bound, case))
    return found


def run_suite(
    name: str,
    bound: Optional[int] = None,
    seed: int = 1,
    sample: Optional[int] = None,
    jobs: int = 1,
) -> CheckReport:
    """Run one named invariant battery and report counterexamples.

    Identical (bound, seed, sample) give identical reports apart from the
    elapsed time, whatever the worker count.
    """
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r} (have {', '.join(_SUITES)})")
    build, _, default_bound, default_sample = _SUITES[name]
    bound = default_bound if bound is None else bound
    sample = default_sample if sample is None else sample
    started = time.perf_counter()
    cases = build(bound, seed, sample)
    if jobs > 1 and len(cases) > 1:
        import multiprocessing as mp

        chunks = [cases[i::jobs] for i in range(jobs)]
        with mp.get_context("fork").Pool(jobs) as pool:
            parts = pool.map(
                _eval_cases, [(name, bound, chunk) for chunk in chunks]
            )
        found = [c for part in parts for c in part]
    else:
        found = _eval_cases((name, bound, cases))
    return _report(name, len(cases), found, started)
