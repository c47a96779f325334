"""Desk-scale verification harnesses.

Each harness returns a :class:`~unicolor.report.Report`.  Randomized
harnesses derive one generator per trial from ``(seed, trial)``, so a report
can be replayed from its experiment name, parameters and seed with
:func:`replay`.  Every hypergraph a harness touches is also run through the
k-partite shadow inequality (``ffk_checks`` in the measurements).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable

import numpy as np

from .coloring import (
    Coloring,
    Uniqueness,
    are_equivalent,
    enumerate_classes,
    is_proper,
    uniqueness_status,
)
from .constructions import (
    build_nested_sunflowers,
    complete_kpartite,
    compositions,
    hkr,
    kpartite_feasible,
    random_kpartite,
    sample_kpartite_above,
    trial_rng,
)
from .core import Hypergraph, has_isolated, min_positive_degree, parse_rational
from .hgr import dumps
from .report import FAIL, PASS, SKIPPED, Report
from .thresholds import ffk_sides, phi, phi_branches

__all__ = [
    "verify_construction",
    "verify_main_theorem",
    "verify_boundary",
    "verify_phi331",
    "verify_sunflower_fact",
    "verify_corollary_construction",
    "verify_ffk",
    "HARNESSES",
    "replay",
]

# exhaustive subgraph enumeration is refused above this many host edges
MAX_EXHAUSTIVE_EDGES = 16


class _Checker:
    """Accumulates named assertions into a report."""

    def __init__(self, report: Report):
        self.report = report
        self.ffk = 0

    def expect(self, ok: bool, message: str, H: Hypergraph | None = None) -> bool:
        if not ok:
            self.report.fail(message, dumps(H) if H is not None else None)
        return ok

    def ffk_all(self, H: Hypergraph, k: int, witness: Coloring) -> None:
        for i in range(1, H.r):
            lhs, rhs = ffk_sides(H, k, i, witness)
            self.ffk += 1
            self.expect(lhs <= rhs, f"shadow inequality fails for i={i}: {lhs} > {rhs}", H)

    def finish(self, instances: int | None = None) -> Report:
        self.report.measured["ffk_checks"] = self.ffk
        if self.report.verdict != FAIL:
            self.report.verdict = SKIPPED if instances == 0 else PASS
        return self.report


def _binding_alpha(k: int, r: int) -> int:
    return 1 if 3 * k < 4 * r - 2 else 3


def verify_construction(k: int, r: int, alpha: Fraction | int | str, m: int) -> Report:
    """Check that ``H_{k,r}(alpha, m)`` for ``alpha`` in {1, 3} meets its branch constant exactly.

    Asserts no isolated vertices, at least two coloring classes (and that the
    two built-in colorings are proper and inequivalent), minimum positive
    codegree ``(k-r+1)m`` or ``(3k-3r+1)m``, and codegree/n equal to the
    matching branch constant.
    """
    alpha = parse_rational(alpha)
    if alpha not in (1, 3):
        raise ValueError(f"alpha must be 1 or 3, got {alpha}")
    report = Report("construction", params={"k": k, "r": r, "alpha": alpha, "m": m})
    check = _Checker(report)
    H, psi1, psi2 = hkr(k, r, alpha, m)
    delta = min_positive_degree(H, r - 1)
    small, large = phi_branches(k, r)
    branch = small if alpha == 1 else large
    expected = (k - r + 1) * m if alpha == 1 else (3 * k - 3 * r + 1) * m
    classes = enumerate_classes(H, k, limit=2)
    report.measured.update(
        n=H.n, edges=len(H), delta=delta, expected_delta=expected,
        ratio=Fraction(delta, H.n), branch=branch, classes_found=len(classes),
    )
    check.expect(not has_isolated(H), "construction has an isolated vertex")
    check.expect(is_proper(H, psi1) and is_proper(H, psi2), "built-in colorings are not proper")
    check.expect(not are_equivalent(psi1, psi2), "built-in colorings are equivalent")
    check.expect(len(classes) >= 2, f"only {len(classes)} coloring class found")
    check.expect(delta == expected, f"codegree {delta} != {expected}")
    check.expect(Fraction(delta, H.n) == branch, f"ratio {Fraction(delta, H.n)} != {branch}")
    check.ffk_all(H, k, psi1)
    return check.finish()


def verify_boundary(k: int, r: int, m: int) -> Report:
    """Check that the binding construction sits exactly on ``phi(k, r) * n``.

    The binding construction uses ``alpha = 1`` below the phase point and
    ``alpha = 3`` from it on.  The other construction's ratio is recorded as
    ``other_ratio`` without any assertion.
    """
    report = Report("boundary", params={"k": k, "r": r, "m": m})
    check = _Checker(report)
    alpha = _binding_alpha(k, r)
    H, psi1, _ = hkr(k, r, alpha, m)
    delta = min_positive_degree(H, r - 1)
    target = phi(k, r) * H.n
    classes = enumerate_classes(H, k, limit=2)
    report.measured.update(
        binding_alpha=alpha, n=H.n, delta=delta, threshold=phi(k, r),
        threshold_times_n=target, classes_found=len(classes),
    )
    check.expect(not has_isolated(H), "construction has an isolated vertex")
    check.expect(delta == target, f"codegree {delta} != phi*n = {target}")
    check.expect(len(classes) >= 2, "binding construction is uniquely colorable")
    check.ffk_all(H, k, psi1)

    other = 4 - alpha
    G, _, _ = hkr(k, r, other, m)
    report.measured["other_alpha"] = other
    report.measured["other_ratio"] = Fraction(min_positive_degree(G, r - 1), G.n)
    return check.finish()


def _feasible_compositions(k: int, r: int, n_max: int, threshold: Fraction, i: int) -> tuple[list, int]:
    every = [c for n in range(k, n_max + 1) for c in compositions(n, k)]
    return [c for c in every if kpartite_feasible(r, c, threshold, i)], len(every)


def _sampled_uniqueness(
    check: _Checker, k: int, r: int, n_max: int, trials: int, seed: int,
    threshold: Fraction, i: int,
) -> None:
    report = check.report
    feasible, total = _feasible_compositions(k, r, n_max, threshold, i)
    report.measured.update(compositions=total, feasible_compositions=len(feasible))
    instances = unique = 0
    if feasible:
        for t in range(trials):
            rng = trial_rng(seed, t)
            sizes = feasible[int(rng.integers(len(feasible)))]
            child = int(rng.integers(2**62))
            H = next(sample_kpartite_above(k, r, sizes, threshold, 1, child, i=i))
            witness = complete_kpartite(r, sizes)[1]
            instances += 1
            status = uniqueness_status(H, k)
            if check.expect(status is Uniqueness.UNIQUE, f"trial {t}: {status.value}", H):
                unique += 1
            check.ffk_all(H, k, witness)
    report.measured.update(instances=instances, uniquely_colorable=unique)
    check.finish(instances)


def _exhaustive_uniqueness(check: _Checker, k: int, r: int, n_max: int) -> None:
    report = check.report
    threshold = phi(k, r)
    total = instances = unique = 0
    for n in range(k, n_max + 1):
        cap = threshold * n
        for sizes in compositions(n, k):
            total += 1
            host, witness = complete_kpartite(r, sizes)
            edges = host.edges
            if len(edges) > MAX_EXHAUSTIVE_EDGES:
                raise ValueError(f"host {sizes} has {len(edges)} edges; too many for exhaustive search")
            subsets = [list(combinations(e, r - 1)) for e in edges]
            for mask in range(1, 1 << len(edges)):
                chosen = [j for j in range(len(edges)) if mask >> j & 1]
                vdeg = [0] * (n + 1)
                codeg: dict[tuple[int, ...], int] = {}
                for j in chosen:
                    for v in edges[j]:
                        vdeg[v] += 1
                    for s in subsets[j]:
                        codeg[s] = codeg.get(s, 0) + 1
                if min(vdeg[1:]) == 0 or min(codeg.values()) <= cap:
                    continue
                H = Hypergraph._trusted(r, n, host.edge_array[chosen])
                check.expect(min_positive_degree(H, r - 1) == min(codeg.values()), "codegree mismatch", H)
                instances += 1
                status = uniqueness_status(H, k)
                if check.expect(status is Uniqueness.UNIQUE, f"{sizes}: {status.value}", H):
                    unique += 1
                check.ffk_all(H, k, witness)
    report.measured.update(compositions=total, instances=instances, uniquely_colorable=unique)
    check.finish(instances)


def verify_main_theorem(k: int, r: int, n_max: int, trials: int | None, seed: int | None = None) -> Report:
    """Check that k-partite instances above ``phi(k, r) * n`` are uniquely colorable.

    With an integer ``trials``, instances come from
    :func:`~unicolor.constructions.sample_kpartite_above`: for each trial a
    part-size vector is drawn uniformly from the compositions of some
    ``n <= n_max`` into ``k`` positive parts whose complete host clears the
    threshold.  With ``trials=None`` every subgraph of every such host is
    examined (small hosts only).
    """
    if not k >= r >= 2:
        raise ValueError(f"need k >= r >= 2, got k={k}, r={r}")
    report = Report("main", params={"k": k, "r": r, "n_max": n_max, "trials": trials}, seed=seed)
    report.measured["threshold"] = phi(k, r)
    check = _Checker(report)
    if trials is None:
        report.notes.append("exhaustive")
        _exhaustive_uniqueness(check, k, r, n_max)
    else:
        if seed is None:
            raise ValueError("sampled runs need a seed")
        _sampled_uniqueness(check, k, r, n_max, trials, seed, phi(k, r), r - 1)
    return report


def verify_phi331(m_max: int, trials: int, n_max: int, seed: int) -> Report:
    """Check the vertex-degree threshold ``n^2/18`` for 3-partite 3-graphs.

    (a) ``H_{3,3}(2, m)`` has minimum vertex degree exactly ``n^2/18`` and
    exactly two coloring classes for every ``m <= m_max``; (b) sampled
    3-partite 3-graphs with ``n <= n_max``, no isolated vertices and minimum
    vertex degree above ``n^2/18`` are uniquely 3-colorable.
    """
    report = Report("phi331", params={"m_max": m_max, "trials": trials, "n_max": n_max}, seed=seed)
    check = _Checker(report)
    extremal = []
    for m in range(1, m_max + 1):
        H, psi1, _ = hkr(3, 3, 2, m)
        delta = min_positive_degree(H, 1)
        classes = enumerate_classes(H, 3)
        bound = Fraction(H.n**2, 18)
        extremal.append({"m": m, "n": H.n, "delta": delta, "n2_over_18": bound, "classes": len(classes)})
        check.expect(not has_isolated(H), f"m={m}: isolated vertex")
        check.expect(delta == bound, f"m={m}: degree {delta} != n^2/18 = {bound}")
        check.expect(len(classes) == 2, f"m={m}: {len(classes)} classes, expected 2")
        check.ffk_all(H, 3, psi1)
    report.measured["extremal"] = extremal
    _sampled_uniqueness(check, 3, 3, n_max, trials, seed, Fraction(1, 18), 1)
    return report


def verify_sunflower_fact(r_max: int, m_max: int) -> Report:
    """Check that nested quasi-sunflowers cover every pair and force rainbow colorings."""
    if r_max < 2:
        raise ValueError(f"need r_max >= 2, got {r_max}")
    report = Report("sunflower", params={"r_max": r_max, "m_max": m_max})
    check = _Checker(report)
    instances = pairs = 0
    for r in range(2, r_max + 1):
        for m in range(r, m_max + 1):
            H = build_nested_sunflowers(r, m)
            instances += 1
            cover = H.pair_matrix()[1:, 1:]
            off = ~np.eye(m, dtype=bool)
            pairs += int(cover[off].sum()) // 2
            check.expect(bool(cover[off].all()), f"(r,m)=({r},{m}): uncovered pair", H)
            classes = enumerate_classes(H, m)
            check.expect(bool(classes), f"(r,m)=({r},{m}): not {m}-colorable", H)
            for c in classes:
                check.expect(len(c.image()) == m, f"(r,m)=({r},{m}): coloring {c.assignment} repeats a color", H)
            check.ffk_all(H, m, Coloring(m, range(1, m + 1)))
    report.measured.update(instances=instances, pairs_covered=pairs)
    return check.finish(instances)


def verify_corollary_construction(k: int, r: int, i: int, m: int) -> Report:
    """Check ``delta_i^+(H_{k,r}(1, m)) = binom(k-i, r-i) * m^(r-i)`` by brute force."""
    if not (k >= r > i >= 1 and m >= 1):
        raise ValueError(f"need k >= r > i >= 1 and m >= 1, got {(k, r, i, m)}")
    report = Report("corollary", params={"k": k, "r": r, "i": i, "m": m})
    check = _Checker(report)
    H, psi1, _ = hkr(k, r, 1, m)
    delta = min_positive_degree(H, i)
    expected = comb(k - i, r - i) * m ** (r - i)
    density = comb(k - i, r - i) * Fraction(1, k + 2) ** (r - i)
    report.measured.update(n=H.n, delta=delta, expected=expected, density=density)
    check.expect(delta == expected, f"degree {delta} != {expected}")
    check.expect(delta == density * H.n ** (r - i), "degree differs from density * n^(r-i)")
    check.ffk_all(H, k, psi1)
    return check.finish()


def verify_ffk(trials: int, seed: int, n_max: int = 9, k_max: int = 5) -> Report:
    """Check the k-partite shadow inequality on random k-partite hypergraphs.

    Each trial picks ``r`` in ``2..min(4, k_max)``, ``k`` in ``r..k_max``, a
    composition of some ``n <= n_max`` into ``k`` parts and an edge density,
    then checks every shadow order ``i``.  Complete hypergraphs on ``k``
    vertices are checked separately for equality.
    """
    report = Report("ffk", params={"trials": trials, "n_max": n_max, "k_max": k_max}, seed=seed)
    check = _Checker(report)
    for t in range(trials):
        rng = trial_rng(seed, t)
        r = int(rng.integers(2, min(4, k_max) + 1))
        k = int(rng.integers(r, k_max + 1))
        n = int(rng.integers(k, max(k, n_max) + 1))
        sizes = list(compositions(n, k))[int(rng.integers(comb(n - 1, k - 1)))]
        H, witness = random_kpartite(r, sizes, float(rng.random()), rng)
        check.ffk_all(H, k, witness)
    equal = 0
    for k in range(2, k_max + 1):
        for r in range(2, k + 1):
            K, witness = complete_kpartite(r, [1] * k)
            for i in range(1, r):
                lhs, rhs = ffk_sides(K, k, i, witness)
                equal += lhs == rhs
                check.expect(lhs == rhs, f"K_{k}^{r}, i={i}: expected equality, got {lhs} vs {rhs}", K)
    report.measured.update(instances=trials, equality_cases=equal)
    return check.finish(trials)


HARNESSES: dict[str, Callable[..., Report]] = {
    "construction": verify_construction,
    "main": verify_main_theorem,
    "boundary": verify_boundary,
    "phi331": verify_phi331,
    "sunflower": verify_sunflower_fact,
    "corollary": verify_corollary_construction,
    "ffk": verify_ffk,
}


def replay(report: Report) -> Report:
    """Re-run the experiment a report describes."""
    fn = HARNESSES[report.experiment]
    params = dict(report.params)
    if report.seed is not None:
        params["seed"] = report.seed
    return fn(**params)
