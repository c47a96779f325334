"""Exact threshold values and inequalities for unique colorability.

All comparisons involving fractional powers are cleared into integer (or
exact rational) powers, so equality cases are decided without rounding.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple

from .coloring import Coloring, enumerate_classes, is_proper
from .constructions import hkr
from .core import Hypergraph, min_positive_degree, parse_rational, shadow
from .report import Report

__all__ = [
    "phi",
    "phi_branches",
    "phase_point",
    "UpperBound",
    "phi_upper",
    "comparison_holds",
    "ffk_sides",
    "ffk_check",
    "conjecture_probe",
]


def _check_kr(k: int, r: int) -> None:
    if not k >= r >= 2:
        raise ValueError(f"need k >= r >= 2, got k={k}, r={r}")


def phi_branches(k: int, r: int) -> tuple[Fraction, Fraction]:
    """The two candidate constants ``(k-r+1)/(k+2)`` and ``(3k-3r+1)/(3k-2)``."""
    _check_kr(k, r)
    return Fraction(k - r + 1, k + 2), Fraction(3 * k - 3 * r + 1, 3 * k - 2)


def phi(k: int, r: int) -> Fraction:
    """Least codegree density forcing unique ``k``-colorability of ``r``-graphs.

    For graphs this is ``(3k-5)/(3k-2)``; for ``r >= 3`` the larger of the two
    branch constants, the second one binding exactly when ``k >= (4r-2)/3``.
    """
    small, large = phi_branches(k, r)
    if r == 2:
        value = Fraction(3 * k - 5, 3 * k - 2)
        assert value == max(small, large)
        return value
    return max(small, large)


def phase_point(r: int) -> Fraction:
    """The value ``(4r-2)/3`` of ``k`` where the binding branch of :func:`phi` switches."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    return Fraction(4 * r - 2, 3)


class UpperBound(NamedTuple):
    value: Fraction
    exact: bool


def phi_upper(k: int, r: int, i: int) -> UpperBound:
    """Upper bound on the positive ``i``-degree threshold.

    ``binom(k-i, r-i) * (max{(k-i)/(k+2), (3k-3i-2)/(3k-2)} / (k-i))^(r-i)``,
    flagged exact when ``k <= (4i+2)/3``, where it equals
    ``binom(k-i, r-i) / (k+2)^(r-i)``.
    """
    if not (k >= r > i >= 1):
        raise ValueError(f"need k >= r > i >= 1, got k={k}, r={r}, i={i}")
    inner = max(Fraction(k - i, k + 2), Fraction(3 * k - 3 * i - 2, 3 * k - 2)) / (k - i)
    value = comb(k - i, r - i) * inner ** (r - i)
    exact = 3 * k <= 4 * i + 2
    if exact:
        assert value == comb(k - i, r - i) * Fraction(1, k + 2) ** (r - i)
    return UpperBound(value, exact)


def comparison_holds(k: int, r1: int, r2: int, i: int) -> bool:
    """Monotonicity of the normalized upper bounds between uniformities ``r1 >= r2``.

    Compares ``(U1/binom(k-i,r1-i))^(1/(r1-i))`` against the same quantity for
    ``r2`` by raising both sides to ``(r1-i)(r2-i)``.
    """
    if not (k >= r1 >= r2 > i >= 1):
        raise ValueError("need k >= r1 >= r2 > i >= 1")
    x = phi_upper(k, r1, i).value / comb(k - i, r1 - i)
    y = phi_upper(k, r2, i).value / comb(k - i, r2 - i)
    return x ** (r2 - i) <= y ** (r1 - i)


def ffk_sides(H: Hypergraph, k: int, i: int, witness: Coloring | None = None) -> tuple[int, int]:
    """Both sides of the k-partite shadow inequality after clearing exponents.

    Returns ``(|H|^(r-i) * binom(k,r-i)^r, |shadow_i H|^r * binom(k,r)^(r-i))``.

    Raises
    ------
    ValueError
        If ``H`` is not k-partite (checked against ``witness`` when given,
        otherwise by searching for a proper ``k``-coloring).
    """
    r = H.r
    if not (k >= r > i >= 1):
        raise ValueError(f"need k >= r > i >= 1, got k={k}, r={r}, i={i}")
    if witness is not None:
        if witness.k > k or not is_proper(H, witness):
            raise ValueError("witness is not a proper k-coloring")
    elif not enumerate_classes(H, k, limit=1):
        raise ValueError(f"hypergraph is not {k}-partite")
    size = len(H)
    shadow_size = len(shadow(H, i))
    lhs = size ** (r - i) * comb(k, r - i) ** r
    rhs = shadow_size**r * comb(k, r) ** (r - i)
    return lhs, rhs


def ffk_check(H: Hypergraph, k: int, i: int, witness: Coloring | None = None) -> bool:
    """True iff ``(|H|/binom(k,r))^(1/r) <= (|shadow_i H|/binom(k,r-i))^(1/(r-i))``."""
    lhs, rhs = ffk_sides(H, k, i, witness)
    return lhs <= rhs


def conjecture_probe(
    k: int, r: int, i: int, alphas: Iterable[Fraction | int | str], m: int
) -> Report:
    """Exact ratio ``delta_i^+ / n^(r-i)`` of ``H_{k,r}(alpha, m)`` over a grid of ``alpha``.

    Exploratory: the report has no verdict.  It records every ratio and the
    grid point with the largest one (ties go to the first).
    """
    if not (k >= r > i >= 1):
        raise ValueError(f"need k >= r > i >= 1, got k={k}, r={r}, i={i}")
    alphas = [parse_rational(a) for a in alphas]
    report = Report("probe", params={"k": k, "r": r, "i": i, "alphas": alphas, "m": m})
    rows = []
    best: tuple[Fraction, Fraction] | None = None
    for alpha in alphas:
        H, _, _ = hkr(k, r, alpha, m)
        delta = min_positive_degree(H, i)
        ratio = Fraction(delta, H.n ** (r - i))
        rows.append({"alpha": alpha, "n": H.n, "delta": delta, "ratio": ratio})
        if best is None or ratio > best[1]:
            best = (alpha, ratio)
    report.measured["ratios"] = rows
    if best is not None:
        report.measured["best_alpha"], report.measured["best_ratio"] = best
    if 3 * k <= 4 * i + 2:
        report.notes.append("k <= (4i+2)/3: phi_upper is exact here")
    return report
