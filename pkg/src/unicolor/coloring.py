"""Proper colorings, equivalence up to color permutation, and enumeration.

A coloring of an ``r``-graph with ``k`` colors is proper when every edge
receives ``r`` distinct colors.  Since an edge is rainbow exactly when each
pair inside it is, the search only needs the graph of covered pairs.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .core import Hypergraph, has_isolated, min_positive_degree
from .report import FAIL, PASS, SKIPPED, Report

__all__ = [
    "Coloring",
    "PartProfile",
    "Uniqueness",
    "is_proper",
    "canonicalize",
    "are_equivalent",
    "enumerate_classes",
    "uniqueness_status",
    "is_uniquely_colorable",
    "classify_parts",
    "structural_threshold",
    "check_structural_props",
]


@dataclass(frozen=True)
class Coloring:
    """Total map from vertices ``1..n`` to colors ``1..k``.

    ``assignment[v - 1]`` is the color of vertex ``v``.
    """

    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        assignment = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if self.k < 1:
            raise ValueError(f"need at least one color, got k={self.k}")
        bad = [c for c in assignment if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colors must lie in 1..{self.k}, got {bad[0]}")

    @property
    def n(self) -> int:
        return len(self.assignment)

    def __call__(self, v: int) -> int:
        return self.assignment[v - 1]

    def color_class(self, color: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.assignment, 1) if c == color)

    def sizes(self) -> tuple[int, ...]:
        counts = [0] * self.k
        for c in self.assignment:
            counts[c - 1] += 1
        return tuple(counts)

    def image(self, vertices: Iterable[int] | None = None) -> frozenset[int]:
        if vertices is None:
            return frozenset(self.assignment)
        return frozenset(self.assignment[v - 1] for v in vertices)


@dataclass(frozen=True)
class PartProfile:
    """Sizes of the color classes with the sets of good and large colors."""

    sizes: tuple[int, ...]
    good: frozenset[int]
    large: frozenset[int]


class Uniqueness(enum.Enum):
    UNIQUE = "UNIQUE"
    NOT_UNIQUE = "NOT_UNIQUE"
    NOT_COLORABLE = "NOT_COLORABLE"


def _check_sizes(H: Hypergraph, c: Coloring) -> None:
    if c.n != H.n:
        raise ValueError(f"coloring covers {c.n} vertices, hypergraph has {H.n}")


def is_proper(H: Hypergraph, c: Coloring) -> bool:
    """True iff every edge of ``H`` gets ``r`` distinct colors under ``c``.

    With fewer colors than the uniformity this is false for any nonempty ``H``.
    """
    _check_sizes(H, c)
    if len(H) == 0:
        return True
    if c.k < H.r:
        return False
    colors = np.asarray(c.assignment, dtype=np.int32)[H.edge_array - 1]
    colors.sort(axis=1)
    return bool((np.diff(colors, axis=1) != 0).all())


def canonicalize(c: Coloring) -> Coloring:
    """Relabel colors in order of first appearance along ``1..n``."""
    relabel: dict[int, int] = {}
    out = []
    for color in c.assignment:
        if color not in relabel:
            relabel[color] = len(relabel) + 1
        out.append(relabel[color])
    return Coloring(c.k, tuple(out))


def are_equivalent(c1: Coloring, c2: Coloring) -> bool:
    """True iff a permutation of the colors maps ``c1`` onto ``c2``."""
    if c1.k != c2.k or c1.n != c2.n:
        raise ValueError("colorings must share k and n to be compared")
    return canonicalize(c1).assignment == canonicalize(c2).assignment


def _adjacency(H: Hypergraph) -> list[int]:
    """Bitmask adjacency of the covered-pair graph on 0-based vertex indices."""
    if H.r < 2 or len(H) == 0:
        return [0] * H.n
    pairs = H.pair_matrix()[1:, 1:]
    weights = [1 << j for j in range(H.n)]
    return [sum(weights[j] for j in np.flatnonzero(row)) for row in pairs]


class _Enough(Exception):
    pass


def enumerate_classes(H: Hypergraph, k: int, limit: int | None = None) -> list[Coloring]:
    """One canonical coloring per equivalence class of proper ``k``-colorings.

    The search is a backtracking over vertices in descending order of degree
    in the covered-pair graph (ties by label) with forward checking; a vertex
    may only open the next unused color, so each class is met exactly once.

    Parameters
    ----------
    H : Hypergraph
    k : int
        Number of colors, at least 1.
    limit : int, optional
        Stop once this many classes are found.  Unbounded when ``None``.

    Returns
    -------
    list of Coloring
        Canonical representatives sorted lexicographically.  When ``limit``
        cuts the search short these are the first ``limit`` classes reached by
        the search, not necessarily the lexicographically smallest.
    """
    if k < 1:
        raise ValueError(f"need at least one color, got k={k}")
    if limit is not None and limit < 1:
        return []
    n = H.n
    if len(H) and k < H.r:
        return []
    adj = _adjacency(H)
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    full = (1 << k) - 1
    avail = [full] * n
    color = [0] * n
    found: list[tuple[int, ...]] = []

    def record() -> None:
        relabel: dict[int, int] = {}
        out = []
        for col in color:
            if col not in relabel:
                relabel[col] = len(relabel) + 1
            out.append(relabel[col])
        found.append(tuple(out))
        if limit is not None and len(found) >= limit:
            raise _Enough

    def search(t: int, used: int) -> None:
        if t == n:
            record()
            return
        v = order[t]
        options = avail[v] & ((1 << min(used + 1, k)) - 1)
        while options:
            bit = options & -options
            options ^= bit
            touched = []
            dead = False
            nbrs = adj[v]
            while nbrs:
                low = nbrs & -nbrs
                nbrs ^= low
                w = low.bit_length() - 1
                if color[w] == 0 and avail[w] & bit:
                    avail[w] ^= bit
                    touched.append(w)
                    if avail[w] == 0:
                        dead = True
                        break
            if not dead:
                color[v] = bit.bit_length()
                search(t + 1, max(used, color[v]))
                color[v] = 0
            for w in touched:
                avail[w] |= bit

    try:
        search(0, 0)
    except _Enough:
        pass
    return [Coloring(k, a) for a in sorted(found)]


def uniqueness_status(H: Hypergraph, k: int) -> Uniqueness:
    """Classify ``H`` as uniquely, non-uniquely, or not ``k``-colorable."""
    count = len(enumerate_classes(H, k, limit=2))
    if count == 0:
        return Uniqueness.NOT_COLORABLE
    return Uniqueness.UNIQUE if count == 1 else Uniqueness.NOT_UNIQUE


def is_uniquely_colorable(H: Hypergraph, k: int) -> bool:
    """True iff ``H`` has exactly one proper ``k``-coloring up to permuting colors.

    Non-colorable inputs give ``False``; use :func:`uniqueness_status` to tell
    them apart from non-unique ones.
    """
    return uniqueness_status(H, k) is Uniqueness.UNIQUE


def classify_parts(H: Hypergraph, c: Coloring) -> PartProfile:
    """Sizes of the color classes of a proper coloring, plus good and large colors.

    A class is good when its size is at least ``n/(k+2)`` and large when it is
    at least ``3n/(3k-2)``; both comparisons are exact.
    """
    if not is_proper(H, c):
        raise ValueError("classify_parts needs a proper coloring")
    sizes = c.sizes()
    good_at = Fraction(c.n, c.k + 2)
    large_at = Fraction(3 * c.n, 3 * c.k - 2)
    good = frozenset(j for j, s in enumerate(sizes, 1) if s >= good_at)
    large = frozenset(j for j, s in enumerate(sizes, 1) if s >= large_at)
    return PartProfile(sizes, good, large)


def structural_threshold(k: int, r: int) -> Fraction:
    """``max{(3k-3r+1)/(3k-2), (k-r+1)/(k+2)}``, the codegree density hypothesis."""
    return max(Fraction(3 * k - 3 * r + 1, 3 * k - 2), Fraction(k - r + 1, k + 2))


def check_structural_props(H: Hypergraph, k: int) -> Report:
    """Check surjectivity and ``|J| <= r - 2`` on every coloring class.

    Only meaningful when ``H`` has no isolated vertices and its minimum
    positive codegree strictly exceeds :func:`structural_threshold` times
    ``n``; otherwise the report is ``SKIPPED``.
    """
    report = Report("structural_props", params={"k": k, "r": H.r, "n": H.n, "edges": len(H)})
    delta = min_positive_degree(H, H.r - 1) if H.r > 1 else None
    bound = structural_threshold(k, H.r) * H.n
    report.measured.update(delta=delta, bound=bound)
    if delta is None or has_isolated(H) or not delta > bound:
        report.verdict = SKIPPED
        report.notes.append("codegree hypothesis does not hold")
        return report
    classes = enumerate_classes(H, k)
    report.measured["classes"] = len(classes)
    if not classes:
        report.verdict = SKIPPED
        report.notes.append(Uniqueness.NOT_COLORABLE.value)
        return report
    report.verdict = PASS
    for c in classes:
        profile = classify_parts(H, c)
        if c.image() != frozenset(range(1, k + 1)):
            report.fail(f"coloring {c.assignment} is not surjective")
        if len(profile.large) > H.r - 2:
            report.fail(f"coloring {c.assignment} has {len(profile.large)} large classes")
    if report.verdict == FAIL:
        from .hgr import dumps

        report.counterexample = dumps(H)
    return report
