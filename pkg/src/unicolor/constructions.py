"""Extremal constructions and seeded random instance generators.

Vertex labels are fixed so generated hypergraphs are byte-stable.  For the
two-sided construction ``H_{k,r}(alpha, m)`` the blocks are laid out as::

    V_1, ..., V_{k-2}                (floor(alpha*m) vertices each)
    V_{k-1,1}, V_{k-1,2}, V_{k,1}, V_{k,2}   (m vertices each)

with consecutive labels starting from 1.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .coloring import Coloring
from .core import Hypergraph, has_isolated, min_positive_degree, parse_rational

__all__ = [
    "ConstructionSpec",
    "build_construction",
    "hkr",
    "build_quasi_sunflower",
    "build_nested_sunflowers",
    "complete_kpartite",
    "kpartite_feasible",
    "sample_kpartite_above",
    "random_kpartite",
    "compositions",
    "trial_rng",
]

log = logging.getLogger(__name__)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, derived from ``(seed, trial)``."""
    return np.random.default_rng([int(seed), int(trial)])


def _blocks(sizes: Sequence[int]) -> list[np.ndarray]:
    out, start = [], 1
    for s in sizes:
        out.append(np.arange(start, start + s, dtype=np.int32))
        start += s
    return out


def _rainbow(blocks: Sequence[np.ndarray], r: int) -> np.ndarray:
    """All ``r``-sets taking at most one vertex from each block."""
    parts = []
    for combo in combinations(range(len(blocks)), r):
        grids = np.meshgrid(*(blocks[j] for j in combo), indexing="ij")
        parts.append(np.stack([g.ravel() for g in grids], axis=1))
    if not parts:
        return np.empty((0, r), dtype=np.int32)
    return np.concatenate(parts)


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of ``H_{k,r}(alpha, m)``.

    ``k = 2`` is accepted as the degenerate graph case with no common blocks,
    giving two disjoint copies of ``K_{m,m}``.
    """

    k: int
    r: int
    alpha: Fraction
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        if not self.k >= self.r >= 2:
            raise ValueError(f"need k >= r >= 2, got k={self.k}, r={self.r}")
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if self.k >= 3 and self.block < 1:
            raise ValueError(f"floor(alpha*m) = 0 for alpha={self.alpha}, m={self.m}")

    @property
    def block(self) -> int:
        """Size of each common block ``V_1, ..., V_{k-2}``."""
        return math.floor(self.alpha * self.m)

    @property
    def n(self) -> int:
        return (self.k - 2) * self.block + 4 * self.m


def build_construction(spec: ConstructionSpec) -> tuple[Hypergraph, Coloring, Coloring]:
    """Build ``H_{k,r}(alpha, m)`` with its two inequivalent colorings.

    Edges are the rainbow ``r``-sets of ``U_1`` (common blocks with
    ``V_{k-1,1}`` and ``V_{k,1}``) and of ``U_2`` (common blocks with
    ``V_{k-1,2}`` and ``V_{k,2}``).  The first coloring gives both halves of
    a pair the same color; the second crosses them.
    """
    k, m, b = spec.k, spec.m, spec.block
    common = _blocks([b] * (k - 2))
    a1, a2, c1, c2 = _blocks([m] * 4)
    offset = (k - 2) * b
    a1, a2, c1, c2 = (x + offset for x in (a1, a2, c1, c2))
    edges = np.concatenate([_rainbow(common + [a1, c1], spec.r), _rainbow(common + [a2, c2], spec.r)])
    H = Hypergraph(spec.r, spec.n, edges)

    base = [i + 1 for i in range(k - 2) for _ in range(b)]
    psi1 = base + [k - 1] * (2 * m) + [k] * (2 * m)
    psi2 = base + [k - 1] * m + [k] * m + [k] * m + [k - 1] * m
    return H, Coloring(k, psi1), Coloring(k, psi2)


def hkr(k: int, r: int, alpha: Fraction | int | str, m: int) -> tuple[Hypergraph, Coloring, Coloring]:
    """Shorthand for ``build_construction(ConstructionSpec(k, r, alpha, m))``."""
    return build_construction(ConstructionSpec(k, r, parse_rational(alpha), m))


def _quasi_sunflower_edges(r: int, order: Sequence[int]) -> list[tuple[int, ...]]:
    m = len(order)
    q = (m - 1) // (r - 1)
    tip = order[-1]
    edges = [tuple(order[j * (r - 1):(j + 1) * (r - 1)]) + (tip,) for j in range(q)]
    edges.append(tuple(order[m - r:]))
    return list(dict.fromkeys(tuple(sorted(e)) for e in edges))


def build_quasi_sunflower(r: int, m: int) -> Hypergraph:
    """Quasi-sunflower on ``(1, ..., m)``: ``floor((m-1)/(r-1))`` petals and a tail, all through ``m``."""
    if not m >= r >= 2:
        raise ValueError(f"need m >= r >= 2, got r={r}, m={m}")
    return Hypergraph(r, m, _quasi_sunflower_edges(r, range(1, m + 1)))


def build_nested_sunflowers(r: int, m: int) -> Hypergraph:
    """Union of the quasi-sunflowers on ``(1, ..., j)`` for ``j = r, ..., m``."""
    if not m >= r >= 2:
        raise ValueError(f"need m >= r >= 2, got r={r}, m={m}")
    edges: list[tuple[int, ...]] = []
    for j in range(r, m + 1):
        edges.extend(_quasi_sunflower_edges(r, range(1, j + 1)))
    return Hypergraph(r, m, edges)


def complete_kpartite(r: int, sizes: Sequence[int]) -> tuple[Hypergraph, Coloring]:
    """Complete ``len(sizes)``-partite ``r``-graph and its defining coloring.

    Parts get consecutive labels in the order given.
    """
    sizes = [int(s) for s in sizes]
    if len(sizes) < r:
        raise ValueError(f"need at least r={r} parts, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError("every part needs at least one vertex")
    H = Hypergraph(r, sum(sizes), _rainbow(_blocks(sizes), r))
    colors = [j + 1 for j, s in enumerate(sizes) for _ in range(s)]
    return H, Coloring(len(sizes), colors)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[j + 1] - bounds[j] for j in range(parts))


def _degree_cap(threshold: Fraction, n: int, r: int, i: int) -> int:
    """Largest integer degree that fails ``degree > threshold * n^(r-i)``."""
    return math.floor(Fraction(threshold) * n ** (r - i))


def kpartite_feasible(r: int, sizes: Sequence[int], threshold: Fraction, i: int | None = None) -> bool:
    """Whether the complete k-partite host already clears the degree threshold."""
    i = r - 1 if i is None else i
    H, _ = complete_kpartite(r, sizes)
    delta = min_positive_degree(H, i)
    return delta is not None and delta > _degree_cap(threshold, H.n, r, i)


def sample_kpartite_above(
    k: int,
    r: int,
    sizes: Sequence[int],
    threshold: Fraction,
    trials: int,
    seed: int,
    i: int | None = None,
) -> Iterator[Hypergraph]:
    """Random k-partite hypergraphs whose positive minimum degree stays above a threshold.

    Each trial starts from the complete k-partite ``r``-graph on ``sizes`` and
    makes a random number of attempts to delete a uniformly random edge.  A
    deletion is refused if it would leave a vertex isolated or bring some
    ``i``-set of positive degree down to at most ``threshold * n^(r-i)``.

    Trial ``t`` draws from ``trial_rng(seed, t)`` so trials are independent
    of each other and of execution order.  When even the complete host fails
    the threshold nothing is generated and a warning is logged.
    """
    sizes = [int(s) for s in sizes]
    if len(sizes) != k:
        raise ValueError(f"expected {k} part sizes, got {len(sizes)}")
    i = r - 1 if i is None else i
    if not 1 <= i <= r - 1:
        raise ValueError(f"i must be in 1..{r - 1}, got {i}")
    host, _ = complete_kpartite(r, sizes)
    n = host.n
    cap = _degree_cap(threshold, n, r, i)
    delta = min_positive_degree(host, i)
    if delta is None or delta <= cap:
        log.warning("complete %d-partite host %s fails degree > %s * n^%d", k, sizes, threshold, r - i)
        return
    host_edges = host.edges
    for t in range(trials):
        rng = trial_rng(seed, t)
        alive = list(host_edges)
        counts: dict[tuple[int, ...], int] = {}
        for e in alive:
            for s in combinations(e, i):
                counts[s] = counts.get(s, 0) + 1
        vdeg = [0] * (n + 1)
        for e in alive:
            for v in e:
                vdeg[v] += 1
        attempts = int(rng.integers(0, 3 * len(alive) + 1))
        for _ in range(attempts):
            j = int(rng.integers(len(alive)))
            e = alive[j]
            subs = list(combinations(e, i))
            if any(vdeg[v] == 1 for v in e) or any(0 < counts[s] - 1 <= cap for s in subs):
                continue
            for s in subs:
                counts[s] -= 1
            for v in e:
                vdeg[v] -= 1
            alive[j] = alive[-1]
            alive.pop()
        H = Hypergraph(r, n, alive)
        # exact re-check through the core path, independent of the counters above
        assert not has_isolated(H) and min_positive_degree(H, i) > cap
        yield H


def random_kpartite(
    r: int, sizes: Sequence[int], p: float, rng: np.random.Generator
) -> tuple[Hypergraph, Coloring]:
    """Keep each edge of the complete k-partite host independently with probability ``p``."""
    host, coloring = complete_kpartite(r, sizes)
    keep = rng.random(len(host)) < p
    return Hypergraph._trusted(r, host.n, host.edge_array[keep]), coloring
