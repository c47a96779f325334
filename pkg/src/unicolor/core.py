"""Uniform hypergraphs, vertex sets, shadows, links and positive degrees.

Vertices are the integers ``1..n``.  A :class:`Hypergraph` keeps its edges as
a lexicographically sorted, duplicate-free ``(|H|, r)`` integer array whose
rows are sorted, so two equal hypergraphs always have identical storage.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "VertexSet",
    "Hypergraph",
    "shadow",
    "link",
    "degree",
    "min_positive_degree",
    "has_isolated",
    "pair_covered",
]

#: Exact rational numbers; arbitrary-precision numerator and denominator.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")
_INT64_MAX = np.iinfo(np.int64).max


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"P/Q"`` or ``"P"`` into a reduced :class:`~fractions.Fraction`.

    Decimal notation is refused so that no value silently passes through
    floating point.
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational of the form P/Q: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: int | Fraction) -> str:
    """Render a rational as ``"P/Q"`` in lowest terms (``Q`` always printed)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class VertexSet:
    """An immutable set of positive vertex labels backed by an integer bitmask.

    Bit ``v`` of :attr:`mask` is set iff vertex ``v`` is a member.
    """

    __slots__ = ("_mask",)

    def __init__(self, members: Iterable[int] = ()):
        mask = 0
        for v in members:
            v = int(v)
            if v < 1:
                raise ValueError(f"vertex labels are positive integers, got {v}")
            mask |= 1 << v
        self._mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0 or mask & 1:
            raise ValueError("mask must be non-negative with bit 0 clear")
        out = cls.__new__(cls)
        out._mask = mask
        return out

    @property
    def mask(self) -> int:
        return self._mask

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and v >= 1 and bool(self._mask >> int(v) & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self._mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask | _mask_of(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & _mask_of(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & ~_mask_of(other))

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask ^ _mask_of(other))

    def __le__(self, other: "VertexSet") -> bool:
        return self._mask & ~_mask_of(other) == 0

    def __ge__(self, other: "VertexSet") -> bool:
        return _mask_of(other) & ~self._mask == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self._mask == other._mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("VertexSet", self._mask))

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"

    def max(self) -> int:
        return self._mask.bit_length() - 1


def _mask_of(s: VertexSet | Iterable[int]) -> int:
    return s.mask if isinstance(s, VertexSet) else VertexSet(s).mask


def _encode(rows: np.ndarray, base: int) -> np.ndarray | None:
    """Mixed-radix int64 keys that preserve lexicographic row order.

    Returns ``None`` when the keys could overflow.
    """
    width = rows.shape[1]
    if width == 0 or base**width > _INT64_MAX:
        return None
    keys = np.zeros(rows.shape[0], dtype=np.int64)
    for j in range(width):
        keys *= base
        keys += rows[:, j]
    return keys


def _decode(keys: np.ndarray, base: int, width: int) -> np.ndarray:
    rows = np.empty((keys.shape[0], width), dtype=np.int32)
    rest = keys.copy()
    for j in range(width - 1, -1, -1):
        rows[:, j] = rest % base
        rest //= base
    return rows


def _unique_rows(rows: np.ndarray, base: int) -> np.ndarray:
    if rows.shape[0] == 0:
        return rows
    keys = _encode(rows, base)
    if keys is None:
        return np.unique(rows, axis=0)
    _, idx = np.unique(keys, return_index=True)
    return rows[idx]


def _count_rows(chunks: list[np.ndarray], base: int, width: int) -> tuple[np.ndarray, np.ndarray]:
    """Distinct rows over all chunks with their multiplicities, sorted lexicographically."""
    if not chunks or sum(c.shape[0] for c in chunks) == 0:
        return np.empty((0, width), dtype=np.int32), np.empty(0, dtype=np.int64)
    if base**width > _INT64_MAX:
        allrows = np.concatenate(chunks)
        uniq, counts = np.unique(allrows, axis=0, return_counts=True)
        return uniq.astype(np.int32), counts.astype(np.int64)
    # reduce chunk by chunk to bound peak memory on large hypergraphs
    keys_acc, counts_acc = [], []
    for chunk in chunks:
        keys, counts = np.unique(_encode(chunk, base), return_counts=True)
        keys_acc.append(keys)
        counts_acc.append(counts)
    keys = np.concatenate(keys_acc)
    counts = np.concatenate(counts_acc)
    uniq, inverse = np.unique(keys, return_inverse=True)
    total = np.bincount(inverse.ravel(), weights=counts, minlength=uniq.shape[0]).astype(np.int64)
    return _decode(uniq, base, width), total


class Hypergraph:
    """An ``r``-uniform hypergraph on the vertex set ``{1, ..., n}``.

    Parameters
    ----------
    r : int
        Uniformity, at least 1.
    n : int
        Number of vertices.  Vertices lying in no edge are allowed.
    edges : iterable of iterables of int, or array of shape ``(m, r)``
        The edges.  Each edge is sorted on input and duplicates are merged.

    Raises
    ------
    ValueError
        If an edge does not have exactly ``r`` distinct vertices in ``1..n``.
    """

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] | np.ndarray = ()):
        r, n = int(r), int(n)
        if r < 1:
            raise ValueError(f"uniformity must be at least 1, got {r}")
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if isinstance(edges, np.ndarray):
            arr = edges
        else:
            edges = [tuple(e) for e in edges]
            if any(len(e) != r for e in edges):
                bad = next(e for e in edges if len(e) != r)
                raise ValueError(f"edge {bad} does not have exactly {r} vertices")
            arr = np.array(edges, dtype=np.int64).reshape(-1, r)
        if arr.ndim != 2 or arr.shape[1] != r:
            raise ValueError(f"edge array must have shape (m, {r}), got {arr.shape}")
        arr = np.sort(arr.astype(np.int32, copy=False), axis=1)
        if arr.size:
            if arr.min() < 1 or arr.max() > n:
                raise ValueError(f"edge vertices must lie in 1..{n}")
            if r > 1 and not (np.diff(arr, axis=1) > 0).all():
                raise ValueError("an edge repeats a vertex")
        self._init(r, n, _unique_rows(arr, n + 1))

    @classmethod
    def _trusted(cls, r: int, n: int, arr: np.ndarray) -> "Hypergraph":
        """Wrap an already sorted, deduplicated, validated edge array."""
        out = cls.__new__(cls)
        out._init(r, n, arr)
        return out

    def _init(self, r: int, n: int, arr: np.ndarray) -> None:
        arr = np.ascontiguousarray(arr, dtype=np.int32)
        arr.setflags(write=False)
        self._r = r
        self._n = n
        self._arr = arr
        self._subsets: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._pairs: np.ndarray | None = None
        self._edge_tuples: tuple[tuple[int, ...], ...] | None = None
        self._index: frozenset | None = None

    @property
    def r(self) -> int:
        return self._r

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_array(self) -> np.ndarray:
        """Read-only ``(|H|, r)`` array of edges in canonical order."""
        return self._arr

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        if self._edge_tuples is None:
            self._edge_tuples = tuple(map(tuple, self._arr.tolist()))
        return self._edge_tuples

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    def __len__(self) -> int:
        return self._arr.shape[0]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.edges)

    def __contains__(self, edge: object) -> bool:
        if self._index is None:
            self._index = frozenset(self.edges)
        try:
            return tuple(sorted(edge)) in self._index  # type: ignore[arg-type]
        except TypeError:
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self._r == other._r
            and self._n == other._n
            and np.array_equal(self._arr, other._arr)
        )

    def __hash__(self) -> int:
        return hash((self._r, self._n, self._arr.tobytes()))

    def __repr__(self) -> str:
        return f"Hypergraph(r={self._r}, n={self._n}, edges={len(self)})"

    def subset_degrees(self, size: int) -> tuple[np.ndarray, np.ndarray]:
        """All ``size``-subsets of edges with the number of edges containing each.

        Returns the sorted ``(s, size)`` array of distinct subsets and the
        matching count array.  Results are cached per ``size``.
        """
        if not 1 <= size <= self._r:
            raise ValueError(f"subset size must be in 1..{self._r}, got {size}")
        cached = self._subsets.get(size)
        if cached is None:
            chunks = [self._arr[:, list(c)] for c in combinations(range(self._r), size)]
            cached = _count_rows(chunks, self._n + 1, size)
            self._subsets[size] = cached
        return cached

    def pair_matrix(self) -> np.ndarray:
        """Boolean ``(n+1, n+1)`` matrix; entry ``[u, v]`` is set iff ``{u, v}`` lies in an edge."""
        if self._pairs is None:
            pairs = np.zeros((self._n + 1, self._n + 1), dtype=bool)
            for a, b in combinations(range(self._r), 2):
                pairs[self._arr[:, a], self._arr[:, b]] = True
            pairs |= pairs.T
            pairs.setflags(write=False)
            self._pairs = pairs
        return self._pairs

    def vertex_degrees(self) -> np.ndarray:
        """Array of length ``n + 1``; entry ``v`` is the number of edges through ``v``."""
        return np.bincount(self._arr.ravel(), minlength=self._n + 1)


def shadow(H: Hypergraph, i: int = 1) -> Hypergraph:
    """The ``i``-th shadow: every ``(r - i)``-set contained in some edge.

    ``shadow(H, 0)`` is ``H`` itself.
    """
    if not 0 <= i < H.r:
        raise ValueError(f"shadow order must be in 0..{H.r - 1}, got {i}")
    if i == 0:
        return H
    rows, _ = H.subset_degrees(H.r - i)
    return Hypergraph._trusted(H.r - i, H.n, rows)


def _checked_set(H: Hypergraph, S: VertexSet | Iterable[int]) -> list[int]:
    members = sorted(S if isinstance(S, VertexSet) else VertexSet(S))
    if not 1 <= len(members) <= H.r - 1:
        raise ValueError(f"|S| must be in 1..{H.r - 1}, got {len(members)}")
    if members[-1] > H.n:
        raise ValueError(f"S must be a subset of 1..{H.n}")
    return members


def _containing(H: Hypergraph, members: list[int]) -> np.ndarray:
    arr = H.edge_array
    mask = np.ones(arr.shape[0], dtype=bool)
    for v in members:
        mask &= (arr == v).any(axis=1)
    return arr[mask]


def link(H: Hypergraph, S: VertexSet | Iterable[int]) -> Hypergraph:
    """The ``(r - |S|)``-graph of sets ``e`` with ``S ∪ e`` an edge of ``H``.

    The result keeps the vertex labels of ``H``; the members of ``S`` are
    isolated in it.
    """
    members = _checked_set(H, S)
    rows = _containing(H, members)
    keep = ~np.isin(rows, members)
    rest = rows[keep].reshape(rows.shape[0], H.r - len(members))
    return Hypergraph._trusted(H.r - len(members), H.n, rest)


def degree(H: Hypergraph, S: VertexSet | Iterable[int]) -> int:
    """Number of edges containing ``S``, i.e. the size of its link."""
    return int(_containing(H, _checked_set(H, S)).shape[0])


def min_positive_degree(H: Hypergraph, i: int) -> int | None:
    """Minimum degree over the ``i``-sets that lie in some edge.

    ``i = r - 1`` gives the minimum positive codegree.  Returns ``None`` for a
    hypergraph without edges, where the minimum ranges over an empty set.
    """
    if not 1 <= i <= H.r - 1:
        raise ValueError(f"i must be in 1..{H.r - 1}, got {i}")
    if len(H) == 0:
        return None
    _, counts = H.subset_degrees(i)
    return int(counts.min())


def has_isolated(H: Hypergraph) -> bool:
    """True iff some vertex of ``1..n`` lies in no edge."""
    return bool((H.vertex_degrees()[1:] == 0).any())


def pair_covered(H: Hypergraph, u: int, v: int) -> bool:
    """True iff the distinct vertices ``u`` and ``v`` lie in a common edge."""
    if u == v:
        raise ValueError("pair_covered needs two distinct vertices")
    if not (1 <= u <= H.n and 1 <= v <= H.n):
        raise ValueError(f"vertices must lie in 1..{H.n}")
    return bool(H.pair_matrix()[u, v])
