"""Plain-text hypergraph files.

Format::

    # comments start with '#'
    n r
    v1 v2 ... vr
    ...

The header gives the vertex count and the uniformity; each further line is an
edge of ``r`` distinct 1-based vertex indices.  Blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path

from .core import Hypergraph

__all__ = ["HgrFormatError", "loads", "dumps", "load", "dump"]


class HgrFormatError(ValueError):
    """Malformed hypergraph text; ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def loads(text: str) -> Hypergraph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise HgrFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(values) != 2:
                raise HgrFormatError("header must be 'n r'", lineno)
            n, r = values
            if n < 0 or r < 1:
                raise HgrFormatError(f"invalid header n={n} r={r}", lineno)
            header = (n, r)
            continue
        n, r = header
        if len(values) != r:
            raise HgrFormatError(f"edge has {len(values)} vertices, expected {r}", lineno)
        if any(not 1 <= v <= n for v in values):
            raise HgrFormatError(f"vertex index outside 1..{n}", lineno)
        edge = tuple(sorted(values))
        if len(set(edge)) != r:
            raise HgrFormatError("edge repeats a vertex", lineno)
        if edge in seen:
            raise HgrFormatError(f"duplicate edge (first on line {seen[edge]})", lineno)
        seen[edge] = lineno
        edges.append(edge)
    if header is None:
        raise HgrFormatError("missing 'n r' header")
    return Hypergraph(header[1], header[0], edges)


def dumps(H: Hypergraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{H.n} {H.r}")
    lines.extend(" ".join(map(str, e)) for e in H.edge_array.tolist())
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> Hypergraph:
    return loads(Path(path).read_text())


def dump(H: Hypergraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(H, comment))
