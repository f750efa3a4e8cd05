"""Hypergraph data model, file formats, and (t,s)-coloring verification.

A (t,s)-coloring assigns one of t colors to every vertex so that each
color shows up at least s times on every edge; (2,1) is the classical
property-B two-coloring (no monochromatic edge).  Everything here is an
immutable value object, safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class FormatError(ValueError):
    """Malformed hypergraph or coloring text."""


@dataclass(frozen=True)
class Hypergraph:
    """n vertices (0..n-1) plus a duplicate-free list of canonical edges.

    Each edge is a strictly increasing tuple of vertex indices.  Use
    :meth:`from_edges` to build one from arbitrary vertex iterables.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, ...]] = set()
        for f in self.edges:
            if not f:
                raise ValueError("empty edge")
            if any(v < 0 or v >= self.n for v in f):
                raise ValueError(f"vertex index out of range in edge {f}")
            if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
                raise ValueError(f"edge {f} is not strictly sorted")
            if f in seen:
                raise ValueError(f"duplicate edge {f}")
            seen.add(f)

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Canonicalize: sort each edge, then validate the invariants."""
        canon = []
        for f in edges:
            fl = list(f)
            vs = tuple(sorted(set(fl)))
            if len(vs) != len(fl):
                raise ValueError(f"repeated vertex in edge {fl}")
            canon.append(vs)
        return cls(n, tuple(canon))


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color assignment with colors drawn from 0..t-1."""

    assignment: tuple[int, ...]
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("color count must be positive")
        if any(c < 0 or c >= self.t for c in self.assignment):
            raise ValueError("color out of range")


@dataclass(frozen=True)
class VerificationReport:
    """valid iff violations is empty; each violation is (edge, color, count < s)."""

    valid: bool
    violations: tuple[tuple[int, int, int], ...]


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the hypergraph file format.

    Lines starting with '#' are comments; blank lines are skipped.  The
    first data line is "n m", followed by exactly m edge lines of
    whitespace-separated vertex indices (any order; output is sorted).
    """
    rows = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("missing header line 'n m'")
    head = rows[0].split()
    if len(head) != 2:
        raise FormatError(f"malformed header {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"malformed header {rows[0]!r}, expected integers") from None
    if n < 0 or m < 0:
        raise FormatError("header counts must be non-negative")
    if len(rows) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        try:
            vs = [int(tok) for tok in ln.split()]
        except ValueError:
            raise FormatError(f"non-integer vertex in edge line {ln!r}") from None
        if not vs:
            raise FormatError("empty edge line")
        if len(set(vs)) != len(vs):
            raise FormatError(f"repeated vertex in edge line {ln!r}")
        if any(v < 0 or v >= n for v in vs):
            raise FormatError(f"vertex index out of range in edge line {ln!r}")
        edges.append(tuple(sorted(vs)))
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    return Hypergraph(n, tuple(edges))


def hypergraph_to_text(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(str(v) for v in f) for f in h.edges)
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int, t: int) -> Coloring:
    """Parse "v c" lines (comments allowed); every vertex exactly once."""
    assignment: list[int | None] = [None] * n
    for ln in text.splitlines():
        if not ln.strip() or ln.lstrip().startswith("#"):
            continue
        toks = ln.split()
        if len(toks) != 2:
            raise FormatError(f"malformed coloring line {ln!r}, expected 'v c'")
        try:
            v, c = int(toks[0]), int(toks[1])
        except ValueError:
            raise FormatError(f"non-integer in coloring line {ln!r}") from None
        if v < 0 or v >= n:
            raise FormatError(f"vertex {v} out of range")
        if c < 0 or c >= t:
            raise FormatError(f"color {c} out of range for t={t}")
        if assignment[v] is not None:
            raise FormatError(f"vertex {v} assigned twice")
        assignment[v] = c
    missing = [v for v, c in enumerate(assignment) if c is None]
    if missing:
        raise FormatError(f"vertices without a color: {missing[:10]}")
    return Coloring(tuple(assignment), t)  # type: ignore[arg-type]


def coloring_to_text(c: Coloring) -> str:
    return "\n".join(f"{v} {col}" for v, col in enumerate(c.assignment)) + "\n"


def min_edge_size(h: Hypergraph) -> int:
    """Smallest edge cardinality (the k of the LLL condition)."""
    if not h.edges:
        raise ValueError("edgeless hypergraph has no minimum edge size")
    return min(len(f) for f in h.edges)


def vertex_incidence(h: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """For each vertex, the sorted tuple of edge indices containing it."""
    inc: list[list[int]] = [[] for _ in range(h.n)]
    for i, f in enumerate(h.edges):
        for v in f:
            inc[v].append(i)
    return tuple(tuple(es) for es in inc)


def edge_overlap_adjacency(h: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """For each edge, the sorted tuple of *other* edges it intersects.

    Computed once from the vertex incidence map; reused by the event
    graph builder and the solver's dirty-event tracking.
    """
    neigh: list[set[int]] = [set() for _ in range(h.m)]
    for es in vertex_incidence(h):
        for a in es:
            neigh[a].update(es)
    for i in range(h.m):
        neigh[i].discard(i)
    return tuple(tuple(sorted(s)) for s in neigh)


def max_overlap_degree(h: Hypergraph) -> int:
    """Largest number of other edges any single edge intersects (the d)."""
    if not h.edges:
        raise ValueError("edgeless hypergraph has no overlap degree")
    return max(len(s) for s in edge_overlap_adjacency(h))


def verify_coloring(h: Hypergraph, c: Coloring, s: int) -> VerificationReport:
    """Check that every color appears at least s times on every edge."""
    if len(c.assignment) != h.n:
        raise ValueError(f"coloring length {len(c.assignment)} != vertex count {h.n}")
    if c.t < 2:
        raise ValueError("need at least two colors")
    if s < 1:
        raise ValueError("s must be positive")
    violations = []
    for i, f in enumerate(h.edges):
        counts = [0] * c.t
        for v in f:
            counts[c.assignment[v]] += 1
        for col in range(c.t):
            if counts[col] < s:
                violations.append((i, col, counts[col]))
    return VerificationReport(not violations, tuple(violations))
