"""Triangulated closed pseudomanifolds and their combinatorial invariants.

A complex is stored as its simplicial triangulation: an ``n``-dimensional
``Triangulation`` lists the top simplices as (n+1)-element vertex sets.  The
dual cell structure (regions at the vertices, one dual vertex per simplex,
dual edges at the shared facets, dual 2-cells at the codimension-2 faces) is
derived on demand and never materialised.

Everything here is immutable and every function is pure, so concurrent use on
shared inputs is safe.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import FormatError


@dataclass(frozen=True)
class Triangulation:
    """A pure n-dimensional simplicial complex given by its top simplices.

    ``simplices`` holds sorted vertex tuples in lexicographic order; the
    integer position of a simplex in this tuple is its *simplex id*.  Vertex
    ids are arbitrary non-negative integers and are preserved verbatim.
    """

    dimension: int
    simplices: tuple[tuple[int, ...], ...]

    @classmethod
    def from_simplices(cls, dimension, simplices) -> "Triangulation":
        """Normalise and arity-check a collection of vertex sets."""
        if dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {dimension}")
        normalised = []
        for simplex in simplices:
            verts = tuple(sorted(simplex))
            if len(set(verts)) != len(verts):
                raise ValueError(f"repeated vertex in simplex {verts}")
            if len(verts) != dimension + 1:
                raise ValueError(
                    f"simplex {verts} has {len(verts)} vertices, expected {dimension + 1}"
                )
            if any(v < 0 for v in verts):
                raise ValueError(f"negative vertex id in simplex {verts}")
            normalised.append(verts)
        ordered = tuple(sorted(normalised))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate simplex {a}")
        return cls(dimension, ordered)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for s in self.simplices for v in s}))

    def __len__(self) -> int:
        return len(self.simplices)


def parse_triangulation(text: str) -> Triangulation:
    """Parse the triangulation file format.

    Lines starting with '#' and blank lines are ignored.  The first content
    line must be ``dim <n>``; every later content line lists the n+1 vertex
    ids of one simplex.  Raises :class:`FormatError` with a line number on
    malformed input; duplicate simplices and repeated vertices are rejected.
    """
    dimension = None
    simplices: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dimension is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim":
                raise FormatError(f"expected 'dim <n>', got {line!r}", lineno)
            try:
                dimension = int(parts[1])
            except ValueError:
                raise FormatError(f"bad dimension {parts[1]!r}", lineno) from None
            if dimension < 1:
                raise FormatError(f"dimension must be >= 1, got {dimension}", lineno)
            continue
        try:
            verts = tuple(sorted(int(tok) for tok in line.split()))
        except ValueError:
            raise FormatError(f"non-integer vertex id in {line!r}", lineno) from None
        if len(verts) != dimension + 1:
            raise FormatError(
                f"simplex has {len(verts)} vertices, expected {dimension + 1}", lineno
            )
        if len(set(verts)) != len(verts):
            raise FormatError("repeated vertex within a simplex", lineno)
        if any(v < 0 for v in verts):
            raise FormatError("negative vertex id", lineno)
        if verts in seen:
            raise FormatError(f"duplicate simplex {verts}", lineno)
        seen.add(verts)
        simplices.append(verts)
    if dimension is None:
        raise FormatError("missing 'dim <n>' header")
    if not simplices:
        raise FormatError("no simplices listed")
    return Triangulation(dimension, tuple(sorted(simplices)))


def triangulation_to_text(t: Triangulation) -> str:
    """Canonical serialisation; ``parse_triangulation`` inverts it."""
    lines = [f"dim {t.dimension}"]
    lines.extend(" ".join(str(v) for v in s) for s in t.simplices)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    """Pass/fail record for purity, closedness and dual connectivity."""

    pure: bool
    closed: bool
    connected: bool
    bad_faces: tuple[tuple[tuple[int, ...], int], ...]  # facets with degree != 2
    components: int

    @property
    def passed(self) -> bool:
        return self.pure and self.closed and self.connected

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "pure": self.pure,
            "closed": self.closed,
            "connected": self.connected,
            "bad_faces": [
                {"face": list(f), "degree": d} for f, d in self.bad_faces
            ],
            "components": self.components,
        }


def _facet_incidence(t: Triangulation) -> dict[tuple[int, ...], list[int]]:
    incidence: dict[tuple[int, ...], list[int]] = {}
    for sid, s in enumerate(t.simplices):
        for i in range(len(s)):
            facet = s[:i] + s[i + 1 :]
            incidence.setdefault(facet, []).append(sid)
    return incidence


def validate(t: Triangulation) -> ValidationReport:
    """Check the closed-pseudomanifold conditions.

    Purity holds by construction.  Closedness demands every (n-1)-face lie in
    exactly two simplices; connectivity is of the facet-adjacency graph on
    simplices.  Faces of degree 1 (boundary) or >2 (branching) are failures,
    not warnings.
    """
    incidence = _facet_incidence(t)
    bad = tuple(
        sorted((f, len(sids)) for f, sids in incidence.items() if len(sids) != 2)
    )
    closed = not bad

    # component count of the facet-adjacency graph
    adj: dict[int, list[int]] = {sid: [] for sid in range(len(t.simplices))}
    for sids in incidence.values():
        if len(sids) == 2:
            a, b = sids
            adj[a].append(b)
            adj[b].append(a)
    components = 0
    seen: set[int] = set()
    for start in range(len(t.simplices)):
        if start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            cur = queue.popleft()
            for nb in adj[cur]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
    return ValidationReport(
        pure=True,
        closed=closed,
        connected=components == 1,
        bad_faces=bad,
        components=components,
    )


# ---------------------------------------------------------------------------
# face census


@dataclass(frozen=True)
class FaceCensus:
    """All faces by dimension plus the simplex-degree of every codim-2 face.

    The degree of an (n-2)-face is the number of top simplices containing it;
    it equals the side count of the dual 2-cell sitting at that face.
    """

    counts: tuple[int, ...]
    codim2_degrees: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def odd_faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f for f, d in self.codim2_degrees if d % 2 == 1)

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for _f, d in self.codim2_degrees:
            hist[d] = hist.get(d, 0) + 1
        return dict(sorted(hist.items()))

    def to_json(self) -> dict:
        return {
            "face_counts": list(self.counts),
            "odd_faces": [list(f) for f in self.odd_faces],
            "codim2_degree_histogram": {
                str(k): v for k, v in self.degree_histogram().items()
            },
        }


@lru_cache(maxsize=None)
def face_census(t: Triangulation) -> FaceCensus:
    """Enumerate every face of every dimension, each exactly once."""
    n = t.dimension
    faces: list[set[tuple[int, ...]]] = [set() for _ in range(n + 1)]
    codim2: dict[tuple[int, ...], int] = {}
    for s in t.simplices:
        for k in range(n + 1):
            for face in itertools.combinations(s, k + 1):
                faces[k].add(face)
        if n >= 2:
            for face in itertools.combinations(s, n - 1):
                codim2[face] = codim2.get(face, 0) + 1
    return FaceCensus(
        counts=tuple(len(fs) for fs in faces),
        codim2_degrees=tuple(sorted(codim2.items())),
    )


def euler_characteristic(t: Triangulation) -> int:
    counts = face_census(t).counts
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(counts))


# ---------------------------------------------------------------------------
# dual graph


@dataclass(frozen=True)
class DualGraph:
    """Facet-adjacency graph on simplex ids; each edge is labelled by the
    shared (n-1)-face.  For a valid closed complex it is (n+1)-regular."""

    node_count: int
    edges: tuple[tuple[int, int, tuple[int, ...]], ...]  # (a, b, facet), a < b

    def adjacency(self) -> dict[int, list[tuple[int, tuple[int, ...]]]]:
        adj: dict[int, list[tuple[int, tuple[int, ...]]]] = {
            i: [] for i in range(self.node_count)
        }
        for a, b, facet in self.edges:
            adj[a].append((b, facet))
            adj[b].append((a, facet))
        return adj

    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.node_count
        for a, b, _ in self.edges:
            degs[a] += 1
            degs[b] += 1
        return tuple(degs)


@lru_cache(maxsize=None)
def dual_graph(t: Triangulation) -> DualGraph:
    incidence = _facet_incidence(t)
    edges = []
    for facet, sids in sorted(incidence.items()):
        if len(sids) == 2:
            a, b = sorted(sids)
            edges.append((a, b, facet))
    edges.sort()
    return DualGraph(node_count=len(t.simplices), edges=tuple(edges))


def is_even_cyclic(t: Triangulation) -> bool:
    """True iff every closed walk on the dual 1-skeleton has even length,
    i.e. the dual graph is bipartite."""
    adj = dual_graph(t).adjacency()
    side: dict[int, int] = {}
    for start in range(len(t.simplices)):
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nb, _facet in adj[cur]:
                if nb not in side:
                    side[nb] = 1 - side[cur]
                    queue.append(nb)
                elif side[nb] == side[cur]:
                    return False
    return True


def orientability(t: Triangulation) -> bool:
    """Decide whether a coherent orientation of the top simplices exists.

    A sign per simplex is propagated over a dual spanning tree; the complex
    is orientable iff every non-tree adjacency is consistent.  The induced
    boundary orientation of the facet obtained by dropping the vertex at
    sorted position i carries sign (-1)^i, and coherence requires the two
    induced orientations of a shared facet to cancel.
    """
    adj = dual_graph(t).adjacency()
    position = [
        {v: i for i, v in enumerate(s)} for s in t.simplices
    ]

    def facet_sign(sid: int, facet: tuple[int, ...]) -> int:
        (dropped,) = set(t.simplices[sid]) - set(facet)
        return -1 if position[sid][dropped] % 2 else 1

    sign: dict[int, int] = {0: 1}
    queue = deque([0])
    while queue:
        cur = queue.popleft()
        for nb, facet in adj[cur]:
            required = -sign[cur] * facet_sign(cur, facet) * facet_sign(nb, facet)
            if nb not in sign:
                sign[nb] = required
                queue.append(nb)
            elif sign[nb] != required:
                return False
    return True
