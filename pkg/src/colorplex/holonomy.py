"""Forced color propagation and the holonomy of a triangulated complex.

Around each dual vertex (top simplex) the n+1 regions touching it carry n+1
distinct colors: a rainbow labeling of the simplex's vertices.  Crossing a
dual edge (shared facet) keeps the facet's colors and forces the opposite
vertex of the far simplex to take the one unused color.  Transporting a
labeling around dual loops gives color permutations; the complex is
(n+1)-colorable exactly when every loop acts trivially.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetError
from .perms import Permutation, subgroup_closure
from .triangulation import Triangulation, dual_graph, face_census

BRUTE_FORCE_VERTEX_LIMIT = 40


@dataclass(frozen=True)
class SimplexLabeling:
    """Rainbow color assignment on one simplex; ``colors[i]`` colors the
    i-th smallest vertex."""

    simplex: int
    colors: tuple[int, ...]

    def as_mapping(self, t: Triangulation) -> dict[int, int]:
        return dict(zip(t.simplices[self.simplex], self.colors))


def base_labeling(t: Triangulation, sid: int) -> SimplexLabeling:
    """The canonical start labeling: i-th smallest vertex gets color i."""
    return SimplexLabeling(sid, tuple(range(1, t.dimension + 2)))


def propagate(
    t: Triangulation, labeling: SimplexLabeling, target: int
) -> SimplexLabeling:
    """Carry a labeling across the dual edge into ``target``.

    The shared facet keeps its colors; the vertex of ``target`` opposite the
    facet is forced to the color that the facet does not use.  Raises
    ValueError when the two simplices are not facet-adjacent.
    """
    src = t.simplices[labeling.simplex]
    dst = t.simplices[target]
    shared = set(src) & set(dst)
    if target == labeling.simplex or len(shared) != t.dimension:
        raise ValueError(
            f"simplices {src} and {dst} do not share a facet"
        )
    by_vertex = dict(zip(src, labeling.colors))
    (dropped,) = set(src) - shared
    forced = by_vertex[dropped]
    return SimplexLabeling(
        target,
        tuple(by_vertex[v] if v in shared else forced for v in dst),
    )


def path_permutation(t: Triangulation, path) -> Permutation:
    """Color permutation picked up around a closed dual walk.

    ``path`` lists simplex ids, starting and ending at the same simplex;
    repeated consecutive entries are allowed (and skipped) so loops can be
    concatenated.  The result p satisfies p(start color of a vertex) = its
    end color.
    """
    path = list(path)
    if path[0] != path[-1]:
        raise ValueError("path is not a loop")
    lab = base_labeling(t, path[0])
    start = lab
    for nxt in path[1:]:
        if nxt != lab.simplex:
            lab = propagate(t, lab, nxt)
    images = [0] * (t.dimension + 1)
    for c_start, c_end in zip(start.colors, lab.colors):
        images[c_start - 1] = c_end
    return Permutation(tuple(images))


# ---------------------------------------------------------------------------
# holonomy generators over a dual spanning tree


@dataclass(frozen=True)
class HolonomyData:
    """Spanning-tree presentation of the dual-loop holonomy.

    The base is the lexicographically least simplex; the tree comes from a
    breadth-first search with lexicographic neighbor order.  One generator
    loop per non-tree dual edge (a, b): tree path to a, cross to b, tree path
    back.  ``permutations[k]`` is the color permutation of generator k.
    """

    base: int
    parent: tuple[int, ...]  # parent simplex id, -1 at the base
    labelings: tuple[SimplexLabeling, ...]
    generators: tuple[tuple[int, int], ...]
    permutations: tuple[Permutation, ...]

    @property
    def trivial(self) -> bool:
        return all(p.is_identity for p in self.permutations)

    def _chain_to_base(self, sid: int) -> list[int]:
        chain = [sid]
        while self.parent[chain[-1]] != -1:
            chain.append(self.parent[chain[-1]])
        return chain

    def generator_loop(self, k: int) -> tuple[int, ...]:
        """The explicit simplex-id loop realising generator k."""
        a, b = self.generators[k]
        to_a = self._chain_to_base(a)[::-1]
        from_b = self._chain_to_base(b)
        return tuple(to_a + from_b)


def hol_generators(
    t: Triangulation, *, reverse_neighbors: bool = False
) -> HolonomyData:
    """Tree-propagated labelings plus one permutation per non-tree dual edge.

    ``reverse_neighbors`` flips the breadth-first visiting order, producing a
    different spanning tree; when all generators are trivial the resulting
    labelings must not depend on this choice.
    """
    dg = dual_graph(t)
    adjacency = dg.adjacency()
    for sid in adjacency:
        adjacency[sid].sort(key=lambda nb: t.simplices[nb[0]])
        if reverse_neighbors:
            adjacency[sid].reverse()

    count = len(t.simplices)
    parent = [-1] * count
    labelings: list[SimplexLabeling | None] = [None] * count
    labelings[0] = base_labeling(t, 0)
    seen = {0}
    queue = deque([0])
    while queue:
        cur = queue.popleft()
        for nb, _facet in adjacency[cur]:
            if nb not in seen:
                seen.add(nb)
                parent[nb] = cur
                labelings[nb] = propagate(t, labelings[cur], nb)
                queue.append(nb)
    if len(seen) != count:
        raise ValueError("dual graph is disconnected; validate the input first")

    generators = []
    permutations = []
    for a, b, _facet in dg.edges:
        if parent[a] == b or parent[b] == a:
            continue
        crossed = propagate(t, labelings[a], b)
        tree_lab = labelings[b]
        images = [0] * (t.dimension + 1)
        for c_tree, c_cross in zip(tree_lab.colors, crossed.colors):
            images[c_tree - 1] = c_cross
        generators.append((a, b))
        permutations.append(Permutation(tuple(images)))
    return HolonomyData(
        base=0,
        parent=tuple(parent),
        labelings=tuple(labelings),
        generators=tuple(generators),
        permutations=tuple(permutations),
    )


def link_loop_permutation(t: Triangulation, face) -> tuple[Permutation, int]:
    """Transport around the cycle of simplices sharing a codim-2 face.

    Returns (permutation, degree).  The two colors at the start simplex's
    non-face vertices swap once per step, so the result is that transposition
    raised to the degree: the identity exactly when the degree is even.
    """
    face = tuple(sorted(face))
    if len(face) != t.dimension - 1:
        raise ValueError(f"{face} is not a codimension-2 face")
    cofaces = [
        sid for sid, s in enumerate(t.simplices) if set(face) <= set(s)
    ]
    if not cofaces:
        raise ValueError(f"{face} is not a face of any simplex")
    facet_owner: dict[tuple[int, ...], list[int]] = {}
    for sid in cofaces:
        for extra in set(t.simplices[sid]) - set(face):
            facet = tuple(sorted(face + (extra,)))
            facet_owner.setdefault(facet, []).append(sid)

    start = min(cofaces)
    path = [start]
    prev = -1
    cur = start
    while True:
        steps = []
        for extra in sorted(set(t.simplices[cur]) - set(face)):
            facet = tuple(sorted(face + (extra,)))
            for other in facet_owner[facet]:
                if other != cur:
                    steps.append(other)
        nxt = steps[0] if steps[0] != prev else steps[1]
        path.append(nxt)
        prev, cur = cur, nxt
        if cur == start:
            break
    return path_permutation(t, path), len(cofaces)


# ---------------------------------------------------------------------------
# colorability


def is_locally_colorable(t: Triangulation) -> tuple[bool, tuple[tuple[int, ...], ...]]:
    """True iff every codim-2 face has even degree (every dual 2-cell is even
    sided); also returns the offending odd faces.  Vacuously true for n=1."""
    if t.dimension == 1:
        return True, ()
    odd = face_census(t).odd_faces
    return not odd, odd


def is_colorable(t: Triangulation) -> dict[int, int] | None:
    """Extract the forced (n+1)-coloring, or None when holonomy obstructs it.

    A coloring exists iff every generator permutation is the identity; the
    witness reads each region's color off the tree-propagated labelings.  A
    valid pseudomanifold whose vertex stars are not manifold-like (pinched)
    can leave the extraction inconsistent even with trivial generators; that
    is detected and reported rather than returned.
    """
    hol = hol_generators(t)
    if not hol.trivial:
        return None
    coloring: dict[int, int] = {}
    for lab in hol.labelings:
        for v, c in zip(t.simplices[lab.simplex], lab.colors):
            prior = coloring.get(v)
            if prior is None:
                coloring[v] = c
            elif prior != c:
                raise ValueError(
                    f"forced colors disagree at region {v}; "
                    "its star is not a manifold neighborhood"
                )
    return coloring


def verify_coloring(t: Triangulation, coloring, color_count: int) -> bool:
    """Check a region coloring: total, colors within 1..color_count, and both
    endpoints of every 1-skeleton edge distinct."""
    missing = [v for v in t.vertices if v not in coloring]
    if missing:
        raise ValueError(f"partial coloring; missing regions {missing[:5]}")
    if any(not 1 <= coloring[v] <= color_count for v in t.vertices):
        return False
    for s in t.simplices:
        for a, b in itertools.combinations(s, 2):
            if coloring[a] == coloring[b]:
                return False
    return True


def brute_force_colorable(
    t: Triangulation, color_count: int
) -> dict[int, int] | None:
    """Exhaustive backtracking over proper colorings of the 1-skeleton.

    Vertices are tried in descending-degree order (ties by id) and colors in
    increasing order, so the witness is deterministic: the least one in that
    search order.  Refuses complexes with more than BRUTE_FORCE_VERTEX_LIMIT
    vertices.
    """
    verts = t.vertices
    if len(verts) > BRUTE_FORCE_VERTEX_LIMIT:
        raise BudgetError(
            f"{len(verts)} regions exceed the search budget of "
            f"{BRUTE_FORCE_VERTEX_LIMIT}"
        )
    neighbors: dict[int, set[int]] = {v: set() for v in verts}
    for s in t.simplices:
        for a, b in itertools.combinations(s, 2):
            neighbors[a].add(b)
            neighbors[b].add(a)
    order = sorted(verts, key=lambda v: (-len(neighbors[v]), v))
    assignment: dict[int, int] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {assignment[u] for u in neighbors[v] if u in assignment}
        for c in range(1, color_count + 1):
            if c not in used:
                assignment[v] = c
                if extend(i + 1):
                    return True
                del assignment[v]
        return False

    return dict(sorted(assignment.items())) if extend(0) else None


@lru_cache(maxsize=None)
def _cached_hol(t: Triangulation) -> HolonomyData:
    return hol_generators(t)


def holonomy_invariants(t: Triangulation) -> dict:
    """Presentation-independent summary of the holonomy image: cycle types
    of the generators, the order of the subgroup they generate, and whether
    the holonomy is trivial.  Color degrees above the closure limit raise
    BudgetError."""
    degree = t.dimension + 1
    if degree > 8:
        raise BudgetError(f"holonomy degree {degree} exceeds the closure limit 8")
    hol = _cached_hol(t)
    order, _elements = subgroup_closure(hol.permutations, degree=degree)
    return {
        "degree": degree,
        "generator_count": len(hol.generators),
        "cycle_types": tuple(p.cycle_type() for p in hol.permutations),
        "cycle_strings": tuple(p.cycle_string() for p in hol.permutations),
        "image_order": order,
        "trivial": hol.trivial,
    }


# ---------------------------------------------------------------------------
# defect analysis for n = 3


@dataclass(frozen=True)
class DefectGraphs:
    """Regions without 4-colorable stars and the two graphs joining them.

    ``regions`` collects the vertices of the triangulation that lie on some
    odd-degree edge (their dual star is not 4-colorable).  ``odd_edges`` has
    one edge per odd-degree edge of the triangulation; ``adjacency_edges``
    adds the even-degree edges whose endpoints both sit in ``regions``.
    """

    regions: frozenset[int]
    odd_edges: tuple[tuple[int, int], ...]
    adjacency_edges: tuple[tuple[int, int], ...]

    def odd_degrees(self) -> dict[int, int]:
        degs = {v: 0 for v in self.regions}
        for a, b in self.odd_edges:
            degs[a] += 1
            degs[b] += 1
        return degs

    @property
    def odd_degrees_even(self) -> bool:
        return all(d % 2 == 0 for d in self.odd_degrees().values())

    def adjacency_degrees(self) -> dict[int, int]:
        degs = {v: 0 for v in self.regions}
        for a, b in self.adjacency_edges:
            degs[a] += 1
            degs[b] += 1
        return degs

    @property
    def adjacency_empty(self) -> bool:
        return not self.adjacency_edges

    def adjacency_triangle_free(self) -> bool:
        edges = {frozenset(e) for e in self.adjacency_edges}
        for a, b, c in itertools.combinations(sorted(self.regions), 3):
            if (
                frozenset((a, b)) in edges
                and frozenset((a, c)) in edges
                and frozenset((b, c)) in edges
            ):
                return False
        return True


def defect_graphs(t: Triangulation) -> DefectGraphs:
    """Locate the 4-coloring defects of a 3-dimensional complex."""
    if t.dimension != 3:
        raise ValueError(f"defect graphs are defined for n=3, got n={t.dimension}")
    odd = []
    even = []
    for edge, deg in face_census(t).codim2_degrees:
        (odd if deg % 2 else even).append(edge)
    regions = frozenset(v for e in odd for v in e)
    adjacency = sorted(odd) + sorted(
        e for e in even if e[0] in regions and e[1] in regions
    )
    result = DefectGraphs(
        regions=regions,
        odd_edges=tuple(sorted(odd)),
        adjacency_edges=tuple(sorted(set(adjacency))),
    )
    if not result.odd_degrees_even:
        raise AssertionError(
            "a region with an odd number of odd-degree edges contradicts "
            "the boundary-parity of its star"
        )
    return result


def defect_free_four_coloring(t: Triangulation) -> dict[int, int] | None:
    """The forced 4-coloring of a defect-free 3-complex.

    When the defect adjacency graph is empty the complex has only even-sided
    dual 2-cells; if the holonomy is additionally trivial (checked, not
    assumed) the forced coloring exists and is returned.
    """
    defects = defect_graphs(t)
    if not defects.adjacency_empty:
        return None
    return is_colorable(t)
