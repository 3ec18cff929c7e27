"""Layered intersection data and the product cell complex it generates.

A j-layer complex on an n-manifold is summarised by which region subsets Q
have nonempty intersection and the dimension of that intersection.  From
this record alone one builds a cell poset with one cell per Q, of dimension
n + j - |Q|, where a cell indexed by Q is a face of the cell indexed by Q'
exactly when Q contains Q'.  Region cells are the singletons; the cells of
dimension 0 are the Qs of full size n + j, and each touches exactly n + j
edges (drop one region at a time).
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class LayeredIntersectionData:
    """Which region subsets intersect, and in what dimension.

    ``regions`` holds (id, layer) pairs with layers in 1..j; ``intersections``
    holds (sorted region-id tuple, dimension) pairs.  Construction validates:
    every singleton present with dimension n; subsets of a present Q present
    with dimension at least that of Q; two regions of one layer never meet in
    dimension n.
    """

    n: int
    j: int
    regions: tuple[tuple[str, int], ...]
    intersections: tuple[tuple[tuple[str, ...], int], ...]

    def __post_init__(self):
        if self.n < 1 or self.j < 1:
            raise ValueError(f"need n >= 1 and j >= 1, got n={self.n}, j={self.j}")
        layer_of = {}
        for rid, layer in self.regions:
            if rid in layer_of:
                raise ValueError(f"duplicate region id {rid!r}")
            if not 1 <= layer <= self.j:
                raise ValueError(f"region {rid!r} has layer {layer}, outside 1..{self.j}")
            layer_of[rid] = layer
        dims: dict[frozenset[str], int] = {}
        for ids, dim in self.intersections:
            q = frozenset(ids)
            if len(q) != len(ids):
                raise ValueError(f"repeated region in intersection {ids}")
            if q in dims:
                raise ValueError(f"duplicate intersection entry {ids}")
            unknown = [r for r in ids if r not in layer_of]
            if unknown:
                raise ValueError(f"intersection {ids} names unknown regions {unknown}")
            if not 0 <= dim <= self.n:
                raise ValueError(f"intersection {ids} has dimension {dim}")
            dims[q] = dim
        for rid in layer_of:
            single = frozenset((rid,))
            if single not in dims:
                raise ValueError(f"singleton {{{rid!r}}} missing from intersections")
            if dims[single] != self.n:
                raise ValueError(
                    f"singleton {{{rid!r}}} must have dimension {self.n}, "
                    f"got {dims[single]}"
                )
        for q, dim in dims.items():
            if len(q) < 2:
                continue
            layers = [layer_of[r] for r in q]
            if len(set(layers)) < len(layers) and dim >= self.n:
                raise ValueError(
                    f"{sorted(q)} holds two regions of one layer but claims "
                    f"dimension {dim}"
                )
            for r in q:
                sub = q - {r}
                if sub not in dims:
                    raise ValueError(
                        f"{sorted(q)} present but its subset {sorted(sub)} is not"
                    )
                if dims[sub] < dim:
                    raise ValueError(
                        f"subset {sorted(sub)} has smaller dimension than {sorted(q)}"
                    )

    def layer_of(self, rid: str) -> int:
        for r, layer in self.regions:
            if r == rid:
                return layer
        raise KeyError(rid)

    def dims(self) -> dict[frozenset[str], int]:
        return {frozenset(ids): dim for ids, dim in self.intersections}

    def region_ids(self) -> tuple[str, ...]:
        return tuple(r for r, _layer in self.regions)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "j": self.j,
            "regions": [{"id": r, "layer": layer} for r, layer in self.regions],
            "intersections": [
                {"regions": list(ids), "dim": dim} for ids, dim in self.intersections
            ],
        }


def intersection_data_from_json(source) -> LayeredIntersectionData:
    """Build intersection data from a JSON document (text or parsed dict).
    Region ids are coerced to strings."""
    obj = json.loads(source) if isinstance(source, str) else source
    try:
        regions = tuple(
            (str(r["id"]), int(r["layer"])) for r in obj["regions"]
        )
        intersections = tuple(
            (tuple(sorted(str(x) for x in item["regions"])), int(item["dim"]))
            for item in obj["intersections"]
        )
        n = int(obj["n"])
        j = int(obj["j"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed intersection data: {exc}") from None
    intersections = tuple(
        sorted(intersections, key=lambda kv: (len(kv[0]), kv[0]))
    )
    return LayeredIntersectionData(
        n=n, j=j, regions=tuple(sorted(regions)), intersections=intersections
    )


# ---------------------------------------------------------------------------
# the product complex


@dataclass(frozen=True)
class GammaComplex:
    """Cell poset built from intersection data.

    One cell per recorded Q, of dimension n + j - |Q|; the cell of Q is a
    face of the cell of Q' iff Q is a superset of Q'.
    """

    n: int
    j: int
    cells: tuple[tuple[tuple[str, ...], int], ...]  # (sorted Q, dimension)

    def dimension_of(self, q) -> int:
        want = frozenset(q)
        for ids, dim in self.cells:
            if frozenset(ids) == want:
                return dim
        raise KeyError(q)

    def census(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for _ids, dim in self.cells:
            counts[dim] = counts.get(dim, 0) + 1
        return dict(sorted(counts.items()))

    def vertices(self) -> tuple[tuple[str, ...], ...]:
        return tuple(ids for ids, dim in self.cells if dim == 0)

    def vertex_degree(self, q) -> int:
        present = {frozenset(ids) for ids, _dim in self.cells}
        q = frozenset(q)
        return sum(1 for r in q if (q - {r}) in present)

    def region_cells(self) -> tuple[str, ...]:
        return tuple(ids[0] for ids, _dim in self.cells if len(ids) == 1)

    def is_face(self, q, q_prime) -> bool:
        return frozenset(q) >= frozenset(q_prime)

    def regions_adjacent(self, r1: str, r2: str) -> bool:
        """Two region cells share a face iff some recorded Q contains both."""
        return any(r1 in ids and r2 in ids for ids, _dim in self.cells)

    def to_json(self) -> dict:
        return {
            "cells_by_dimension": {str(d): c for d, c in self.census().items()},
            "cell_count": len(self.cells),
            "vertex_count": len(self.vertices()),
        }


def gamma_complex(data: LayeredIntersectionData) -> GammaComplex:
    """Build the product cell poset, enforcing its dimension and degree laws.

    The recorded dimension of each Q must equal n + |layers(Q)| - |Q| (the
    transversality count), every Q must satisfy |Q| <= n + j, and every full
    size Q must touch exactly n + j edges.  Violations raise ValueError
    naming the offending Q.
    """
    n, j = data.n, data.j
    layer_of = dict(data.regions)
    cells = []
    for ids, dim in data.intersections:
        expected = n + len({layer_of[r] for r in ids}) - len(ids)
        if dim != expected:
            raise ValueError(
                f"dimension law violated at {list(ids)}: recorded {dim}, "
                f"transversality gives {expected}"
            )
        if len(ids) > n + j:
            raise ValueError(
                f"{list(ids)} has {len(ids)} regions, above the bound {n + j}"
            )
        cells.append((ids, n + j - len(ids)))
    complex_ = GammaComplex(n=n, j=j, cells=tuple(cells))
    for ids in complex_.vertices():
        degree = complex_.vertex_degree(ids)
        if degree != n + j:
            raise ValueError(
                f"vertex {list(ids)} has degree {degree}, expected {n + j}"
            )
    return complex_


def gamma_coloring_transfer(data: LayeredIntersectionData, coloring) -> bool:
    """Decide properness of a region coloring, two ways, and insist they
    agree: directly on the intersection pairs, and through the product
    complex where region r becomes the region cell of {r}.
    """
    missing = [r for r in data.region_ids() if r not in coloring]
    if missing:
        raise ValueError(f"partial coloring; missing regions {missing[:5]}")
    pairs = [ids for ids, _dim in data.intersections if len(ids) == 2]
    direct = all(coloring[a] != coloring[b] for a, b in pairs)

    complex_ = gamma_complex(data)
    transferred = True
    region_ids = complex_.region_cells()
    for i, r1 in enumerate(region_ids):
        for r2 in region_ids[i + 1 :]:
            if complex_.regions_adjacent(r1, r2) and coloring[r1] == coloring[r2]:
                transferred = False
    if direct != transferred:
        raise AssertionError(
            "direct properness disagrees with the transferred check"
        )
    return direct
