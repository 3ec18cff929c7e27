"""Layered arc decompositions of the circle and their forced color sweep.

Each layer cuts the circle (circumference C, exact rationals) into arcs at
its boundary points; layers are overlaid, with all boundary points distinct.
j layers need j+1 colors: at any point the j arcs passing through carry j
distinct colors and one color is free.  Crossing a boundary point of layer i
swaps layer i's color with the free one, which forces the whole coloring
along a sweep and yields a permutation in S_{j+1} per lap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError
from .gamma import LayeredIntersectionData
from .perms import Permutation


@dataclass(frozen=True)
class Arc:
    """One arc of one layer: [start, end] with start < end <= start + C.
    Arcs whose end exceeds C wrap through position 0."""

    layer: int  # 1-based
    index: int  # position of the start point in the layer's sorted list
    start: Fraction
    end: Fraction

    @property
    def id(self) -> str:
        return f"l{self.layer}a{self.index}"

    def covers(self, p: Fraction, circumference: Fraction) -> bool:
        p = p % circumference
        return self.start <= p <= self.end or self.start <= p + circumference <= self.end


@dataclass(frozen=True)
class CircleLayers:
    """j layers of boundary points on a common circle.

    Every layer has at least 2 points (so at least 2 arcs) and all positions
    across all layers are distinct, which keeps the crossing order decidable.
    """

    circumference: Fraction
    layers: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        c = self.circumference
        if not isinstance(c, Fraction) or c <= 0:
            raise ValueError(f"circumference must be a positive rational, got {c!r}")
        if not self.layers:
            raise ValueError("at least one layer required")
        seen: dict[Fraction, int] = {}
        for li, points in enumerate(self.layers, start=1):
            if len(points) < 2:
                raise ValueError(f"layer {li} has {len(points)} points; need >= 2")
            for p in points:
                if not isinstance(p, Fraction):
                    raise ValueError(f"position {p!r} is not a Fraction")
                if not 0 <= p < c:
                    raise ValueError(f"position {p} outside [0, {c})")
                if p in seen:
                    raise ValueError(
                        f"duplicate position {p} (layers {seen[p]} and {li})"
                    )
                seen[p] = li
            if tuple(sorted(points)) != points:
                raise ValueError(f"layer {li} positions must be strictly increasing")

    @property
    def j(self) -> int:
        return len(self.layers)

    def arcs(self) -> tuple[tuple[Arc, ...], ...]:
        """Per layer: arc k runs from point k to the next point (wrapping)."""
        out = []
        for li, points in enumerate(self.layers, start=1):
            arcs = []
            m = len(points)
            for k, p in enumerate(points):
                end = points[k + 1] if k + 1 < m else points[0] + self.circumference
                arcs.append(Arc(layer=li, index=k, start=p, end=end))
            out.append(tuple(arcs))
        return tuple(out)

    def all_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for layer in self.arcs() for a in layer)

    def arc_count(self) -> int:
        return sum(len(points) for points in self.layers)

    def sweep_order(self) -> tuple[tuple[Fraction, int, int], ...]:
        """Boundary points in the order a forward sweep from 0+ crosses them:
        (position, layer, point index); position 0 is crossed last, at C."""
        events = []
        for li, points in enumerate(self.layers, start=1):
            for k, p in enumerate(points):
                effective = p if p > 0 else self.circumference
                events.append((effective, li, k))
        events.sort()
        return tuple(events)


def _parse_rational(token: str, lineno: int) -> Fraction:
    try:
        if "/" in token:
            num, den = token.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(token))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"malformed rational {token!r}", lineno) from None


def parse_circle_layers(text: str) -> CircleLayers:
    """Parse the circle-layers file format.

    Content lines ('#' comments and blanks skipped): ``circle <j>``, then
    ``C=<positive rational>``, then j lines ``layer: p1 p2 ...`` with the
    positions as integers or ``a/b`` fractions.
    """
    lines = [
        (no, ln.strip())
        for no, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty circle-layers file")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "circle":
        raise FormatError(f"expected 'circle <j>', got {header!r}", no)
    try:
        j = int(parts[1])
    except ValueError:
        raise FormatError(f"bad layer count {parts[1]!r}", no) from None
    if len(lines) < 2:
        raise FormatError("missing 'C=<rational>' line", no)
    no, cline = lines[1]
    if not cline.startswith("C="):
        raise FormatError(f"expected 'C=<rational>', got {cline!r}", no)
    circumference = _parse_rational(cline[2:].strip(), no)
    layer_lines = lines[2:]
    if len(layer_lines) != j:
        raise FormatError(f"expected {j} layer lines, found {len(layer_lines)}")
    layers = []
    for no, ln in layer_lines:
        if not ln.startswith("layer:"):
            raise FormatError(f"expected 'layer: ...', got {ln!r}", no)
        points = tuple(
            _parse_rational(tok, no) for tok in ln[len("layer:"):].split()
        )
        layers.append(points)
    return CircleLayers(circumference=circumference, layers=tuple(layers))


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def circle_layers_to_text(cl: CircleLayers) -> str:
    lines = [f"circle {cl.j}", f"C={_fmt_rational(cl.circumference)}"]
    for points in cl.layers:
        lines.append("layer: " + " ".join(_fmt_rational(p) for p in points))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# the sweep


@dataclass(frozen=True)
class LayerState:
    """Colors of the j arcs currently underfoot plus the one free color."""

    colors: tuple[int, ...]
    free: int

    @classmethod
    def initial(cls, j: int) -> "LayerState":
        return cls(colors=tuple(range(1, j + 1)), free=j + 1)

    def cross(self, layer: int) -> "LayerState":
        """Crossing a boundary point of ``layer`` swaps its color with the
        free one; crossing the same point again undoes it."""
        colors = list(self.colors)
        colors[layer - 1], new_free = self.free, colors[layer - 1]
        return LayerState(colors=tuple(colors), free=new_free)


def sweep(cl: CircleLayers, *, reverse: bool = False) -> LayerState:
    """Run one full lap from 0+ and return the end state."""
    state = LayerState.initial(cl.j)
    events = cl.sweep_order()
    if reverse:
        events = tuple(reversed(events))
    for _pos, layer, _k in events:
        state = state.cross(layer)
    return state


def circle_holonomy(cl: CircleLayers, *, reverse: bool = False) -> Permutation:
    """Permutation in S_{j+1} taking each start color to its end color after
    one lap.  The free color's image is forced by bijectivity."""
    end = sweep(cl, reverse=reverse)
    images = list(end.colors) + [end.free]
    return Permutation(tuple(images))


def circle_colorable(cl: CircleLayers) -> dict[str, int] | None:
    """The forced coloring of all arcs, or None when the sweep disagrees with
    itself (exactly when the holonomy is not the identity)."""
    arcs = cl.arcs()
    coloring: dict[str, int] = {}
    state = LayerState.initial(cl.j)
    for li in range(1, cl.j + 1):
        layer_arcs = arcs[li - 1]
        start_arc = layer_arcs[0] if layer_arcs[0].start == 0 else layer_arcs[-1]
        coloring[start_arc.id] = state.colors[li - 1]
    for _pos, layer, k in cl.sweep_order():
        state = state.cross(layer)
        entered = arcs[layer - 1][k]
        color = state.colors[layer - 1]
        if coloring.get(entered.id, color) != color:
            return None
        coloring[entered.id] = color
    return coloring


# ---------------------------------------------------------------------------
# exact arc intersections
#
# Arcs are lifted to closed intervals [start, end] on the line with
# end - start < C, so a subset of the circle within one arc's window maps
# back injectively.  Intersecting with another arc means intersecting with
# its three translates by -C, 0, +C.


def _refine_pieces(pieces, arc: Arc, c: Fraction):
    out = []
    for lo, hi in pieces:
        for shift in (-c, Fraction(0), c):
            nlo = max(lo, arc.start + shift)
            nhi = min(hi, arc.end + shift)
            if nlo <= nhi and (nlo, nhi) not in out:
                out.append((nlo, nhi))
    return sorted(out)


def _arcs_intersection(arcs: list[Arc], c: Fraction):
    """Pieces (in the first arc's lift coordinates) of the closed
    intersection of the given arcs; empty list when disjoint."""
    first = arcs[0]
    pieces = [(first.start, first.end)]
    for a in arcs[1:]:
        pieces = _refine_pieces(pieces, a, c)
        if not pieces:
            break
    return pieces


def _meeting_pairs(cl: CircleLayers):
    arcs = cl.all_arcs()
    for a, b in itertools.combinations(arcs, 2):
        if _arcs_intersection([a, b], cl.circumference):
            yield a, b


def verify_circle_coloring(cl: CircleLayers, coloring) -> bool:
    """Proper means: arcs whose closures meet get distinct colors (adjacent
    arcs of one layer, overlapping arcs of different layers)."""
    for a, b in _meeting_pairs(cl):
        if coloring[a.id] == coloring[b.id]:
            return False
    return True


def circle_intersections(cl: CircleLayers) -> LayeredIntersectionData:
    """Region-intersection record of the layered arcs (n = 1).

    Every arc subset with nonempty closed intersection is listed, tagged with
    the set dimension of the intersection: 1 when it has interior, 0 for
    point contacts.  Any subset with a common point lies inside the stab of
    one of the boundary points, so enumerating subsets of those stabs is
    exhaustive.
    """
    arcs = cl.all_arcs()
    by_id = {a.id: a for a in arcs}
    c = cl.circumference

    candidates: set[frozenset[str]] = {frozenset((a.id,)) for a in arcs}
    for points in cl.layers:
        for p in points:
            stab = [a.id for a in arcs if a.covers(p, c)]
            for size in range(2, len(stab) + 1):
                for combo in itertools.combinations(sorted(stab), size):
                    candidates.add(frozenset(combo))

    tagged: dict[frozenset[str], int] = {}
    for q in candidates:
        members = [by_id[i] for i in sorted(q)]
        if len(members) == 1:
            tagged[q] = 1
            continue
        pieces = _arcs_intersection(members, c)
        if pieces:
            tagged[q] = 1 if any(hi > lo for lo, hi in pieces) else 0

    regions = tuple((a.id, a.layer) for a in arcs)
    intersections = tuple(
        (tuple(sorted(q)), dim)
        for q, dim in sorted(
            tagged.items(), key=lambda kv: (len(kv[0]), tuple(sorted(kv[0])))
        )
    )
    return LayeredIntersectionData(
        n=1, j=cl.j, regions=regions, intersections=intersections
    )


def brute_force_circle_colorable(
    cl: CircleLayers, colors: int | None = None
) -> dict[str, int] | None:
    """Exhaustive search over arc color assignments.

    Arcs are assigned in (layer, index) order with colors tried ascending and
    improper prefixes pruned, so the enumeration covers exactly the proper
    assignments in lexicographic order and the witness is the least one.
    """
    if colors is None:
        colors = cl.j + 1
    arcs = sorted(cl.all_arcs(), key=lambda a: (a.layer, a.index))
    index = {a.id: i for i, a in enumerate(arcs)}
    earlier: list[list[int]] = [[] for _ in arcs]
    for a, b in _meeting_pairs(cl):
        i, k = sorted((index[a.id], index[b.id]))
        earlier[k].append(i)
    assignment = [0] * len(arcs)

    def extend(i: int) -> bool:
        if i == len(arcs):
            return True
        for c in range(1, colors + 1):
            if all(assignment[p] != c for p in earlier[i]):
                assignment[i] = c
                if extend(i + 1):
                    return True
        assignment[i] = 0
        return False

    if not extend(0):
        return None
    return {a.id: c for a, c in zip(arcs, assignment)}
