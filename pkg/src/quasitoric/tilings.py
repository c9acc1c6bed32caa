"""Exact Penrose substitution tilings over the cyclotomic integers Z[zeta_5].

Tile vertices are single ring elements (the plane is identified with C).  The
two substitution systems are carried by Robinson half-tiles:

  * mode "p2" (kite and dart): the dominant kind, here called ``acute``, is the
    half-kite (a golden triangle, apex 36 degrees); the recessive ``obtuse``
    kind is the half-dart (a gnomon, apex 108 degrees).
  * mode "p3" (rhombi): ``acute`` is the half of the thick rhombus (cut along
    its long diagonal, geometrically a gnomon) and ``obtuse`` is the half of
    the thin rhombus (cut along its short diagonal, a golden triangle).

In both modes one deflation step replaces each acute leaf by two acute and
one obtuse child and each obtuse leaf by one of each, all scaled by 1/phi.
Since phi is a unit of the ring, child coordinates stay integral after
multiplying through by phi once per level: a vertex stored at tree depth k
means (stored value) * phi^(-k).  Inflation removes tree levels, so it is an
exact inverse of deflation.

The substitution vertex maps are not taken on faith: `verify_patch` checks at
every node that the children tile the parent exactly, by directed-edge
cancellation, and that every tile is congruent to its kind's shape.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .field import FieldElem

Kind = Literal["acute", "obtuse"]
Mode = Literal["p2", "p3"]


class Cyclo:
    """Element of Z[zeta], zeta = exp(2*pi*i/5), over the basis 1, z, z^2, z^3."""

    __slots__ = ("c",)

    def __init__(self, c0: int = 0, c1: int = 0, c2: int = 0, c3: int = 0) -> None:
        self.c = (c0, c1, c2, c3)

    @classmethod
    def zeta(cls, k: int = 1) -> "Cyclo":
        k %= 5
        if k == 4:
            return cls(-1, -1, -1, -1)
        c = [0, 0, 0, 0]
        c[k] = 1
        return cls(*c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cyclo) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __add__(self, other: "Cyclo") -> "Cyclo":
        return Cyclo(*(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: "Cyclo") -> "Cyclo":
        return Cyclo(*(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self) -> "Cyclo":
        return Cyclo(*(-a for a in self.c))

    def __mul__(self, other: "Cyclo | int") -> "Cyclo":
        if isinstance(other, int):
            return Cyclo(*(a * other for a in self.c))
        acc = [0] * 5
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        acc[(i + j) % 5] += a * b
        k = acc[4]
        return Cyclo(acc[0] - k, acc[1] - k, acc[2] - k, acc[3] - k)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclo":
        a0, a1, a2, a3 = self.c
        # zeta^k -> zeta^(5-k)
        return Cyclo(a0 - a1, -a1, a3 - a1, a2 - a1)

    def is_zero(self) -> bool:
        return self.c == (0, 0, 0, 0)

    def real(self) -> FieldElem:
        """Exact real part, an element of Q(sqrt(5))."""
        a0, a1, a2, a3 = self.c
        q = Fraction(1, 4)
        return FieldElem(a0 + q * (-a1 - a2 - a3), q * (a1 - a2 - a3), 5)

    def imag_scaled(self) -> FieldElem:
        """Im(self) / sin(72 deg / phi scale): exactly a1*phi + a2 - a3.

        The true imaginary part is this value times sin(36 deg) > 0, so signs
        and collinearity read off this projection exactly.
        """
        a0, a1, a2, a3 = self.c
        h = Fraction(1, 2)
        return FieldElem(a2 - a3 + h * a1, h * a1, 5)

    def norm_squared(self) -> FieldElem:
        prod = self * self.conjugate()
        assert prod.imag_scaled().is_zero()
        return prod.real()

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / 5)
        return sum(a * z ** k for k, a in enumerate(self.c))

    def __repr__(self) -> str:
        return f"Cyclo{self.c}"


PHI_C = Cyclo(0, 0, -1, -1)       # the golden ratio as a ring element
ONE_C = Cyclo(1)
ROT36 = -Cyclo.zeta(3)            # exp(i*pi/5), rotation by 36 degrees


def cross_sign(o: Cyclo, u: Cyclo, v: Cyclo) -> int:
    """Sign of the signed area of triangle (o, u, v), exact."""
    a, b = u - o, v - o
    val = a.real() * b.imag_scaled() - a.imag_scaled() * b.real()
    return val.sign()


@dataclass(frozen=True)
class HalfTile:
    """A Robinson half-tile: apex vertex first, then the two base vertices.

    Chirality is carried by vertex orientation; the mirror image of a tile is
    the same triple with swapped base vertices.  The edge gluing a half-tile
    to its mirror mate inside a whole tile is apex -> vertices[2] in mode p2
    (the kite/dart symmetry axis) and vertices[1] -> vertices[2] in mode p3
    (the cut diagonal of the rhombus).
    """

    kind: Kind
    vertices: tuple[Cyclo, Cyclo, Cyclo]

    @property
    def chirality(self) -> Literal["left", "right"]:
        s = cross_sign(*self.vertices)
        if s == 0:
            raise ValueError("degenerate half-tile")
        return "right" if s > 0 else "left"

    def mirrored(self) -> "HalfTile":
        a, b1, b2 = self.vertices
        return HalfTile(self.kind, (a, b2, b1))

    def edge_lengths_squared(self) -> tuple[FieldElem, FieldElem, FieldElem]:
        a, b1, b2 = self.vertices
        return ((b1 - a).norm_squared(), (b2 - a).norm_squared(),
                (b2 - b1).norm_squared())

    def check_shape(self, mode: Mode) -> None:
        """Isosceles with the base/leg ratio dictated by (mode, kind)."""
        l1, l2, base = self.edge_lengths_squared()
        if l1 != l2:
            raise ValueError(f"{self.kind} half-tile is not isosceles")
        phi2 = phi_squared()
        golden = base * phi2 == l1          # golden triangle: legs = phi * base
        gnomon = l1 * phi2 == base          # gnomon: base = phi * legs
        expected_golden = (mode == "p2") == (self.kind == "acute")
        if expected_golden and not golden:
            raise ValueError(f"bad shape for {mode} {self.kind} half-tile")
        if not expected_golden and not gnomon:
            raise ValueError(f"bad shape for {mode} {self.kind} half-tile")

    def glue_edge(self, mode: Mode) -> tuple[Cyclo, Cyclo]:
        a, b1, b2 = self.vertices
        return (a, b2) if mode == "p2" else (b1, b2)


def phi_squared() -> FieldElem:
    return FieldElem(Fraction(3, 2), Fraction(1, 2), 5)


@dataclass(frozen=True)
class Node:
    tile: HalfTile
    children: tuple["Node", ...] = ()


@dataclass(frozen=True)
class Patch:
    """A substitution forest; nodes at depth k store coordinates times phi^k.

    Every leaf sits at the same depth (the patch depth), so the flattened
    tile list shares one scale exponent.
    """

    mode: Mode
    roots: tuple[Node, ...]
    depth: int

    def leaves(self) -> list[HalfTile]:
        out: list[HalfTile] = []

        def walk(node: Node) -> None:
            if node.children:
                for ch in node.children:
                    walk(ch)
            else:
                out.append(node.tile)

        for root in self.roots:
            walk(root)
        return out

    def count_by_kind(self) -> dict[Kind, int]:
        counts = {"acute": 0, "obtuse": 0}
        for t in self.leaves():
            counts[t.kind] += 1
        return counts


def seed(mode: Mode, kind: Kind = "acute") -> Patch:
    """A single half-tile with apex at the origin and unit-scale edges."""
    if mode == "p2":
        if kind == "acute":   # half-kite: legs phi, apex 36 deg
            b1, b2 = PHI_C, PHI_C * ROT36
        else:                 # half-dart: legs 1, apex 108 deg
            b1, b2 = ONE_C, ROT36 * ROT36 * ROT36
    else:
        if kind == "acute":   # half-thick: gnomon, legs 1, apex 108 deg
            b1, b2 = ONE_C, ROT36 * ROT36 * ROT36
        else:                 # half-thin: golden triangle, legs 1, apex 36 deg
            b1, b2 = ONE_C, ROT36
    tile = HalfTile(kind, (Cyclo(), b1, b2))
    tile.check_shape(mode)
    return Patch(mode, (Node(tile),), 0)


# ---------------------------------------------------------------------------
# Substitution rules
# ---------------------------------------------------------------------------
#
# Points are written at the child scale: for a parent vertex p the lifted
# point is phi*p, and a point dividing segment p->q at 1/phi of the parent
# scale lifts to phi*p + (q - p).


def _lift(p: Cyclo) -> Cyclo:
    return PHI_C * p


def _mix(p: Cyclo, q: Cyclo) -> Cyclo:
    # lift of p + (q - p)/phi
    return _lift(p) + q - p


def _children_p2(t: HalfTile) -> tuple[HalfTile, ...]:
    a, b1, b2 = t.vertices
    if t.kind == "acute":
        # half-kite (apex a, legs to b1/b2, axis a->b2)
        q = _mix(b1, a)       # on leg b1->a, one base-length from b1
        r = _mix(a, b2)       # on leg a->b2, one base-length from a
        return (
            HalfTile("obtuse", (q, r, _lift(a))),
            HalfTile("acute", (_lift(b1), q, r)),
            HalfTile("acute", (_lift(b1), _lift(b2), r)),
        )
    # half-dart (apex a, base b1->b2, axis a->b2)
    p = _mix(b2, b1)          # on the base, one leg-length from b2
    return (
        HalfTile("obtuse", (p, _lift(a), _lift(b1))),
        HalfTile("acute", (_lift(b2), p, _lift(a))),
    )


def _children_p3(t: HalfTile) -> tuple[HalfTile, ...]:
    a, b1, b2 = t.vertices
    if t.kind == "acute":
        # half-thick gnomon (apex a, base b1->b2 is the rhombus diagonal)
        q = _mix(b1, a)       # on leg b1->a
        r = _mix(b1, b2)      # on the base, one leg-length from b1
        return (
            HalfTile("acute", (r, _lift(b2), _lift(a))),
            HalfTile("acute", (q, r, _lift(b1))),
            HalfTile("obtuse", (r, q, _lift(a))),
        )
    # half-thin golden triangle (apex a, base b1->b2 is the short diagonal)
    p = _mix(a, b1)           # on leg a->b1
    return (
        HalfTile("obtuse", (_lift(b2), p, _lift(b1))),
        HalfTile("acute", (p, _lift(b2), _lift(a))),
    )


def _subdivide(mode: Mode, t: HalfTile) -> tuple[HalfTile, ...]:
    children = _children_p2(t) if mode == "p2" else _children_p3(t)
    for c in children:
        c.check_shape(mode)
    return children


def deflate(patch: Patch, steps: int) -> Patch:
    """Apply the substitution `steps` times to every leaf."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    roots = patch.roots
    for _ in range(steps):
        roots = tuple(_extend(patch.mode, r) for r in roots)
    return Patch(patch.mode, roots, patch.depth + steps)


def _extend(mode: Mode, node: Node) -> Node:
    if node.children:
        return Node(node.tile, tuple(_extend(mode, c) for c in node.children))
    return Node(node.tile, tuple(Node(t) for t in _subdivide(mode, node.tile)))


class InflateError(ValueError):
    pass


def inflate(patch: Patch, steps: int) -> Patch:
    """Collapse the deepest `steps` substitution levels (exact inverse)."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if steps > patch.depth:
        raise InflateError("cannot inflate beyond seed")
    if steps == 0:
        return patch

    def truncate(node: Node, remaining: int) -> Node:
        if remaining == 0:
            return Node(node.tile)
        return Node(node.tile, tuple(truncate(c, remaining - 1) for c in node.children))

    keep = patch.depth - steps
    return Patch(patch.mode, tuple(truncate(r, keep) for r in patch.roots), keep)


# ---------------------------------------------------------------------------
# Exact verification: children tile the parent
# ---------------------------------------------------------------------------


def _oriented_edges(tile: HalfTile) -> list[tuple[Cyclo, Cyclo]]:
    a, b1, b2 = tile.vertices
    cycle = (a, b1, b2) if cross_sign(a, b1, b2) > 0 else (a, b2, b1)
    return [(cycle[0], cycle[1]), (cycle[1], cycle[2]), (cycle[2], cycle[0])]


def _on_segment(p: Cyclo, q: Cyclo, x: Cyclo) -> bool:
    """x on the closed segment [p, q], decided in the sheared exact plane."""
    if cross_sign(p, q, x) != 0:
        return False
    dpx = (x - p).real() * (q - p).real() + (x - p).imag_scaled() * (q - p).imag_scaled()
    dq = (q - p).real() * (q - p).real() + (q - p).imag_scaled() * (q - p).imag_scaled()
    return dpx.sign() >= 0 and (dq - dpx).sign() >= 0


def children_tile_parent(mode: Mode, parent: HalfTile,
                         children: Sequence[HalfTile]) -> bool:
    """Edge-cancellation check: the children exactly tile the lifted parent.

    Interior directed edges cancel in opposite pairs; the surviving edges must
    partition the parent's (lifted) boundary, each parent edge being covered
    by a contiguous chain with the parent's orientation.
    """
    lifted = HalfTile(parent.kind, tuple(_lift(v) for v in parent.vertices))
    counts: dict[tuple[Cyclo, Cyclo], int] = {}
    for ch in children:
        for e in _oriented_edges(ch):
            rev = (e[1], e[0])
            if counts.get(rev, 0) > 0:
                counts[rev] -= 1
                if counts[rev] == 0:
                    del counts[rev]
            else:
                counts[e] = counts.get(e, 0) + 1
    remaining: list[tuple[Cyclo, Cyclo]] = []
    for e, k in counts.items():
        if k != 1:
            return False  # an edge traversed twice in the same direction
        remaining.append(e)

    used = [False] * len(remaining)
    for start, end in _oriented_edges(lifted):
        cursor = start
        while cursor != end:
            step = next((i for i, (u, v) in enumerate(remaining)
                         if not used[i] and u == cursor and _on_segment(start, end, v)),
                        None)
            if step is None:
                return False
            used[step] = True
            cursor = remaining[step][1]
    return all(used)


def verify_patch(patch: Patch) -> None:
    """Check the tiling invariant at every internal node; raises on failure."""

    def walk(node: Node) -> None:
        node.tile.check_shape(patch.mode)
        if node.children:
            if not children_tile_parent(patch.mode, node.tile,
                                        [c.tile for c in node.children]):
                raise AssertionError("children do not tile their parent")
            for c in node.children:
                walk(c)

    for root in patch.roots:
        walk(root)


# ---------------------------------------------------------------------------
# Mirror mates and whole-tile doubling
# ---------------------------------------------------------------------------


def _phi_power_inverse(x: FieldElem) -> Cyclo:
    """Ring inverse of x when x is a power of phi; raises otherwise."""
    from .field import phi as _phi
    golden = _phi()
    inv = ONE_C
    phi_inv = PHI_C - ONE_C
    guard = 0
    while x != 1:
        x = x / golden
        inv = inv * phi_inv
        guard += 1
        if guard > 64:
            raise ValueError("edge norm is not a phi power")
    return inv


def mirror_mate(tile: HalfTile, mode: Mode) -> HalfTile:
    """The reflected copy across the glue edge, completing the whole tile.

    Exact in the ring: glue edges of stored tiles have phi-power squared
    length, so the reflection denominator is a unit.
    """
    p, q = tile.glue_edge(mode)
    if mode == "p3":
        a, b1, b2 = tile.vertices
        return HalfTile(tile.kind, (b1 + b2 - a, b2, b1))
    e = q - p
    inv = _phi_power_inverse(e.norm_squared())
    a, b1, b2 = tile.vertices
    reflected = p + e * e * (b1 - p).conjugate() * inv
    return HalfTile(tile.kind, (a, reflected, b2))


def mirror_double(patch: Patch) -> Patch:
    """Adjoin the mirror mate of every root (doubles undivided seeds)."""
    mates = tuple(Node(mirror_mate(r.tile, patch.mode)) for r in patch.roots)
    if patch.depth != 0:
        raise ValueError("mirror_double applies to undivided seeds")
    return Patch(patch.mode, patch.roots + mates, 0)


# ---------------------------------------------------------------------------
# Pairing half-tiles into whole tiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WholeTile:
    kind: str                       # kite, dart, thick, thin
    vertices: tuple[Cyclo, Cyclo, Cyclo, Cyclo]
    halves: tuple[int, int]         # leaf indices


@dataclass(frozen=True)
class PairReport:
    tiles: tuple[WholeTile, ...]
    leftovers: tuple[int, ...]      # leaf indices without a mate in the patch


_WHOLE_NAME = {("p2", "acute"): "kite", ("p2", "obtuse"): "dart",
               ("p3", "acute"): "thick", ("p3", "obtuse"): "thin"}


def pair_tiles(patch: Patch, mode: Optional[Mode] = None) -> PairReport:
    """Merge mirror mates sharing their glue edge into whole tiles.

    In mode p2 mates share the ordered axis edge (same apex, same far end);
    in mode p3 mates share the base and sit point-symmetrically about its
    midpoint (equivalent to the mirror position for isosceles tiles).
    """
    mode = mode or patch.mode
    leaves = patch.leaves()
    paired: dict[int, tuple[int, WholeTile]] = {}
    tiles: list[WholeTile] = []
    if mode == "p2":
        index: dict[tuple, list[int]] = {}
        for i, t in enumerate(leaves):
            index.setdefault((t.kind, t.glue_edge(mode)), []).append(i)
        for (kind, _edge), group in sorted(index.items(),
                                           key=lambda kv: min(kv[1])):
            if len(group) == 2:
                i, j = group
                a, b1, b2 = leaves[i].vertices
                other_b1 = leaves[j].vertices[1]
                tiles.append(WholeTile(_WHOLE_NAME[(mode, kind)],
                                       (a, b1, b2, other_b1), (i, j)))
                paired[i] = paired[j] = (len(tiles) - 1, tiles[-1])
    else:
        index = {}
        for i, t in enumerate(leaves):
            a, b1, b2 = t.vertices
            key = (t.kind, frozenset((b1, b2)))
            index.setdefault(key, []).append(i)
        for (kind, _edge), group in sorted(index.items(),
                                           key=lambda kv: min(kv[1])):
            if len(group) == 2:
                i, j = group
                a, b1, b2 = leaves[i].vertices
                a2 = leaves[j].vertices[0]
                if a2 != b1 + b2 - a:
                    continue  # same diagonal but not the mirror position
                tiles.append(WholeTile(_WHOLE_NAME[(mode, kind)],
                                       (a, b1, a2, b2), (i, j)))
                paired[i] = paired[j] = (len(tiles) - 1, tiles[-1])
    leftovers = tuple(i for i in range(len(leaves)) if i not in paired)
    return PairReport(tuple(tiles), leftovers)


def boundary_edges(patch: Patch) -> list[tuple[Cyclo, Cyclo]]:
    """Uncancelled directed leaf edges: the boundary of the patch union."""
    counts: dict[tuple[Cyclo, Cyclo], int] = {}
    for t in patch.leaves():
        for e in _oriented_edges(t):
            rev = (e[1], e[0])
            if counts.get(rev, 0) > 0:
                counts[rev] -= 1
                if counts[rev] == 0:
                    del counts[rev]
            else:
                counts[e] = counts.get(e, 0) + 1
    return [e for e, k in counts.items() for _ in range(k)]


# ---------------------------------------------------------------------------
# Shipped triples for the convex tiles
# ---------------------------------------------------------------------------


def tile_triple(kind: str):
    """Construction-ready triple for a convex tile type.

    Accepted kinds: kite, thick_rhombus, thin_rhombus, prolate_rhombohedron,
    oblate_rhombohedron.
    """
    from . import examples
    allowed = ("kite", "thick_rhombus", "thin_rhombus",
               "prolate_rhombohedron", "oblate_rhombohedron")
    if kind not in allowed:
        raise ValueError(f"unknown tile type {kind!r}; expected one of {allowed}")
    return examples.get_example(kind)


# ---------------------------------------------------------------------------
# SVG output
# ---------------------------------------------------------------------------

_FILL = {"acute": "#e8b84b", "obtuse": "#4b7de8",
         "kite": "#e8b84b", "dart": "#4b7de8",
         "thick": "#e8b84b", "thin": "#4b7de8"}


def _fmt(x: float, digits: int) -> str:
    s = f"{x:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _svg_document(body: list[str], points: list[complex], digits: int) -> str:
    if points:
        xs = [p.real for p in points]
        ys = [p.imag for p in points]
        pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
        vb = (min(xs) - pad, min(ys) - pad,
              max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad)
    else:
        vb = (0.0, 0.0, 1.0, 1.0)
    head = ('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="'
            + " ".join(_fmt(v, digits) for v in vb) + '">')
    return "\n".join([head] + body + ["</svg>"]) + "\n"


def render_svg(source: "Patch | Sequence[WholeTile]", digits: int = 12) -> str:
    """Deterministic SVG for a patch's leaves or a list of paired tiles.

    Ring-to-float conversion happens only here; stored coordinates at depth k
    are divided by phi^k.
    """
    polys: list[tuple[str, list[complex]]] = []
    if isinstance(source, Patch):
        scale = ((1 + 5 ** 0.5) / 2) ** (-source.depth)
        for t in source.leaves():
            polys.append((t.kind, [v.to_complex() * scale for v in t.vertices]))
    else:
        for tile in source:
            polys.append((tile.kind, [v.to_complex() for v in tile.vertices]))
    body = []
    points: list[complex] = []
    for kind, pts in polys:
        points.extend(pts)
        attr = " ".join(f"{_fmt(p.real, digits)},{_fmt(p.imag, digits)}" for p in pts)
        body.append(f'<polygon points="{attr}" fill="{_FILL[kind]}" '
                    'stroke="#222222" stroke-width="0.01"/>')
    return _svg_document(body, points, digits)


def render_star(count: int = 5, digits: int = 12) -> str:
    """The roots-of-unity star: `count` arrows from the origin."""
    import cmath
    body = []
    points = [0j]
    for k in range(count):
        z = cmath.exp(2j * cmath.pi * k / count)
        points.append(z)
        body.append(f'<line x1="0" y1="0" x2="{_fmt(z.real, digits)}" '
                    f'y2="{_fmt(z.imag, digits)}" stroke="#222222" stroke-width="0.02"/>')
    return _svg_document(body, points, digits)
