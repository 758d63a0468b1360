"""Exact coordinates of tile trajectories on the hyperplane H and their export.

Everything up to the final text formatting is done in rationals.  H is mapped
to R^3 (N = 4) or R^2 (N = 3) with a fixed orthonormal basis so outputs are
byte-stable.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .lattice import FlatTile, HPoint, Monomial, SlantTile, project, squared_distance

# rows of the H -> R^k maps, as (integer row, squared norm)
_BASIS = {
    4: (((1, -1, 0, 0), 2), ((1, 1, -2, 0), 6), ((1, 1, 1, -3), 12)),
    3: (((1, -1, 0), 2), ((1, 1, -2), 6)),
}


@dataclass(frozen=True)
class EmbeddedTile:
    flat: FlatTile
    verts: tuple[HPoint, ...]
    anchor: Monomial


def embed(lifts: Iterable[SlantTile]) -> list[EmbeddedTile]:
    """Project each lift's vertices onto H.

    Accepts any iterable of lifts, e.g. ``Trajectory.lifts``.
    """
    out = []
    for s in lifts:
        verts = tuple(project(v) for v in s.vertices())
        out.append(EmbeddedTile(s.flat(), verts, s.base))
    return out


def edge_lengths(tile: EmbeddedTile) -> Counter:
    """Multiset of squared edge lengths."""
    return Counter(squared_distance(p, q) for p, q in combinations(tile.verts, 2))


def shared_vertices(a: EmbeddedTile, b: EmbeddedTile) -> int:
    return len(set(a.verts) & set(b.verts))


def _to_plane(p: HPoint) -> tuple[float, ...]:
    rows = _BASIS[len(p)]
    return tuple(float(sum(c * x for c, x in zip(row, p))) / math.sqrt(n2) for row, n2 in rows)


def _fmt(x: float) -> str:
    s = f"{x:.9f}"
    return "0.000000000" if s == "-0.000000000" else s


def to_mesh(tiles: Sequence[EmbeddedTile]) -> str:
    """Wavefront-style text: one ``v`` per distinct vertex, four ``f`` per tetrahedron."""
    if any(len(t.verts) != 4 for t in tiles):
        raise DimensionMismatch("mesh export needs tetrahedra (N = 4)")
    index: dict[HPoint, int] = {}
    lines = []
    faces = []
    for t in tiles:
        ids = []
        for p in t.verts:
            if p not in index:
                index[p] = len(index) + 1
                lines.append("v " + " ".join(_fmt(c) for c in _to_plane(p)))
            ids.append(index[p])
        for tri in combinations(ids, 3):
            faces.append("f " + " ".join(map(str, tri)))
    return "\n".join(lines + faces) + "\n"


def to_svg(tiles: Sequence[EmbeddedTile], scale: float = 40.0) -> str:
    """Standalone SVG, one polygon per triangle, labelled in trajectory order."""
    if any(len(t.verts) != 3 for t in tiles):
        raise DimensionMismatch("svg export needs triangles (N = 3)")
    pts = [[_to_plane(p) for p in t.verts] for t in tiles]
    xs = [x for tri in pts for x, _ in tri] or [0.0]
    ys = [y for tri in pts for _, y in tri] or [0.0]
    pad = 0.5
    x0, y1 = min(xs) - pad, max(ys) + pad
    width = (max(xs) - min(xs) + 2 * pad) * scale
    height = (max(ys) - min(ys) + 2 * pad) * scale

    def xy(x: float, y: float) -> str:
        # svg y axis points down
        return f"{_fmt2((x - x0) * scale)},{_fmt2((y1 - y) * scale)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt2(width)}" height="{_fmt2(height)}" '
        f'viewBox="0 0 {_fmt2(width)} {_fmt2(height)}">',
    ]
    for i, tri in enumerate(pts, 1):
        cx = sum(x for x, _ in tri) / 3
        cy = sum(y for _, y in tri) / 3
        out.append(
            f'<polygon data-index="{i}" points="{" ".join(xy(x, y) for x, y in tri)}" '
            'fill="#d0d0d0" stroke="#000000" stroke-width="1"/>'
        )
        cxs, cys = xy(cx, cy).split(",")
        out.append(
            f'<text x="{cxs}" y="{cys}" font-size="{_fmt2(scale / 4)}" '
            f'text-anchor="middle">{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _fmt2(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


@dataclass(frozen=True)
class PeriodReport:
    period: int
    translations: tuple[HPoint | None, ...]  # one per i with tile i + period present

    @property
    def holds(self) -> bool:
        return all(t is not None for t in self.translations) and len(set(self.translations)) <= 1

    @property
    def translation(self) -> HPoint | None:
        if self.holds and self.translations:
            return self.translations[0]
        return None


def _translate_between(a: EmbeddedTile, b: EmbeddedTile) -> HPoint | None:
    pa, pb = sorted(a.verts), sorted(b.verts)
    deltas = {tuple(y - x for x, y in zip(p, q)) for p, q in zip(pa, pb)}
    if len(deltas) != 1:
        return None
    d = deltas.pop()
    # a projected lattice vector has N*coordinate integral and all N*coordinates congruent
    scaled = [c * len(d) for c in d]
    if any(c.denominator != 1 for c in scaled) or len({int(c) % len(d) for c in scaled}) != 1:
        return None
    return d


def period_check(tiles: Sequence[EmbeddedTile], period: int = 12) -> PeriodReport:
    """Compare tile i + period with tile i for every applicable i."""
    trans = tuple(
        _translate_between(tiles[i], tiles[i + period]) for i in range(len(tiles) - period)
    )
    return PeriodReport(period, trans)


def helix_period_check(tiles: Sequence[EmbeddedTile], period: int = 12) -> PeriodReport:
    return period_check(tiles, period)


def smallest_period(tiles: Sequence[EmbeddedTile]) -> int | None:
    for p in range(1, len(tiles)):
        if period_check(tiles, p).holds:
            return p
    return None


def as_fraction_text(p: HPoint) -> str:
    return "(" + ", ".join(str(Fraction(c)) for c in p) + ")"
