"""Cones over the lattice, their height function and boundary surfaces."""

from __future__ import annotations

import re
from dataclasses import dataclass
from operator import sub
from typing import Iterable

from .errors import AmbiguousSurface, DimensionMismatch, NoSurfaceTile, ParseError
from .lattice import FlatTile, Monomial, SlantTile, format_monomial, parse_monomial


def _dominates(q: tuple[int, ...], p: tuple[int, ...]) -> bool:
    """True if p lies in the cone generated by q."""
    return all(a >= b for a, b in zip(p, q))


@dataclass(frozen=True)
class Cone:
    """The set of lattice points p * x^l (l >= 0) for p among ``peaks``.

    Peaks are deduplicated and any peak inside the cone of another peak is
    dropped, so two cones describing the same point set compare equal only
    if their generators agree after that filtering.
    """

    peaks: tuple[Monomial, ...]

    def __post_init__(self):
        if not self.peaks:
            raise ValueError("a cone needs at least one peak")
        dims = {p.dim for p in self.peaks}
        if len(dims) != 1:
            raise DimensionMismatch(f"peaks of mixed dimension {sorted(dims)}")
        uniq = list(dict.fromkeys(self.peaks))
        kept = tuple(
            p for p in uniq
            if not any(q != p and _dominates(q.exps, p.exps) for q in uniq)
        )
        object.__setattr__(self, "peaks", kept)
        object.__setattr__(self, "_raw", tuple(p.exps for p in kept))

    @classmethod
    def of(cls, peaks: Iterable[Monomial | str], dim: int | None = None) -> Cone:
        out = []
        for p in peaks:
            if isinstance(p, str):
                if dim is None:
                    raise ValueError("dim is required to parse peak literals")
                p = parse_monomial(p, dim)
            out.append(p)
        return cls(tuple(out))

    @property
    def dim(self) -> int:
        return self.peaks[0].dim

    def height(self, z: Monomial | tuple[int, ...]) -> int:
        """max over peaks p of the smallest exponent of z/p.

        The max over the whole cone equals the max over its peaks: moving p
        up inside its own cone only lowers exponents of z/p.
        """
        exps = z.exps if isinstance(z, Monomial) else z
        if len(exps) != self.dim:
            raise DimensionMismatch(f"point of dimension {len(exps)} in a {self.dim}-cone")
        return max(min(map(sub, exps, p)) for p in self._raw)

    def contains(self, z: Monomial) -> bool:
        return self.height(z) >= 0

    def on_surface(self, s: SlantTile) -> bool:
        return all(self.height(v) == 0 for v in s.vertices())

    def surface_lift(self, t: FlatTile) -> SlantTile:
        """The unique boundary-surface tile lying over ``t``.

        Among the N lift classes exactly those with a constant vertex height
        vector can be translated onto the surface; the translation is e^-c
        where c is that constant.
        """
        rep = t.rep
        n = rep.dim
        pts = [rep.base.exps]
        for d in rep.dirs:
            v = list(pts[-1])
            v[d] += 1
            pts.append(tuple(v))
        raw = self._raw
        hs = [max(min(map(sub, z, p)) for p in raw) for z in pts]
        # shifting k times drops vertices 0..k-1 and re-adds them translated by e,
        # which raises their height by exactly 1
        found = []
        for k in range(n):
            vec = hs[k:] + [h + 1 for h in hs[:k]]
            if vec.count(vec[0]) == n:
                found.append((k, vec[0]))
        if not found:
            raise NoSurfaceTile(f"no lift of {t} has constant height")
        if len(found) > 1:
            raise AmbiguousSurface(f"{len(found)} lifts of {t} fit the surface")
        k, c = found[0]
        # the k-th shift starts at vertex k and walks the cyclic direction word
        cyc = rep.dirs + (rep.missing,)
        cyc = cyc[k:] + cyc[:k]
        return SlantTile(Monomial(tuple(a - c for a in pts[k])), cyc[:-1])

    def field(self, t: FlatTile) -> int:
        """The vector field value at ``t``: the gradient axis of its surface lift."""
        return self.surface_lift(t).gradient

    def __str__(self) -> str:
        return ", ".join(format_monomial(p) for p in self.peaks)


def height(w: Cone, z: Monomial) -> int:
    return w.height(z)


def on_surface(w: Cone, s: SlantTile) -> bool:
    return w.on_surface(s)


def surface_lift(w: Cone, t: FlatTile) -> SlantTile:
    return w.surface_lift(t)


def field(w: Cone, t: FlatTile) -> int:
    return w.field(t)


@dataclass(frozen=True)
class Drawing:
    cone: Cone
    start: int
    stop: int  # inclusive, 1-based

    def __post_init__(self):
        if not 1 <= self.start <= self.stop:
            raise ValueError(f"bad range [{self.start}, {self.stop}]")

    def __len__(self) -> int:
        return self.stop - self.start + 1


@dataclass(frozen=True)
class ConeFile:
    dim: int
    drawings: tuple[Drawing, ...]


_LINE = re.compile(r"cone\s*:(?P<peaks>[^;]*);\s*range\s*:\s*(?P<a>\d+)\s*\.\.\s*(?P<b>\d+)\s*")


def parse_cone_file(text: str) -> ConeFile:
    """Read the line format::

        dim 4
        # comment
        cone: 1, y2z/x ; range: 1..10
    """
    dim = None
    drawings = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dim is None:
            m = re.fullmatch(r"dim\s+(\d+)", line)
            if not m:
                raise ParseError(f"line {lineno}: expected 'dim N' header")
            dim = int(m.group(1))
            if dim < 2:
                raise ParseError(f"line {lineno}: dimension must be >= 2")
            continue
        m = _LINE.fullmatch(line)
        if not m:
            raise ParseError(f"line {lineno}: expected 'cone: PEAKS ; range: n..m'")
        peaks = [p for p in (s.strip() for s in m.group("peaks").split(",")) if p]
        if not peaks:
            raise ParseError(f"line {lineno}: cone without peaks")
        try:
            cone = Cone.of(peaks, dim)
            drawings.append(Drawing(cone, int(m.group("a")), int(m.group("b"))))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if dim is None:
        raise ParseError("missing 'dim N' header")
    return ConeFile(dim, tuple(drawings))


def format_cone_file(cf: ConeFile) -> str:
    lines = [f"dim {cf.dim}"]
    for d in cf.drawings:
        lines.append(f"cone: {d.cone} ; range: {d.start}..{d.stop}")
    return "\n".join(lines) + "\n"
