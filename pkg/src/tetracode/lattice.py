"""Lattice monomials, slant tiles and flat tiles.

A point of Z^N is written multiplicatively: the monomial ``x^2 z^-1`` is the
exponent vector (2, 0, -1).  A slant tile ``a[uvw]`` is the simplex with
vertices a, au, auv, auvw.  Flat tiles are slant tiles modulo the shift
operator, which is the same thing as their projection onto the hyperplane
of coordinate sum zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DimensionMismatch, NoLift, ParseError

NAMED_AXES = {3: "xyz", 4: "xyzw"}


def axis_names(dim: int) -> list[str]:
    if dim in NAMED_AXES:
        return list(NAMED_AXES[dim])
    return [f"x{i + 1}" for i in range(dim)]


def axis_name(axis: int, dim: int) -> str:
    return axis_names(dim)[axis]


def gradient_name(axis: int, dim: int) -> str:
    """Render a gradient index in quotient form, e.g. ``e/z``."""
    return "e/" + axis_name(axis, dim)


class Slot(str, Enum):
    """Side of a lift's local trajectory: the s_U or the s_D neighbor."""

    U = "U"
    D = "D"

    def toggled(self) -> Slot:
        return Slot.D if self is Slot.U else Slot.U

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) < 2:
            raise DimensionMismatch("monomials need dimension >= 2")

    @classmethod
    def one(cls, dim: int) -> Monomial:
        return cls((0,) * dim)

    @classmethod
    def axis(cls, i: int, dim: int) -> Monomial:
        return cls(tuple(1 if j == i else 0 for j in range(dim)))

    @classmethod
    def e(cls, dim: int) -> Monomial:
        """The product x_1 x_2 ... x_N."""
        return cls((1,) * dim)

    @property
    def dim(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def _check(self, other: Monomial) -> None:
        if len(other.exps) != len(self.exps):
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def translate(self, k: int) -> Monomial:
        """Multiply by e^k."""
        return Monomial(tuple(a + k for a in self.exps))

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    @classmethod
    def parse(cls, text: str, dim: int) -> Monomial:
        return parse_monomial(text, dim)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def div(a: Monomial, b: Monomial) -> Monomial:
    return a / b


def _missing_axis(dirs: tuple[int, ...], dim: int) -> int:
    # sum of 0..dim-1 minus the present axes
    return dim * (dim - 1) // 2 - sum(dirs)


@dataclass(frozen=True)
class SlantTile:
    """The simplex base[dirs]: vertices base, base*x_d0, base*x_d0*x_d1, ..."""

    base: Monomial
    dirs: tuple[int, ...]

    def __post_init__(self):
        n = self.base.dim
        if len(self.dirs) != n - 1 or len(set(self.dirs)) != n - 1:
            raise ValueError(f"need {n - 1} distinct directions, got {self.dirs}")
        if not all(0 <= d < n for d in self.dirs):
            raise ValueError(f"direction out of range: {self.dirs}")

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def missing(self) -> int:
        return _missing_axis(self.dirs, self.dim)

    @property
    def gradient(self) -> int:
        """Axis i with D(s) = e/x_i, i.e. the direction the tile never steps in."""
        return self.missing

    def vertices(self) -> list[Monomial]:
        pts = [self.base.exps]
        for d in self.dirs:
            v = list(pts[-1])
            v[d] += 1
            pts.append(tuple(v))
        return [Monomial(p) for p in pts]

    def shift(self) -> SlantTile:
        """The shift operator: a[x_r1 ... x_r(N-1)] -> a x_r1 [x_r2 ... x_rN]."""
        b = list(self.base.exps)
        b[self.dirs[0]] += 1
        return SlantTile(Monomial(tuple(b)), self.dirs[1:] + (self.missing,))

    def unshift(self) -> SlantTile:
        m = self.missing
        b = list(self.base.exps)
        b[m] -= 1
        return SlantTile(Monomial(tuple(b)), (m,) + self.dirs[:-1])

    def translate(self, k: int) -> SlantTile:
        return SlantTile(self.base.translate(k), self.dirs)

    def up(self) -> SlantTile:
        """s_U: the last direction replaced by the missing axis."""
        return SlantTile(self.base, self.dirs[:-1] + (self.missing,))

    def down(self) -> SlantTile:
        """s_D: base advanced along the first direction, directions rotated."""
        b = list(self.base.exps)
        b[self.dirs[0]] += 1
        return SlantTile(Monomial(tuple(b)), self.dirs[1:] + self.dirs[:1])

    def neighbor(self, slot: Slot) -> SlantTile:
        return self.up() if slot is Slot.U else self.down()

    def flat(self) -> FlatTile:
        return FlatTile.of(self)

    def __str__(self) -> str:
        return format_tile(self)

    def __repr__(self) -> str:
        return f"SlantTile({format_tile(self)!r})"

    @classmethod
    def parse(cls, text: str, dim: int | None = None) -> SlantTile:
        return parse_tile(text, dim)


def vertices(s: SlantTile) -> list[Monomial]:
    return s.vertices()


def shift(s: SlantTile) -> SlantTile:
    return s.shift()


def gradient(s: SlantTile) -> int:
    return s.gradient


def up_tile(s: SlantTile) -> SlantTile:
    return s.up()


def down_tile(s: SlantTile) -> SlantTile:
    return s.down()


class Neighbor(NamedTuple):
    lift: SlantTile
    u_flat: FlatTile
    d_flat: FlatTile


@dataclass(frozen=True)
class FlatTile:
    """A shift-orbit of slant tiles, held by its member with base degree 0."""

    rep: SlantTile

    def __post_init__(self):
        if self.rep.base.degree != 0:
            raise ValueError(f"{self.rep} is not canonical; use FlatTile.of")

    @classmethod
    def of(cls, s: SlantTile) -> FlatTile:
        # shift raises the base degree by exactly one, shift^N is translation by e
        n = s.dim
        q, r = divmod(s.base.degree, n)
        t = s.translate(-q) if q else s
        for _ in range(r):
            t = t.unshift()
        return cls(t)

    @property
    def dim(self) -> int:
        return self.rep.dim

    def lifts(self) -> list[SlantTile]:
        out = [self.rep]
        for _ in range(self.dim - 1):
            out.append(out[-1].shift())
        return out

    def lift_with_gradient(self, axis: int) -> SlantTile:
        for s in self.lifts():
            if s.gradient == axis:
                return s
        raise ValueError(f"axis {axis} out of range for dimension {self.dim}")

    def neighbors(self) -> list[Neighbor]:
        """Local trajectories of all lifts, in shift order.

        Lift k's d_flat is lift k+1's u_flat, so the pairs close into one
        cycle over N distinct neighbor flats.
        """
        return [Neighbor(s, s.up().flat(), s.down().flat()) for s in self.lifts()]

    def vertices(self) -> list[Monomial]:
        return self.rep.vertices()

    def __str__(self) -> str:
        return format_tile(self.rep)

    def __repr__(self) -> str:
        return f"FlatTile({format_tile(self.rep)!r})"

    @classmethod
    def parse(cls, text: str, dim: int | None = None) -> FlatTile:
        return parse_tile(text, dim).flat()


def flat_of(s: SlantTile) -> FlatTile:
    return FlatTile.of(s)


def lifts(t: FlatTile) -> list[SlantTile]:
    return t.lifts()


def lift_with_gradient(t: FlatTile, axis: int) -> SlantTile:
    return t.lift_with_gradient(axis)


def neighbors(t: FlatTile) -> list[Neighbor]:
    return t.neighbors()


def lift_from_pair(prev: FlatTile, cur: FlatTile, nxt: FlatTile) -> SlantTile:
    """The lift of ``cur`` whose local trajectory joins ``prev`` and ``nxt``."""
    want = {prev, nxt}
    for nb in cur.neighbors():
        if {nb.u_flat, nb.d_flat} == want:
            return nb.lift
    raise NoLift(f"{prev} and {nxt} are not adjacent on the slot cycle of {cur}")


HPoint = tuple[Fraction, ...]


def project(m: Monomial) -> HPoint:
    """Orthogonal projection onto the hyperplane of coordinate sum 0."""
    mean = Fraction(m.degree, m.dim)
    return tuple(Fraction(a) - mean for a in m.exps)


def squared_distance(p: HPoint, q: HPoint) -> Fraction:
    return sum(((a - b) ** 2 for a, b in zip(p, q)), Fraction(0))


# --- literals ---------------------------------------------------------------

_NAMED_FACTOR = re.compile(r"([a-z])(?:\^(-?\d+)|(\d+))?")
_GENERIC_FACTOR = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def _parse_factors(text: str, dim: int) -> list[int]:
    exps = [0] * dim
    if text == "1":
        return exps
    if not text:
        raise ParseError("empty monomial")
    named = dim in NAMED_AXES
    pat = _NAMED_FACTOR if named else _GENERIC_FACTOR
    pos = 0
    while pos < len(text):
        m = pat.match(text, pos)
        if not m:
            raise ParseError(f"bad monomial near {text[pos:]!r}")
        if named:
            if m.group(1) not in NAMED_AXES[dim]:
                raise ParseError(f"axis {m.group(1)!r} not valid in dimension {dim}")
            axis = NAMED_AXES[dim].index(m.group(1))
            k = m.group(2) or m.group(3)
        else:
            axis = int(m.group(1)) - 1
            if not 0 <= axis < dim:
                raise ParseError(f"axis x{axis + 1} not valid in dimension {dim}")
            k = m.group(2)
        exps[axis] += int(k) if k is not None else 1
        pos = m.end()
    return exps


def parse_monomial(text: str, dim: int) -> Monomial:
    """Parse ``x2y^-1``, ``z2/(x3yw)``, ``1/y^2`` and the like."""
    text = "".join(text.split())
    num, slash, den = text.partition("/")
    exps = _parse_factors(num, dim)
    if slash:
        if den.startswith("(") and den.endswith(")"):
            den = den[1:-1]
        for i, k in enumerate(_parse_factors(den, dim)):
            exps[i] -= k
    return Monomial(tuple(exps))


def _parse_dirs(text: str) -> tuple[list[str], bool]:
    if re.fullmatch(r"[a-z]+", text):
        return list(text), True
    names = re.findall(r"x\d+", text)
    if "".join(names) != text or not names:
        raise ParseError(f"bad direction list {text!r}")
    return names, False


def parse_tile(text: str, dim: int | None = None) -> SlantTile:
    """Parse a tile literal ``MONOMIAL[AXES]``; the dimension is len(AXES) + 1."""
    text = "".join(text.split())
    m = re.fullmatch(r"(.+)\[([^\]]+)\]", text)
    if not m:
        raise ParseError(f"bad tile literal {text!r}")
    names, named = _parse_dirs(m.group(2))
    n = len(names) + 1
    if dim is not None and dim != n:
        raise DimensionMismatch(f"{text!r} has dimension {n}, expected {dim}")
    if named != (n in NAMED_AXES):
        raise ParseError(f"axis naming of {text!r} does not fit dimension {n}")
    table = axis_names(n)
    try:
        dirs = tuple(table.index(a) for a in names)
    except ValueError:
        raise ParseError(f"unknown axis in {text!r}") from None
    try:
        return SlantTile(parse_monomial(m.group(1), n), dirs)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None


def format_monomial(m: Monomial) -> str:
    names = axis_names(m.dim)
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, m.exps) if k]
    return "".join(parts) or "1"


def format_tile(s: SlantTile) -> str:
    names = axis_names(s.dim)
    return f"{format_monomial(s.base)}[{''.join(names[d] for d in s.dirs)}]"


def canonical_flats(window: Sequence[range], dim: int):
    """Yield every flat tile whose canonical base has its first N-1 exponents in ``window``.

    The last exponent is fixed by the degree-0 condition.
    """
    from itertools import permutations, product

    perms = list(permutations(range(dim), dim - 1))
    for head in product(*window):
        base = Monomial(tuple(head) + (-sum(head),))
        for dirs in perms:
            yield FlatTile(SlantTile(base, dirs))
