"""U/D codes: tracing trajectories on cone surfaces, encoding and decoding.

A trajectory is a sequence of flat tiles together with a lift for each one.
The lift's local trajectory names two neighbor flats (the U side and the D
side); one of them is where the trajectory came from, the other is where it
goes next.  The side it leaves through is the exit slot, and the code letter
flips exactly when the gradient of the lift changes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Sequence

from .cone import Cone, Drawing
from .errors import (
    LengthNotMultipleOfThree,
    NoLift,
    NotAdjacent,
    OverlapMismatch,
    ParseError,
    PatchConflict,
    TrajectoryBreak,
)
from .lattice import FlatTile, Monomial, SlantTile, Slot, lift_from_pair


class Relation(str, Enum):
    SAME = "same"
    FLIP = "flip"


@dataclass(frozen=True)
class TraversalState:
    lift: SlantTile
    exit: Slot

    @property
    def flat(self) -> FlatTile:
        return self.lift.flat()

    @property
    def next_flat(self) -> FlatTile:
        return self.lift.neighbor(self.exit).flat()

    @property
    def prev_flat(self) -> FlatTile:
        return self.lift.neighbor(self.exit.toggled()).flat()


@dataclass(frozen=True)
class Trajectory:
    states: tuple[TraversalState, ...]

    def __len__(self) -> int:
        return len(self.states)

    @property
    def lifts(self) -> list[SlantTile]:
        return [st.lift for st in self.states]

    @property
    def flats(self) -> list[FlatTile]:
        return [st.flat for st in self.states]

    @property
    def gradients(self) -> list[int]:
        return [st.lift.gradient for st in self.states]

    @property
    def exits(self) -> str:
        return "".join(st.exit.value for st in self.states)

    def letters(self, init: str | Slot = "U") -> str:
        return encode_letters(self.gradients, init)


def _toward(nb: SlantTile, axis: int) -> SlantTile:
    """The member of nb's shift orbit with the given gradient, at most N-1 shifts on."""
    s = nb
    for _ in range(nb.dim):
        if s.gradient == axis:
            return s
        s = s.shift()
    raise AssertionError("shift orbit misses an axis")


def step(state: TraversalState, relation: Relation | str) -> TraversalState:
    """Advance one tile through the exit slot.

    ``same`` keeps the gradient and the exit slot.  ``flip`` takes the lift
    of the next flat that has the current flat on the old exit side, and
    toggles the slot, so the trajectory keeps moving forward.
    """
    relation = Relation(relation)
    cur = state.flat
    nb = state.lift.neighbor(state.exit)
    if relation is Relation.SAME:
        return TraversalState(_toward(nb, state.lift.gradient), state.exit)
    s = nb
    for _ in range(nb.dim):
        if s.neighbor(state.exit).flat() == cur:
            return TraversalState(s, state.exit.toggled())
        s = s.shift()
    raise AssertionError(f"slot cycle of {nb.flat()} misses {cur}")


def decode(code: str, start: SlantTile, exit0: Slot | str = Slot.U) -> Trajectory:
    """Rebuild the tile trajectory of a U/D code from an initial lift."""
    code = parse_code(code)
    if not code:
        raise ParseError("empty code")
    st = TraversalState(start, Slot(exit0))
    states = [st]
    for a, b in zip(code, code[1:]):
        st = step(st, Relation.SAME if a == b else Relation.FLIP)
        states.append(st)
    return Trajectory(tuple(states))


def encode_letters(gradients: Sequence[int], init: str | Slot = "U") -> str:
    if not gradients:
        raise ValueError("no gradients to encode")
    cur = Slot(init)
    out = [cur.value]
    for g0, g1 in zip(gradients, gradients[1:]):
        if g1 != g0:
            cur = cur.toggled()
        out.append(cur.value)
    return "".join(out)


def _continue_exit(lift: SlantTile, came_from: FlatTile, index: int) -> Slot:
    if lift.up().flat() == came_from:
        return Slot.D
    if lift.down().flat() == came_from:
        return Slot.U
    raise TrajectoryBreak(index, f"{lift} does not connect back to {came_from}")


def trace(
    cone: Cone,
    start: FlatTile | SlantTile,
    exit0: Slot | str = Slot.U,
    steps: int = 1,
    *,
    offset: int = 0,
) -> Trajectory:
    """Follow the cone's vector field from ``start`` for ``steps`` tiles.

    ``offset`` only shifts the tile numbers reported in errors.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if isinstance(start, SlantTile):
        start = start.flat()
    st = TraversalState(cone.surface_lift(start), Slot(exit0))
    states = [st]
    for i in range(1, steps):
        cur = st.flat
        lift = cone.surface_lift(st.next_flat)
        st = TraversalState(lift, _continue_exit(lift, cur, offset + i + 1))
        states.append(st)
    return Trajectory(tuple(states))


def _invert(code: str) -> str:
    return code.translate(str.maketrans("UD", "DU"))


@dataclass(frozen=True)
class PatchResult:
    code: str
    flats: tuple[FlatTile, ...]
    pieces: tuple[Trajectory, ...]
    inverted: tuple[bool, ...]


def _check_ranges(drawings: Sequence[Drawing]) -> None:
    if not drawings:
        raise ValueError("no drawings")
    if drawings[0].start != 1:
        raise ValueError("the first drawing must start at tile 1")
    for prev, cur in zip(drawings, drawings[1:]):
        if not prev.start < cur.start <= prev.stop < cur.stop:
            raise ValueError(
                f"ranges [{prev.start},{prev.stop}] and [{cur.start},{cur.stop}] "
                "must overlap and advance"
            )


def _entry_exit(cone: Cone, flats: list[FlatTile], a: int) -> Slot:
    """Initial exit for a drawing whose first tile is flats[a-1] (1-based a)."""
    lift = cone.surface_lift(flats[a - 1])
    for slot in Slot:
        if a < len(flats):
            ok = lift.neighbor(slot).flat() == flats[a]
        else:
            # only one shared tile: continue away from its predecessor
            ok = lift.neighbor(slot.toggled()).flat() == flats[a - 2]
        if ok:
            return slot
    raise OverlapMismatch(a + 1 if a < len(flats) else a, f"drawing cannot continue from {flats[a - 1]}")


def patch_drawings(
    drawings: Sequence[Drawing],
    start: FlatTile | SlantTile,
    exit0: Slot | str = Slot.U,
    init: Slot | str = "U",
) -> PatchResult:
    """Trace each drawing over its range and glue the local codes together.

    Drawing k > 1 starts on the first tile of its range, which the earlier
    drawings already produced, and must reproduce the shared tiles.  Each
    local code is free up to polarity, so it is inverted when needed to agree
    with the letters already fixed on the overlap.
    """
    _check_ranges(drawings)
    first = drawings[0]
    piece = trace(first.cone, start, exit0, len(first))
    flats = piece.flats
    code = piece.letters(init)
    pieces, inverted = [piece], [False]
    for d in drawings[1:]:
        a = d.start
        piece = trace(d.cone, flats[a - 1], _entry_exit(d.cone, flats, a), len(d), offset=a - 1)
        overlap = len(flats) - (a - 1)
        new = piece.flats
        for i in range(overlap):
            if new[i] != flats[a - 1 + i]:
                raise OverlapMismatch(a + i, f"{new[i]} != {flats[a - 1 + i]}")
        local = piece.letters("U")
        known = code[a - 1:]
        if local[:overlap] == known:
            inverted.append(False)
        elif _invert(local[:overlap]) == known:
            local = _invert(local)
            inverted.append(True)
        else:
            bad = next(i for i in range(1, overlap) if (local[i] == local[i - 1]) != (known[i] == known[i - 1]))
            raise PatchConflict(a + bad, f"local {local[:overlap]} vs patched {known}")
        flats.extend(new[overlap:])
        code += local[overlap:]
        pieces.append(piece)
    return PatchResult(code, tuple(flats), tuple(pieces), tuple(inverted))


def encode_with_drawings(
    drawings: Sequence[Drawing],
    start: FlatTile | SlantTile,
    exit0: Slot | str = Slot.U,
    init: Slot | str = "U",
) -> str:
    return patch_drawings(drawings, start, exit0, init).code


def encode_sequence(
    flats: Sequence[FlatTile],
    init: Slot | str = "U",
    exit0: Slot | str = Slot.U,
    final_policy: Relation | str = Relation.SAME,
) -> str:
    """Encode a flat-tile sequence without any cone.

    Interior lifts are forced by their two neighbors.  The first lift is the
    one whose ``exit0`` side leads to the second tile.  Nothing in the flats
    decides the last letter, so ``final_policy`` does.
    """
    if not flats:
        raise ValueError("empty tile sequence")
    init = Slot(init)
    if len(flats) == 1:
        return init.value
    exit0 = Slot(exit0)
    first = [s for s in flats[0].lifts() if s.neighbor(exit0).flat() == flats[1]]
    if not first:
        raise NotAdjacent(f"tile 2 ({flats[1]}) is not on the {exit0} side of any lift of tile 1")
    grads = [first[0].gradient]
    for i in range(1, len(flats) - 1):
        try:
            grads.append(lift_from_pair(flats[i - 1], flats[i], flats[i + 1]).gradient)
        except NoLift as exc:
            raise NotAdjacent(f"tile {i + 1}: {exc}") from None
    last, prev = flats[-1], flats[-2]
    if not any(prev in (nb.u_flat, nb.d_flat) for nb in last.neighbors()):
        raise NotAdjacent(f"tile {len(flats) - 1} ({prev}) is not adjacent to tile {len(flats)}")
    code = encode_letters(grads, init)
    tail = code[-1] if Relation(final_policy) is Relation.SAME else _invert(code[-1])
    return code + tail


# --- tables -----------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    lift: SlantTile
    gradient: int
    u_flat: FlatTile
    d_flat: FlatTile
    successors: dict  # (exit Slot, Relation) -> TraversalState


@dataclass(frozen=True)
class Tables:
    dim: int
    flat: FlatTile
    rows: tuple[TableRow, ...]
    pairs: dict  # frozenset of two neighbor flats -> lift or None

    @property
    def cycle(self) -> list[FlatTile]:
        return [r.u_flat for r in self.rows]


def make_tables(dim: int) -> Tables:
    """Encoding and decoding tables around the reference flat |1[x1 ... x(N-1)]|."""
    if dim < 3:
        raise ValueError("tables need dimension >= 3")
    flat = SlantTile(Monomial.one(dim), tuple(range(dim - 1))).flat()
    rows = []
    for nb in flat.neighbors():
        succ = {}
        for slot in Slot:
            for rel in Relation:
                succ[(slot, rel)] = step(TraversalState(nb.lift, slot), rel)
        rows.append(TableRow(nb.lift, nb.lift.gradient, nb.u_flat, nb.d_flat, succ))
    around = list(dict.fromkeys(f for r in rows for f in (r.u_flat, r.d_flat)))
    pairs = {}
    for p, q in combinations(around, 2):
        try:
            pairs[frozenset((p, q))] = lift_from_pair(p, flat, q)
        except NoLift:
            pairs[frozenset((p, q))] = None
    return Tables(dim, flat, tuple(rows), pairs)


def format_tables(tables: Tables) -> str:
    from .lattice import gradient_name

    n = tables.dim
    out = [f"# flat tile {tables.flat} (dimension {n})", "", "## lifts and local trajectories"]
    out.append("lift\tgradient\tU-side\tD-side")
    for r in tables.rows:
        out.append(f"{r.lift}\t{gradient_name(r.gradient, n)}\t{r.u_flat}\t{r.d_flat}")
    out += ["", "## encoding: (previous, next) -> lift"]
    for key, lift in tables.pairs.items():
        p, q = sorted(key, key=str)
        out.append(f"{p}\t{q}\t{lift if lift is not None else '-'}")
    out += ["", "## decoding: (lift, exit, relation) -> next lift, next exit"]
    for r in tables.rows:
        for (slot, rel), st in r.successors.items():
            out.append(f"{r.lift}\t{slot}\t{rel.value}\t{st.lift}\t{st.exit}")
    return "\n".join(out) + "\n"


# --- code strings -----------------------------------------------------------

_RUN = re.compile(r"([UD])(?:\^(\d+))?")


def parse_code(text: str) -> str:
    """Accept ``U-U-D``, ``UUD``, whitespace and runs such as ``U^6``."""
    text = "".join(text.split()).replace("-", "")
    out = []
    pos = 0
    while pos < len(text):
        m = _RUN.match(text, pos)
        if not m:
            raise ParseError(f"bad letter {text[pos]!r} in code")
        out.append(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    return "".join(out)


def format_code(code: str, group: int = 15) -> str:
    lines = ["-".join(code[i:i + group]) for i in range(0, len(code), group)]
    return "\n".join(lines) + "\n"


def digits(code: str) -> list[int]:
    """Octal digit per letter triple: DDD is 0, DDU is 1, ..., UUU is 7."""
    code = parse_code(code)
    if len(code) % 3:
        raise LengthNotMultipleOfThree(f"code length {len(code)} is not a multiple of 3")
    return [
        4 * (code[i] == "U") + 2 * (code[i + 1] == "U") + (code[i + 2] == "U")
        for i in range(0, len(code), 3)
    ]


def from_digits(ds: Sequence[int]) -> str:
    out = []
    for d in ds:
        if not 0 <= d <= 7:
            raise ValueError(f"digit {d} out of range")
        out.append("".join("U" if d & bit else "D" for bit in (4, 2, 1)))
    return "".join(out)
