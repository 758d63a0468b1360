"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line.  Run the file directly
(``python3 tests/test_acceptance.py``) for just the summary lines.
"""

import random
import sys
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import (  # noqa: E402
    BASIC_2D,
    HELIX,
    HELIX_DRAWINGS,
    INSULIN,
    INSULIN_DRAWINGS,
    OCTAL_DIGITS,
    THREE_DIM,
    drawings,
)
from pile_oracle import surface_tiles, window_tiles  # noqa: E402
from tetracode.codec import (  # noqa: E402
    decode,
    digits,
    encode_sequence,
    from_digits,
    parse_code,
    patch_drawings,
    trace,
)
from tetracode.cone import Cone  # noqa: E402
from tetracode.errors import TileCodeError  # noqa: E402
from tetracode.geometry import edge_lengths, embed, period_check, shared_vertices  # noqa: E402
from tetracode.lattice import FlatTile, Monomial, SlantTile, lift_from_pair, parse_tile  # noqa: E402

T = parse_tile


def F(text):
    return parse_tile(text).flat()


def _final_policy(tr):
    g = tr.gradients
    return "same" if g[-1] == g[-2] else "flip"


# --- criteria: each returns (passed, detail) ---------------------------------


def c1_decode_2d():
    tr = decode(BASIC_2D, T("x[yx]"), "U")
    got = (tr.flats[1], tr.flats[2])
    return got == (F("1[xy]"), F("1[xz]")), f"flats 2,3 = |{got[0]}|, |{got[1]}|"


def c2_decode_3d():
    tr = decode(THREE_DIM, T("xw2z2[xzw]"), "U")
    got = (tr.flats[1], tr.flats[2])
    return got == (F("xwz2[wxz]"), F("xwz[zwx]")), f"flats 2,3 = |{got[0]}|, |{got[1]}|"


def c3_round_trips():
    out = []
    for code, start in [(BASIC_2D, "x[yx]"), (THREE_DIM, "xw2z2[xzw]")]:
        code = parse_code(code)
        tr = decode(code, T(start), "U")
        back = encode_sequence(tr.flats, code[0], "U", _final_policy(tr))
        out.append((back == code, len(code)))
    return all(ok for ok, _ in out), "lengths " + ", ".join(str(n) for _, n in out)


def c4_helix():
    ds = drawings(HELIX_DRAWINGS)
    want = parse_code(HELIX)
    hits = []
    for exit0 in "UD":
        for init in "UD":
            try:
                if patch_drawings(ds, F("y[zxy]"), exit0, init).code == want:
                    hits.append(exit0 + init)
            except TileCodeError:
                pass
    start = T("y[zxy]")
    heights = [ds[0].cone.height(v) for v in start.vertices()]
    ok = bool(hits) and ds[0].cone.on_surface(start) and heights == [0] * 4
    return ok, f"matching (exit0, init): {hits}; start heights {heights}"


def c5_insulin():
    ds = drawings(INSULIN_DRAWINGS)
    want = parse_code(INSULIN)
    notes = []
    ok = False
    for exit0 in "UD":
        for init in "UD":
            try:
                res = patch_drawings(ds, F("zw[xyz]"), exit0, init)
            except TileCodeError as exc:
                notes.append(f"{exit0}{init}: {exc}")
                continue
            first_bad = next((i + 1 for i, (a, b) in enumerate(zip(res.code, want)) if a != b), None)
            if res.code == want and digits(res.code) == OCTAL_DIGITS:
                ok = True
                notes.append(f"{exit0}{init}: match")
            else:
                notes.append(f"{exit0}{init}: differs from letter {first_bad}")
    return ok, "; ".join(notes)


def c6_octal_table():
    expanded = from_digits(OCTAL_DIGITS)
    block = parse_code(INSULIN)
    return expanded == block and len(block) == 63, f"{len(expanded)} letters from {len(OCTAL_DIGITS)} digits"


def _oracle_case(rng, n, b, d, flats):
    peaks = [tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(rng.randint(1, 4))]
    w = Cone(tuple(Monomial(p) for p in peaks))
    ok, obase, oaxes = surface_tiles(peaks, b, d)
    if not ok.all():
        return False
    for f, base, axes in zip(flats, obase.tolist(), oaxes.tolist()):
        s = w.surface_lift(f)
        if s.base.exps != tuple(base) or s.dirs != tuple(axes):
            return False
    return True


def c7_oracle(n3=75, n4=25, budget=30.0):
    rng = random.Random(20241)
    t0 = time.perf_counter()
    agree = 0
    total = 0
    for n, count in [(3, n3), (4, n4)]:
        b, d = window_tiles(n, -5, 5)
        flats = [FlatTile(SlantTile(Monomial(tuple(x)), tuple(y))) for x, y in zip(b.tolist(), d.tolist())]
        for _ in range(count):
            total += 1
            agree += _oracle_case(rng, n, b, d, flats)
    dt = time.perf_counter() - t0
    return agree == total and dt < budget, f"{agree}/{total} cones agree in {dt:.1f} s"


def _random_tile(rng, n):
    perm = rng.sample(range(n), n)
    return SlantTile(Monomial(tuple(rng.randint(-6, 6) for _ in range(n))), tuple(perm[:-1]))


def c8_properties(cases=1000):
    rng = random.Random(8)
    fails = Counter()
    for _ in range(cases):
        s = _random_tile(rng, rng.choice([3, 4, 5]))
        t = s
        for _ in range(s.dim):
            t = t.shift()
        fails["shift^N"] += t != s.translate(1)
        fails["up.down"] += s.down().up() != s.shift()
        nbs = s.flat().neighbors()
        fails["slot-cycle"] += any(nbs[k].d_flat != nbs[(k + 1) % s.dim].u_flat for k in range(s.dim))

        code = "".join(rng.choice("UD") for _ in range(rng.randint(2, 200)))
        exit0 = rng.choice("UD")
        tr = decode(code, s, exit0)
        fails["round-trip"] += encode_sequence(tr.flats, code[0], exit0, _final_policy(tr)) != code

        n = rng.choice([3, 4])
        w = Cone(tuple(Monomial(tuple(rng.randint(-5, 5) for _ in range(n))) for _ in range(rng.randint(1, 4))))
        tr = trace(w, _random_tile(rng, n).flat(), rng.choice("UD"), 20)
        f = tr.flats
        fails["lift-from-pair"] += any(
            lift_from_pair(f[i - 1], f[i], f[i + 1]).gradient != tr.lifts[i].gradient for i in range(1, len(f) - 1)
        )
    names = ["shift^N", "up.down", "slot-cycle", "round-trip", "lift-from-pair"]
    return sum(fails.values()) == 0, ", ".join(f"{k} {cases - fails[k]}/{cases}" for k in names)


def c9_geometry():
    rng = random.Random(9)
    runs = [decode(THREE_DIM, T("xw2z2[xzw]")), decode(HELIX, T("y[zxy]"))]
    for _ in range(50):
        code = "".join(rng.choice("UD") for _ in range(60))
        runs.append(decode(code, _random_tile(rng, 4), rng.choice("UD")))
    want = Counter({Fraction(3, 4): 4, Fraction(1): 2})
    tets = bad_edges = bad_share = 0
    for tr in runs:
        tiles = embed(tr.lifts)
        tets += len(tiles)
        bad_edges += sum(edge_lengths(t) != want for t in tiles)
        bad_share += sum(shared_vertices(a, b) != 3 for a, b in zip(tiles, tiles[1:]))
    return bad_edges == 0 and bad_share == 0, f"{tets} tetrahedra, {bad_edges} bad edge sets, {bad_share} bad facets"


def c10_helix_period():
    rep = period_check(embed(decode(HELIX, T("y[zxy]")).lifts), 12)
    shown = None if rep.translation is None else tuple(str(c) for c in rep.translation)
    return rep.holds and len(rep.translations) > 0, f"{len(rep.translations)} pairs, translation {shown}"


CRITERIA = [
    (1, "decode walkthrough 2D", c1_decode_2d),
    (2, "decode walkthrough 3D", c2_decode_3d),
    (3, "encode/decode round trips", c3_round_trips),
    (4, "helix drawings", c4_helix),
    (5, "insulin drawings", c5_insulin),
    (6, "octal table expansion", c6_octal_table),
    (7, "surface lift vs cube piling", c7_oracle),
    (8, "property suites", c8_properties),
    (9, "tetrahedron geometry", c9_geometry),
    (10, "helix periodicity", c10_helix_period),
]


def _line(num, name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d} ({name}): {detail}"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        results.append(ok)
        print(_line(num, name, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
