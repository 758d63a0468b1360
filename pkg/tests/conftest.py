import pytest

from tetracode import Cone, Drawing

# reference codes, separators kept on purpose
BASIC_2D = "U-U-D-D-U-U-U-D-D-U-U-D-D-D-U-D-D-D-D"
THREE_DIM = "U^6-D^4-U^7-D-U-D"
HELIX = "U-U-D-D-D-D - U-U-D-D - D-D-U-U-D-D"
INSULIN = """
 U-U-U-D-U-U -U-U-D -D-U-U -D-D-U
 -D-U-U -U-U-D -D-U-U -D-D-D -D-U-U
 -U-D-D -D-D-D -D-U-U -D-D-U -D-U-U
 -U-U-D -D-U-U -U-U-D -D-U-U -U-U-D
 -D-D-D
"""
OCTAL_DIGITS = [7, 3, 6, 3, 1, 3, 6, 3, 0, 3, 4, 0, 3, 1, 3, 6, 3, 6, 3, 6, 0]

HELIX_DRAWINGS = [
    (["1", "y2z/x"], 1, 10),
    (["y2z/x", "y2w2"], 7, 16),
]

INSULIN_DRAWINGS = [
    (["z/y", "1/(x2w)", "1/(x2z)"], 1, 14),
    (["1/(xy)", "1/(x2w)", "1/(x2z)"], 7, 18),
    (["1/(xy)", "1/(x3zw)", "1/(x3z2)", "w/(xyz)"], 13, 29),
    (["1/(xyz2)", "1/(x3zw)", "1/(x3z2)", "xw/y2"], 16, 42),
    (["xw2/(yz)", "w/y", "xw/y2"], 36, 45),
    (["xw2/(yz)", "1/y2", "x/y3"], 40, 51),
    (["x/(y4z)", "1/y2", "x/(y4w)"], 45, 57),
    (["x/(y4z)", "1/(y4w2)"], 52, 63),
]


def drawings(spec, dim=4):
    return [Drawing(Cone.of(peaks, dim), a, b) for peaks, a, b in spec]


def cone_file_text(spec, dim=4):
    lines = [f"dim {dim}"]
    lines += [f"cone: {', '.join(p)} ; range: {a}..{b}" for p, a, b in spec]
    return "\n".join(lines) + "\n"


@pytest.fixture
def helix_drawings():
    return drawings(HELIX_DRAWINGS)


@pytest.fixture
def insulin_drawings():
    return drawings(INSULIN_DRAWINGS)
