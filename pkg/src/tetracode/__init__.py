"""Encode lattice tile trajectories as U/D codes and decode them back."""

from .codec import (
    Relation,
    Trajectory,
    TraversalState,
    decode,
    digits,
    encode_letters,
    encode_sequence,
    encode_with_drawings,
    from_digits,
    make_tables,
    parse_code,
    patch_drawings,
    step,
    trace,
)
from .cone import Cone, ConeFile, Drawing, parse_cone_file
from .lattice import FlatTile, Monomial, SlantTile, Slot, lift_from_pair, parse_tile, project

__all__ = [
    "Cone", "ConeFile", "Drawing", "FlatTile", "Monomial", "Relation", "SlantTile", "Slot",
    "Trajectory", "TraversalState", "decode", "digits", "encode_letters", "encode_sequence",
    "encode_with_drawings", "from_digits", "lift_from_pair", "make_tables", "parse_code",
    "parse_cone_file", "parse_tile", "patch_drawings", "project", "step", "trace",
]
