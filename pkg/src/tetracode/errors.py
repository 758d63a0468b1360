"""Exception types shared across the codec."""


class TileCodeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TileCodeError, ValueError):
    """A tile literal, monomial, code string or file could not be parsed."""


class DimensionMismatch(TileCodeError, ValueError):
    pass


class NoLift(TileCodeError):
    """The pair of flats is not adjacent on the current flat's slot cycle."""


class NotAdjacent(TileCodeError):
    pass


class NoSurfaceTile(TileCodeError):
    pass


class AmbiguousSurface(TileCodeError):
    pass


class LengthNotMultipleOfThree(TileCodeError, ValueError):
    pass


class _IndexedError(TileCodeError):
    """Error tied to a 1-based tile index in a trajectory."""

    kind = "error"

    def __init__(self, index: int, detail: str = ""):
        self.index = index
        self.detail = detail
        msg = f"{self.kind} at tile {index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class TrajectoryBreak(_IndexedError):
    kind = "trajectory-break"


class OverlapMismatch(_IndexedError):
    kind = "overlap-mismatch"


class PatchConflict(_IndexedError):
    kind = "patch-conflict"
