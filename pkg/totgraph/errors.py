"""totgraph.errors.py"""


class TotgraphError(Exception):
    """Base class of every error raised by totgraph."""


class RingSpecError(TotgraphError):
    """
    A ring specification could not be parsed or is not acceptable.

    :param position: character offset of the failure in the spec text, if known.
    :param expected: the tokens the parser expected at `position`.
    """

    def __init__(self, message, text="", position=None, expected=None):
        self.text = text
        self.position = position
        self.expected = expected
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class RingBuildError(TotgraphError):
    """A descriptor could not be realized as a finite ring."""


class BlockNotLocalError(RingBuildError):
    """The non-units of a block are not closed under addition."""

    def __init__(self, block, witness):
        self.block = block
        self.witness = witness
        left, right = witness
        super().__init__(
            f"block not local: non-units not additively closed in {block} "
            f"({left} + {right} is a unit)"
        )


class CapExceededError(RingBuildError):
    """A configured size cap was exceeded."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


class ArithmeticConsistencyError(TotgraphError):
    """Two independent computations of the same structure disagree."""


class NotAnIdealError(TotgraphError):
    """Z(R) is not closed under addition."""

    def __init__(self, witness, total):
        self.witness = witness
        self.total = total
        left, right = witness
        super().__init__(f"Z(R) not an ideal: {left} + {right} = {total} is not a zero-divisor")


class HypothesisError(TotgraphError):
    """A construction was called outside of the hypotheses it is valid for."""


class LatinSumError(TotgraphError):
    """A Latin-sum array was requested for unsupported fields."""


class InvalidWitnessError(TotgraphError):
    """A coloring or clique witness failed re-validation."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class VertexCountMismatchError(TotgraphError):
    """A coloring does not cover exactly the vertices of its graph."""
