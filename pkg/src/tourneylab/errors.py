"""Exception hierarchy.  Every error raised by the library derives from ``TournamentError``."""


class TournamentError(ValueError):
    pass


class ParseError(TournamentError):
    """Malformed textual input; carries 1-based ``line``/``offset`` when known."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        self.message = message
        self.line = line
        self.offset = offset
        where = ""
        if line is not None:
            where = f"line {line}" + (f", offset {offset}" if offset is not None else "") + ": "
        super().__init__(where + message)


class NonSquare(ParseError):
    pass


class BadChar(ParseError):
    pass


class NotTournament(ParseError):
    pass


class BadLength(ParseError):
    pass


class BadHex(ParseError):
    pass


class OrderOutOfRange(TournamentError):
    pass


class OrderTooLarge(OrderOutOfRange):
    pass


class EvenOrder(OrderOutOfRange):
    pass


class OddOrder(OrderOutOfRange):
    pass


class SameVertex(TournamentError):
    pass


class NoSuchArc(TournamentError):
    pass


class EmptySet(TournamentError):
    pass


class DecompositionMismatch(TournamentError):
    pass


class NotSingular(TournamentError):
    pass


class NotMaximizer(TournamentError):
    pass


class ClassificationError(TournamentError):
    """A singular maximizer has a singleton component but is not a sink/source over a (almost) regular base."""


class UnknownClaim(TournamentError):
    pass
