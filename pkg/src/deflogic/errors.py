class DefaultLogicError(ValueError):
    """Base class for precondition failures of the constructions."""


class NotNormalError(DefaultLogicError):
    def __init__(self, offenders):
        self.offenders = list(offenders)
        super().__init__(
            "not a normal default: " + "; ".join(f"#{i}: {d}" for i, d in self.offenders)
        )


class NotNormalizableError(DefaultLogicError):
    """A default is not of the shape ``:G / AND(G)``."""

    def __init__(self, offenders):
        self.offenders = list(offenders)
        super().__init__(
            "default not of the form :G/AND(G): "
            + "; ".join(f"#{i}: {d}" for i, d in self.offenders)
        )


class UnsatisfiableWorldError(DefaultLogicError):
    pass


class InclusionError(DefaultLogicError):
    """The family is not an antichain; ``pair`` is (contained, containing)."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"member {pair[0]} is included in member {pair[1]}")


class NotRepresentingError(DefaultLogicError):
    pass


class NoSSDRError(DefaultLogicError):
    pass


class InconsistentMemberError(DefaultLogicError):
    pass


class UnlistedAtomsError(DefaultLogicError):
    pass


class TooManyCandidatesError(DefaultLogicError):
    pass
