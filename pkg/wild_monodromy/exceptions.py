class Error(Exception):
    pass


class ConstructionError(Error):
    """A tower step could not be built as requested."""

    def __init__(self, message, step=None):
        self.step = step
        if step is not None:
            message = f"Step {step}: {message}"
        super().__init__(message)


class PrecisionError(Error):
    """An element is indistinguishable from 0 at the current precision."""

    hint = "Rerun with a larger PRECISION or RESIDUE_DEGREE."

    def __init__(self, message, bound=None):
        self.bound = bound
        if bound is not None:
            message = f"{message} (precision bound {bound})"
        super().__init__(message)


class CannotSplit(Error):
    pass


class InconclusiveRootSearch(Error):
    pass


class HyodoRangeError(Error):
    pass


class FiltrationError(Error):
    pass


class GroupError(Error):
    pass


class ConductorError(Error):
    def __init__(self, message, ledger=None):
        self.ledger = ledger or []
        super().__init__(message)


class VerificationError(Error):
    """An identity that the computation relies on did not hold."""

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)
