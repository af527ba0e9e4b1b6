"""Exception hierarchy shared by every module of the package."""


class PosetError(ValueError):
    """Base class for invalid input or unsatisfiable requests."""


class UnknownElement(PosetError):
    pass


class DuplicateElement(PosetError):
    pass


class SelfCover(PosetError):
    pass


class CycleDetected(PosetError):
    pass


class NoMaximum(PosetError):
    pass


class NotAChain(PosetError):
    pass


class EmptyMeetRequest(PosetError):
    pass


class SizeCapExceeded(PosetError):
    pass


class NameClash(PosetError):
    pass


class InvalidClosureContext(PosetError):
    pass


class NotAMooreFamily(PosetError):
    pass


class GroundTooLarge(PosetError):
    pass


class NotAGroup(PosetError):
    pass


class OrderTooLarge(PosetError):
    pass


class RetryBudgetExhausted(PosetError):
    pass
