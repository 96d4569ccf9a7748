"""Exception hierarchy shared by every layer of the kernel."""


class KernelError(Exception):
    """Base class for all errors raised by ipfkernel."""


class ParseError(KernelError):
    """Malformed formula or proof-script text."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class IotaNotAllowed(ParseError):
    pass


class RestrictionViolation(ParseError):
    pass


class DanglingLabel(KernelError):
    pass


class DuplicateDischarge(KernelError):
    pass


class ClassMismatch(KernelError):
    """Two assumption leaves share a label but carry different formulas."""


class FormulaMismatch(KernelError):
    pass


class EigenCapture(KernelError):
    pass


class NotElaborable(KernelError):
    pass


class AlreadyNormal(KernelError):
    pass


class InternalNonTermination(KernelError):
    pass


class NotRestricted(KernelError):
    pass


class MissingBinding(KernelError):
    pass


class CaptureConflict(KernelError):
    pass
