"""Exception types raised by the package."""


class VPGError(ValueError):
    """Base class for all input and contract errors."""


class DegenerateShapeError(VPGError):
    """An L-shape with a zero-length arm."""


class ShapeClassError(VPGError):
    """A shape does not have the orientation an operation expects."""


class ContractError(VPGError):
    """A documented precondition of an operation was violated."""


class InstanceParseError(VPGError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class OracleCapError(VPGError):
    """The exact oracle refused an instance above its size cap."""
