"""Exception types shared across the library."""


class NonFiniteInputError(ValueError):
    """Raised when a token matrix contains NaN or Inf entries."""


class ZeroNormRowError(ValueError):
    """Raised when a row has (near-)zero L2 norm and cosine similarity is undefined."""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} has zero norm; cosine similarity is undefined")


class PartitionMismatchError(ValueError):
    """Raised when a partition does not cover a token matrix's rows exactly."""


class VtokFormatError(ValueError):
    """Raised on malformed VTOK files; carries the byte offset of the first violation."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at byte offset {offset})")
