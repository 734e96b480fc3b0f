"""Array-in, array-out bindings for the scissor token compressor.

Intended for callers that already hold token embeddings as numpy arrays and
want compression without going through files or the command line. All entry
points are stateless functions; errors from the core (format errors carry a
byte offset, zero-norm errors carry the row index) pass through unchanged.
"""

from scissor.errors import (
    NonFiniteInputError,
    PartitionMismatchError,
    VtokFormatError,
    ZeroNormRowError,
)

from .api import CompressStats, compress, flops, read_vtok, scc, write_vtok
from .arrays import BoundArray, InvalidArrayError

__version__ = "0.1.0"

__all__ = [
    "BoundArray",
    "CompressStats",
    "InvalidArrayError",
    "NonFiniteInputError",
    "PartitionMismatchError",
    "VtokFormatError",
    "ZeroNormRowError",
    "compress",
    "flops",
    "read_vtok",
    "scc",
    "write_vtok",
]
