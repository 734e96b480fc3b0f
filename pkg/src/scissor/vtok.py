"""VTOK: a minimal binary container for video token tensors.

Layout (little-endian throughout):

    offset  size  field
    0       4     magic "VTOK"
    4       2     version, currently 1
    6       2     flags, currently 0
    8       4     n_frames
    12      4     tokens_per_frame
    16      4     dims
    20      4*n*m*d  float32 payload, frame-major, then token, then dimension

Write then read is bit-exact. Format violations raise VtokFormatError carrying
the byte offset of the first violation.
"""

from __future__ import annotations

import os
import struct

import numpy as np

from .errors import VtokFormatError
from .tokens import VideoTokens

MAGIC = b"VTOK"
VERSION = 1
_HEADER = struct.Struct("<4sHHIII")
HEADER_SIZE = _HEADER.size  # 20 bytes including the magic


def write_vtok(path: str | os.PathLike, video: VideoTokens | np.ndarray) -> None:
    """Serialize a token tensor; accepts VideoTokens or a (n, m, d) array."""
    if not isinstance(video, VideoTokens):
        video = VideoTokens.from_array(video)
    header = _HEADER.pack(
        MAGIC, VERSION, 0, video.n_frames, video.tokens_per_frame, video.dims
    )
    payload = np.ascontiguousarray(video.data, dtype="<f4").tobytes()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(payload)


def read_vtok(path: str | os.PathLike) -> VideoTokens:
    with open(path, "rb") as fh:
        blob = fh.read()

    if len(blob) < HEADER_SIZE:
        raise VtokFormatError(
            f"truncated header: file has {len(blob)} bytes, {HEADER_SIZE - len(blob)} missing",
            offset=len(blob),
        )
    magic, version, flags, n, m, d = _HEADER.unpack_from(blob, 0)
    if magic != MAGIC:
        raise VtokFormatError(f"bad magic {magic!r}, expected {MAGIC!r}", offset=0)
    if version != VERSION:
        raise VtokFormatError(f"unsupported version {version}, expected {VERSION}", offset=4)
    if flags != 0:
        raise VtokFormatError(f"unsupported flags {flags:#06x}, expected 0", offset=6)
    for off, name, value in ((8, "n_frames", n), (12, "tokens_per_frame", m), (16, "dims", d)):
        if value == 0:
            raise VtokFormatError(f"{name} must be >= 1, got 0", offset=off)

    expected = 4 * n * m * d
    actual = len(blob) - HEADER_SIZE
    if actual < expected:
        raise VtokFormatError(
            f"payload truncated: {expected - actual} bytes missing "
            f"(expected {expected}, got {actual})",
            offset=HEADER_SIZE + actual,
        )
    if actual > expected:
        raise VtokFormatError(
            f"{actual - expected} trailing bytes after payload", offset=HEADER_SIZE + expected
        )

    data = np.frombuffer(blob, dtype="<f4", count=n * m * d, offset=HEADER_SIZE)
    bad = np.flatnonzero(~np.isfinite(data))
    if bad.size:
        raise VtokFormatError(
            f"non-finite value at flat index {int(bad[0])}",
            offset=HEADER_SIZE + 4 * int(bad[0]),
        )
    return VideoTokens.from_array(data.reshape(n, m, d).astype(np.float32))
