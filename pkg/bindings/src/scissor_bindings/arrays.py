"""Validated array boundary between host code and the compression core."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class InvalidArrayError(ValueError):
    """The input is not a finite numeric array of the expected rank."""


@dataclass(frozen=True)
class BoundArray:
    """A contiguous float32 buffer plus its shape.

    Wraps the host array zero-copy when it is already contiguous float32,
    and takes a converted copy otherwise. Either way the wrapped buffer is
    marked read-only, so nothing downstream can write through to caller
    memory.
    """

    data: np.ndarray

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @classmethod
    def bind(cls, obj, ndim: int | None = None) -> "BoundArray":
        try:
            arr = np.asarray(obj)
        except Exception as exc:
            raise InvalidArrayError(f"not convertible to an array: {exc}") from exc
        if not np.issubdtype(arr.dtype, np.number):
            raise InvalidArrayError(f"non-numeric dtype {arr.dtype}")
        if ndim is not None and arr.ndim != ndim:
            raise InvalidArrayError(f"expected a {ndim}-axis array, got {arr.ndim} axes")
        if arr.size == 0:
            raise InvalidArrayError("array has no elements")
        if arr.dtype == np.float32 and arr.flags.c_contiguous:
            view = arr.view()
        else:
            view = np.ascontiguousarray(arr, dtype=np.float32)
        if not np.isfinite(view).all():
            raise InvalidArrayError("array contains NaN or infinity")
        view.flags.writeable = False
        return cls(data=view)
