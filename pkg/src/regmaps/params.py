"""Vertex/edge/face counts of regular maps from Euler's relation and handshaking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class MapParams:
    d: int
    g: int
    v: int
    n: int
    f: int

    @property
    def darts(self) -> int:
        return 2 * self.n


def one_face_params(d: int, g: int) -> Optional[MapParams]:
    """Parameters of a one-face d-regular map on genus g, or None if none exists.

    With f = 1 we need n - v = 2g - 1 and d v = 2n, i.e. v = (4g - 2)/(d - 2).
    """
    if d < 3 or g < 1:
        return None
    if (4 * g - 2) % (d - 2):
        return None
    v = (4 * g - 2) // (d - 2)
    if (d * v) % 2:
        return None
    n = d * v // 2
    return MapParams(d=d, g=g, v=v, n=n, f=1)


def multi_face_params(d: int, g: int, v: int) -> Optional[MapParams]:
    """Parameters of a d-regular map with v vertices on genus g, or None."""
    if d < 1 or g < 0 or v < 1:
        return None
    if (d * v) % 2:
        return None
    n = d * v // 2
    f = 2 - 2 * g + n - v
    if f < 1:
        return None
    return MapParams(d=d, g=g, v=v, n=n, f=f)
