"""Exact enumeration of rooted and unrooted d-regular maps on orientable surfaces."""

from regmaps.exactnum import IntegralityError
from regmaps.multiface import rooted_regular
from regmaps.multiface_unrooted import unrooted_regular
from regmaps.oneface import rooted_one_face
from regmaps.oneface_unrooted import unrooted_one_face

__all__ = [
    "IntegralityError",
    "clear_caches",
    "rooted_one_face",
    "rooted_regular",
    "unrooted_one_face",
    "unrooted_regular",
]

__version__ = "0.1.0"


def clear_caches() -> None:
    """Forget every memoized intermediate result (mainly for timing runs)."""
    from regmaps import multiface, oneface, orbifolds

    multiface.reset_caches()
    oneface.composition_sum.cache_clear()
    orbifolds._generate.cache_clear()
