"""Hot kernels with a numba path and a pure-numpy fallback.

Set ``GRACELAB_NO_NUMBA=1`` to force the numpy path. Both backends return
identical results, including which witness is reported.
"""

import os
from types import SimpleNamespace

from . import _numpy
from ._perms import lex_permutations

NO_NUMBA_ENV = "GRACELAB_NO_NUMBA"

_BACKENDS = {"numpy": _numpy}

try:
    from . import _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None
else:
    _BACKENDS["numba"] = _numba


def _select():
    if os.environ.get(NO_NUMBA_ENV, "").strip() not in ("", "0") or _numba is None:
        return "numpy"
    return "numba"


BACKEND = _select()


def get_backend(name=None):
    """Kernel namespace for ``name`` ('numba' | 'numpy'); default is the active one."""
    name = name or BACKEND
    try:
        mod = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}") from None
    return SimpleNamespace(
        name=name,
        best_labeling=mod.best_labeling,
        distinct_label_counts=mod.distinct_label_counts,
        first_nonvanishing=mod.first_nonvanishing,
    )


def available_backends():
    return sorted(_BACKENDS)


__all__ = ["BACKEND", "get_backend", "available_backends", "lex_permutations"]
