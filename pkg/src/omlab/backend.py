"""Kernel backend selection.

The subset-table kernels exist twice: jitted with numba and as pure numpy.
``OMLAB_BACKEND`` picks one explicitly (``numba`` or ``numpy``); unset or
``auto`` prefers numba when it imports, falling back to numpy.
"""

from __future__ import annotations

import os
from types import ModuleType


def _load() -> ModuleType:
    choice = os.environ.get("OMLAB_BACKEND", "auto").lower()
    if choice in ("", "auto"):
        try:
            from . import _kernels_numba

            return _kernels_numba
        except ImportError:
            from . import _kernels_numpy

            return _kernels_numpy
    if choice == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if choice == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    raise ValueError(f"OMLAB_BACKEND={choice!r}: expected 'numba', 'numpy', or 'auto'")


kernels = _load()

popcount_table = kernels.popcount_table
superset_closure = kernels.superset_closure
subset_closure = kernels.subset_closure
rank_table = kernels.rank_table
flats_table = kernels.flats_table
minimal_members = kernels.minimal_members
o3_violation = kernels.o3_violation
m3_violation = kernels.m3_violation


def backend_name() -> str:
    return kernels.NAME
