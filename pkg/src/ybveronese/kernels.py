"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module is used.  Setting ``YBX_PURE_PYTHON=1``
forces the fallback.
"""

import os
from types import ModuleType

from . import _kernels_py


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


compiled = _load_compiled()

if compiled is not None and not os.environ.get("YBX_PURE_PYTHON"):
    impl: ModuleType = compiled
    BACKEND = "cython"
else:
    impl = _kernels_py
    BACKEND = "python"


def get_backend(name: str) -> ModuleType:
    """Return a specific backend module by name (``"python"`` or ``"cython"``)."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        if compiled is None:
            raise ImportError("compiled kernels are not built")
        return compiled
    raise ValueError(f"unknown backend {name!r}")


orbit_min_labels = impl.orbit_min_labels
orbit_members = impl.orbit_members
braided = impl.braided
