"""Backend selection for the unit-group kernels.

The compiled ``_kernels`` extension is used when it was built; otherwise
the pure-Python ``_kernels_py`` module is loaded.  Setting
``ANCPRIM_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("ANCPRIM_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = "cython" if _impl.__name__.endswith("._kernels") else "python"

unit_group = _impl.unit_group
subgroup_closure = _impl.subgroup_closure
image = _impl.image
preimage = _impl.preimage
preimage_meet = _impl.preimage_meet
contains_kernel = _impl.contains_kernel
conductor = _impl.conductor

__all__ = [
    "BACKEND",
    "unit_group",
    "subgroup_closure",
    "image",
    "preimage",
    "preimage_meet",
    "contains_kernel",
    "conductor",
]
