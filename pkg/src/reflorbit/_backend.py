"""Kernel backend selection.

Imports the compiled ``_kernels`` extension when it is available, otherwise
falls back to the pure-Python reference implementation.  Both expose the same
functions with bit-identical results.  Set ``REFLORBIT_KERNEL=pure`` (or
``compiled``) to force a choice; forcing ``compiled`` raises if the extension
was not built.
"""

import os

_choice = os.environ.get("REFLORBIT_KERNEL", "auto").lower()

if _choice == "pure":
    from reflorbit import _kernels_py as kernels
elif _choice == "compiled":
    from reflorbit import _kernels as kernels  # type: ignore[no-redef]
else:
    try:
        from reflorbit import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from reflorbit import _kernels_py as kernels  # type: ignore[no-redef]

poly_mul = kernels.poly_mul
mat_mul = kernels.mat_mul
mat_vec = kernels.mat_vec
content_normalize = kernels.content_normalize
KERNEL_NAME = kernels.KERNEL_NAME
