"""Kernel selection: the compiled extension when built, else pure Python.

Set ``CONELAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py as pure

BACKEND = "python"
compiled = None

if os.environ.get("CONELAB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled
        BACKEND = "cython"
    except ImportError:
        compiled = None

hinf_mul = compiled.hinf_mul if compiled else pure.hinf_mul
hinf_inv = compiled.hinf_inv if compiled else pure.hinf_inv


if compiled is not None:
    _c_compose = compiled.pl_compose

    def pl_compose(gT, gx, gy, hT, hx, hy):
        res = _c_compose(gT, gx, gy, hT, hx, hy)
        if res is None:
            # working exponent past 62 bits
            return pure.pl_compose(gT, gx, gy, hT, hx, hy)
        return res
else:
    pl_compose = pure.pl_compose

pl_canonical = pure.pl_canonical
