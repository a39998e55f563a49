"""Backend selection for the reduction kernels.

The compiled extension ``groebner_sat._kernel`` is used when it imports;
otherwise the pure-Python ``_kernel_py`` is used. Setting the environment
variable ``GROEBNER_SAT_KERNEL=python`` forces the fallback.
"""

import os

from groebner_sat import _kernel_py
from groebner_sat._kernel_py import ExponentOverflowError

_ops = _kernel_py
BACKEND = "python"

if os.environ.get("GROEBNER_SAT_KERNEL", "").lower() != "python":
    try:
        from groebner_sat import _kernel as _ops  # type: ignore[no-redef]
    except ImportError:
        _ops = _kernel_py
    else:
        BACKEND = "cython"

add_scaled = _ops.add_scaled
scale_shift = _ops.scale_shift
mul = _ops.mul
spoly = _ops.spoly
reduce = _ops.reduce
coef_div = _ops.coef_div
coef_mul = _ops.coef_mul
lcm = _ops.lcm
pack = _ops.pack
decode = _ops.decode
buchberger = _ops.buchberger

__all__ = [
    "BACKEND",
    "ExponentOverflowError",
    "add_scaled",
    "buchberger",
    "decode",
    "coef_div",
    "coef_mul",
    "lcm",
    "mul",
    "pack",
    "reduce",
    "scale_shift",
    "spoly",
]
