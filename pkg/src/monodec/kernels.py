"""Backend selection for the exponent-vector kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded. Setting ``MONODEC_PURE_PYTHON=1`` forces the fallback.
"""
import os

if os.environ.get("MONODEC_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import (  # noqa: F401
        MAX_EXPONENT, canonical_key, divisible_by_any, lcm_pairs, members,
        minimalize, mul_pairs)
    BACKEND = "python"
else:
    try:
        from ._kernels import (  # noqa: F401
            MAX_EXPONENT, canonical_key, divisible_by_any, lcm_pairs, members,
            minimalize, mul_pairs)
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import (  # noqa: F401
            MAX_EXPONENT, canonical_key, divisible_by_any, lcm_pairs, members,
            minimalize, mul_pairs)
        BACKEND = "python"
