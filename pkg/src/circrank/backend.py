"""Backend selection for the prime-field hot kernels.

The elimination oracle and the dense-polynomial kernels exist twice: a
numba-jitted version and a pure-numpy fallback.  The CIRCRANK_BACKEND
environment variable picks one at import time:

    auto    (default) numba when importable, numpy otherwise
    numba   require the jitted kernels, fail if numba is missing
    numpy   force the pure-numpy fallback

Both backends are compared on identical inputs by the test suite and by
benchmarks/bench_backends.py.
"""

from __future__ import annotations

import os

import numpy as np

_choice = os.environ.get("CIRCRANK_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"CIRCRANK_BACKEND must be 'auto', 'numba' or 'numpy', got {_choice!r}"
    )

if _choice in ("auto", "numba"):
    try:
        from . import _kernels_numba as _impl
        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import _kernels_numpy as _impl
        BACKEND = "numpy"
else:
    from . import _kernels_numpy as _impl
    BACKEND = "numpy"

rank_mod_p = _impl.rank_mod_p
poly_divmod = _impl.poly_divmod
poly_gcd = _impl.poly_gcd
poly_mul = _impl.poly_mul


def warm_up() -> None:
    """Run each kernel once so later timings measure steady state, not JIT."""
    m = np.array([[1, 2], [3, 4]], dtype=np.int64)
    rank_mod_p(m, 5)
    a = np.array([1, 0, 1], dtype=np.int64)
    b = np.array([4, 1], dtype=np.int64)
    poly_divmod(a, b, 5)
    poly_gcd(a, b, 5)
    poly_mul(a, b, 5)
