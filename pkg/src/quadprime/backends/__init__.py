"""Kernel backend selection.

Every hot inner loop in the package exists twice: a numba-jitted version
and a pure-numpy version that computes the same thing. The active backend
is chosen once at import time:

  QUADPRIME_BACKEND=numpy   force the pure-numpy fallback
  QUADPRIME_BACKEND=numba   require the jitted path (ImportError if absent)
  unset / auto              numba if it imports, numpy otherwise

Both backend modules expose the same function names; see
``quadprime.benchmark`` for a side-by-side timing comparison.
"""

import os

_choice = os.environ.get("QUADPRIME_BACKEND", "auto").lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(f"QUADPRIME_BACKEND must be auto, numba or numpy, got {_choice!r}")

if _choice == "numpy":
    from . import numpy_kernels as kernels
elif _choice == "numba":
    from . import numba_kernels as kernels
else:
    try:
        from . import numba_kernels as kernels
    except ImportError:
        from . import numpy_kernels as kernels

BACKEND = kernels.NAME
