"""Hot kernels: compiled extension when built, pure-Python fallback otherwise.

Set ``SUPERCOHOM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _modp_py as python_backend

compiled_backend = None
if not os.environ.get("SUPERCOHOM_PURE_PYTHON"):
    try:
        from . import _modp as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

ModpReducer = _active.ModpReducer
rank_mod_p = _active.rank_mod_p

__all__ = ["BACKEND", "ModpReducer", "rank_mod_p", "python_backend", "compiled_backend"]
