"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``SUMLABEL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

IASI = _pykernels.IASI
TOPO = _pykernels.TOPO
SEQ = _pykernels.SEQ
GRACEFUL = _pykernels.GRACEFUL
FSTAR = _pykernels.FSTAR
ANCHOR = _pykernels.ANCHOR

UNSAT = _pykernels.UNSAT
SAT = _pykernels.SAT
BUDGET = _pykernels.BUDGET

_backend = _pykernels
if os.environ.get("SUMLABEL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _backend  # noqa: F811
    except ImportError:
        pass

BACKEND = "cython" if _backend is not _pykernels else "python"

sumset_table = _backend.sumset_table
search = _backend.search
