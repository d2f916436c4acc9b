"""Arithmetic kernel selection.

Imports the compiled accelerator ``pertinax._speedups`` when it is
available, otherwise the pure Python twin ``pertinax._pure``.  Setting the
environment variable ``PERTINAX_PURE=1`` forces the pure kernel, which is
useful for benchmarking and debugging.  Both kernels implement the same
functions on the same data layout, so everything above this module is
backend agnostic.
"""

import os

from . import _pure

if os.environ.get("PERTINAX_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND

q_normalize = _impl.q_normalize
q_is_zero = _impl.q_is_zero
q_neg = _impl.q_neg
q_add = _impl.q_add
q_sub = _impl.q_sub
q_mul = _impl.q_mul
q_inv = _impl.q_inv
dict_axpy = _impl.dict_axpy
row_reduce = _impl.row_reduce
rref = _impl.rref
