"""Kernel selection: the compiled extension when importable, else pure Python."""

from . import _kernels_py

try:
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _kernels_py
    BACKEND = "python"

gf2_rank = _impl.gf2_rank
count_cycles = _impl.count_cycles
