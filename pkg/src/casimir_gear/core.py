"""Numerical backend selection.

Prefers the compiled extension (``_fastcore``, built from Cython) and falls
back to the pure-Python twin.  Both expose the identical function surface
and are kept arithmetically identical; ``benchmarks/bench_core.py`` compares
their throughput.
"""

try:  # pragma: no cover - exercised indirectly
    from . import _fastcore as backend
except ImportError:  # pragma: no cover
    from . import _purecore as backend

BACKEND = backend.BACKEND

__all__ = ["backend", "BACKEND"]
