"""Hot kernels: BM25 score accumulation and betweenness centrality.

The compiled Cython backend is used when available; set
STRATAGEM_KERNELS=python to force the pure Python fallback (the benchmark
uses this to compare both).  Results are bit-identical across backends.
"""

import os

if os.environ.get("STRATAGEM_KERNELS") == "python":
    from . import pure as _impl

    BACKEND = "python"
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import pure as _impl  # type: ignore[no-redef]

        BACKEND = "python"

bm25_add = _impl.bm25_add
brandes = _impl.brandes

__all__ = ["BACKEND", "bm25_add", "brandes"]
