"""Backend selection for the counting kernels.

The compiled extension is preferred when it imported cleanly; otherwise the
pure-Python fallback takes over with identical semantics.  Both are kept
importable (when built) so tests and benchmarks can compare them.
"""

from __future__ import annotations

from magicount import _pure

try:
    from magicount import _ck
except ImportError:  # pragma: no cover - depends on the build environment
    _ck = None

_impl = _ck if _ck is not None else _pure
BACKEND = "compiled" if _ck is not None else "pure"

count_transitive_tuples = _impl.count_transitive_tuples
count_tensor_kinds = _impl.count_tensor_kinds


def available_backends() -> dict[str, object]:
    backends: dict[str, object] = {"pure": _pure}
    if _ck is not None:
        backends["compiled"] = _ck
    return backends
