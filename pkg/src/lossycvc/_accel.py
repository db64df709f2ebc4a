"""Select the compiled kernels when available, else the pure-Python twins.

Set ``LOSSYCVC_PURE=1`` to force the fallback.
"""

import os

from . import _pycore

if os.environ.get("LOSSYCVC_PURE"):
    _impl = _pycore
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _pycore

BACKEND = "compiled" if _impl is not _pycore else "python"

cvc_search = _impl.cvc_search
is_cvc_mask = _impl.is_cvc_mask
treewidth_order = _impl.treewidth_order
