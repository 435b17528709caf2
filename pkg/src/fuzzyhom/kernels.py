"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the numpy
implementation is loaded.  Setting ``FUZZYHOM_PURE_PYTHON=1`` forces the
numpy path even when the extension is present.
"""

import os

PURE_ENV = "FUZZYHOM_PURE_PYTHON"

if os.environ.get(PURE_ENV, "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
compose = _impl.compose
closure = _impl.closure
first_intransitive = _impl.first_intransitive
image_relation = _impl.image_relation
image_set = _impl.image_set
first_class_mismatch = _impl.first_class_mismatch
first_block_mismatch = _impl.first_block_mismatch
group_leaders = _impl.group_leaders
