"""Backend selection for the hot kernels.

The compiled extension ``apcqc._kernels`` is used when it imports; otherwise,
or when ``APCQC_PURE_PYTHON=1``, the numpy module ``apcqc._kernels_py`` is.
"""

import os

from . import _kernels_py

if os.environ.get("APCQC_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
    else:
        BACKEND = "cython"

char_counts = _impl.char_counts
first_nonvanishing = _impl.first_nonvanishing
first_kl_failure = _impl.first_kl_failure
