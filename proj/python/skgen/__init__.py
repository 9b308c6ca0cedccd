"""Secret-key generation analysis for excited sources.

The compiled core lives in ``skgen._skgen``; everything public is re-exported
here, including the ``gaussian``, ``dsbs`` and ``binning`` submodules.
"""

from ._skgen import *  # noqa: F401,F403
from ._skgen import __version__, binning, dsbs, gaussian  # noqa: F401
