"""Twisted conjugacy for large-type Artin groups.

The heavy lifting lives in the compiled extension `_core`. When running
from a build tree (ctest), ARTINTCP_MODULE_DIR points at the directory
holding the freshly built module.
"""

try:
    from ._core import Group, GroupError
except ImportError:  # build-tree fallback
    import importlib
    import os
    import sys

    _dir = os.environ.get("ARTINTCP_MODULE_DIR")
    if not _dir:
        raise
    sys.path.insert(0, _dir)
    _core = importlib.import_module("_core")
    Group = _core.Group
    GroupError = _core.GroupError

__all__ = ["Group", "GroupError"]
__version__ = "0.1.0"
