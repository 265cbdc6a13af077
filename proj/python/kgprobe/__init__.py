"""Knowledge-graph comparison toolkit (python surface of the C++ core)."""

try:  # installed layout: extension lives inside the package
    from ._kgprobe import *  # noqa: F401,F403
    from ._kgprobe import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _kgprobe import *  # noqa: F401,F403
    from _kgprobe import __version__  # noqa: F401
