try:
    from ._vortex_chorus import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension sits beside the package dir
    from _vortex_chorus import *  # noqa: F401,F403
