from ._slopecert import *  # noqa: F401,F403
from ._slopecert import __doc__  # noqa: F401
