from ._newtloc import *  # noqa: F401,F403
from ._newtloc import __doc__  # noqa: F401
