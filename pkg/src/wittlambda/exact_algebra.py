"""The exact arithmetic layer under its module name; see :mod:`wittlambda.algebra`."""

from .algebra import *  # noqa: F401,F403
