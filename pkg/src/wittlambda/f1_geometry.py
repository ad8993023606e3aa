"""F₁-geometry under its module name; see :mod:`wittlambda.f1`."""

from .f1 import *  # noqa: F401,F403
