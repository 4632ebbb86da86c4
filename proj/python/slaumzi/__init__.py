"""Python bindings for the slow-light interferometer sensitivity toolkit."""

from ._slaumzi import *  # noqa: F401,F403
from ._slaumzi import ConfigError, NumericalError  # noqa: F401

__version__ = "0.1.0"
