# SPDX-License-Identifier: Apache-2.0
"""Exact computations on finite-dimensional associative algebras over Q."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
