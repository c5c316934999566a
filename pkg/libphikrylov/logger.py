#
# This file is part of phikrylov.
#
# phikrylov is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 2 as
# published by the Free Software Foundation.
#
# phikrylov is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with phikrylov; if not, write to the Free Software Foundation, Inc.
# 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301, USA.
#

"""
Logging helpers shared by every phikrylov module.

Modules should never talk to the logging package directly; instead they
call log() for anything a user running a sweep would want to see,
warn() for failures and debug() for per-substep tracing inside the
solver.
"""

import logging
import sys

LOGGER_NAME = "phikrylov"

_logger = logging.getLogger(LOGGER_NAME)
_logger.addHandler(logging.NullHandler())


def log(message):
    """
    Writes a message to the phikrylov log at INFO level.

    Parameters:
      message -- the message to log. Exceptions are accepted too and are
                 converted to a string.
    """
    _logger.info("%s", message)


def warn(message):
    """
    Writes a message to the phikrylov log at WARNING level. Used for
    failures, which stay visible when the CLI runs quietly.
    """
    _logger.warning("%s", message)


def debug(message):
    """
    Writes a message to the phikrylov log at DEBUG level.

    Parameters:
      message -- the message to log.
    """
    _logger.debug("%s", message)


def set_verbosity(level, stream=None):
    """
    Attaches a stream handler to the phikrylov logger and sets its level.

    Calling this more than once replaces the previously attached handler
    rather than stacking a second one.

    Parameters:
      level -- a logging level, e.g. logging.INFO or logging.DEBUG.
      stream -- the stream to write to. Defaults to stderr.
    """
    if stream is None:
        stream = sys.stderr

    for handler in list(_logger.handlers):
        if getattr(handler, "_phikrylov", False):
            _logger.removeHandler(handler)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(
            "%(asctime)s %(name)s %(levelname)s: %(message)s"))
    handler._phikrylov = True
    _logger.addHandler(handler)
    _logger.setLevel(level)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
