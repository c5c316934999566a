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


class PhiKrylovError(Exception):
    """
    Base class for every error raised by the phikrylov library.
    """
    pass


class DimensionError(PhiKrylovError, ValueError):
    """
    Raised when the shapes of matrices, vectors or operators don't agree.
    """
    pass


class DomainError(PhiKrylovError, ArithmeticError):
    """
    Raised when an input or an operator output is non-finite, or when an
    argument falls outside the range a routine supports.
    """
    pass


class RequestError(PhiKrylovError, ValueError):
    """
    Raised when a phi-function request is malformed, e.g. the output
    times are not increasing.
    """
    pass


class UnknownNameError(PhiKrylovError, KeyError):
    """
    Raised when a scheme or problem id is not registered.
    """
    pass


class OutputError(PhiKrylovError, OSError):
    """
    Raised when results can't be written to their destination.
    """
    pass


class ConvergenceError(PhiKrylovError, RuntimeError):
    """
    Raised when the solver runs out of substeps.

    The diagnostics attribute holds a dictionary describing where the
    solver got stuck: t_now, t_end, tau, m, substeps, rejections and the
    last scaled error omega.
    """

    def __init__(self, message, diagnostics=None):
        super(ConvergenceError, self).__init__(message)
        if diagnostics is None:
            diagnostics = {}
        self.diagnostics = diagnostics


class StageError(PhiKrylovError):
    """
    Raised when an integrator stage fails. The original exception is
    chained as __cause__.
    """

    def __init__(self, scheme, stage, step_index=None, reason=""):
        if step_index is None:
            where = "%s stage %s" % (scheme, stage)
        else:
            where = "%s stage %s at step %d" % (scheme, stage, step_index)
        super(StageError, self).__init__("%s failed: %s" % (where, reason))
        self.scheme = scheme
        self.stage = stage
        self.step_index = step_index

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
