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

import numpy

from libphikrylov.errors import DimensionError
from libphikrylov.operator import LinearOperator

MIN_POINTS = 8


class OdeProblem(object):
    """
    Base class for all benchmark problems.

    Each problem module inherits from this class and describes an
    autonomous semi-discrete system du/dt = f(u). Problems are immutable
    once constructed, so f and jacobian_action may be called from several
    threads at once.

    The child class's init function MUST set problem_name, dim, u0 and
    tend, and implement f and jacobian_action. Problems with a known
    solution also override exact.

    API Functions
    -------------
    f:
        The right hand side of the ODE.
    jacobian_action:
        The product of the Jacobian at u with a vector x.
    jacobian_operator:
        The Jacobian at u, optionally scaled, as a LinearOperator.
    physical:
        Strips any bookkeeping components from a state vector.
    exact:
        The exact solution at time t, if there is one.
    """

    HAS_EXACT = False

    def __init__(self, config=None):
        if config is None:
            config = {}
        self.config = config
        self.t0 = 0.0
        self.n = None

        # These members MUST be set by the child problem's init function
        self.problem_name = "baseproblem"
        self.dim = 0
        self.n_physical = 0
        self.u0 = None
        self.tend = None
        self.nnz_per_row = 5

    def _config_value(self, key, default):
        if key in self.config and self.config[key] is not None:
            return self.config[key]
        return default

    def _grid_points(self, default_n):
        n = int(self._config_value("n", default_n))
        if n < MIN_POINTS:
            raise DimensionError("problems need n >= %d, got %d" % (
                    MIN_POINTS, n))
        return n

    def f(self, u):
        raise NotImplementedError

    def jacobian_action(self, u, x):
        raise NotImplementedError

    def jacobian_operator(self, u, scale=1.0):
        """
        Returns scale * J(u) as a LinearOperator.

        The state is copied, so the operator keeps working if the caller
        later modifies u in place.
        """
        u = numpy.array(u, dtype=float)
        if u.shape != (self.dim,):
            raise DimensionError("%s state must have length %d, got %s" % (
                    self.problem_name, self.dim, u.shape))

        def apply(x):
            return scale * self.jacobian_action(u, x)

        return LinearOperator(self.dim, apply, self.nnz_per_row * self.dim)

    def physical(self, u):
        return u[:self.n_physical]

    def exact(self, t):
        """
        Returns the exact solution at time t as a full state vector, or
        None if the problem has no known solution.
        """
        return None

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
