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

from libphikrylov.grid import Grid1D, DIRICHLET, laplacian_apply
from libphikrylov.problem import OdeProblem

# integral of x (1 - x) over [0, 1]
EXACT_PROFILE_INTEGRAL = 1.0 / 6.0


class SemilinearParabolic(OdeProblem):
    """
    The nonlocal semilinear parabolic problem

        U_t - U_xx = int_0^1 U dx + Phi(x, t)

    on [0, 1] with homogeneous Dirichlet boundaries and exact solution
    U = x (1 - x) e^t.

    The source is time dependent, so time is carried as an extra state
    component with dt/dt = 1; the state is [U at the interior nodes; t].

    Two sources are available. With consistent_source False the source
    is the continuous Phi = e^t (x (1 - x) + 11/6), and the exact solution
    only satisfies the semi-discrete system up to O(dx^2). The default
    replaces 11/6 = 2 - 1/6 with 2 - Q_h[x (1 - x)], where Q_h is the
    trapezoidal rule of the discretisation, so that the exact solution
    solves the semi-discrete system exactly and all of the measured error
    is temporal.
    """

    HAS_EXACT = True

    def __init__(self, config=None):
        super(SemilinearParabolic, self).__init__(config)
        self.n = self._grid_points(200)
        self.problem_name = "semilinear"
        self.tend = float(self._config_value("tend", 1.0))
        self.consistent_source = bool(self._config_value(
                "consistent_source", True))

        self.grid = Grid1D(self.n, 0.0, 1.0, DIRICHLET)
        self.n_physical = self.grid.size
        self.dim = self.n_physical + 1
        # the rank one integral term fills every row
        self.nnz_per_row = self.n_physical + 3

        self.x = self.grid.axis_nodes()
        self.weights = self.grid.weights()
        self.profile = self.x * (1.0 - self.x)

        if self.consistent_source:
            self.source_shift = 2.0 - float(self.weights @ self.profile)
        else:
            self.source_shift = 2.0 - EXACT_PROFILE_INTEGRAL

        self.u0 = self.exact(self.t0)

    def source(self, t):
        return numpy.exp(t) * (self.profile + self.source_shift)

    def f(self, state):
        U = state[:-1]
        t = state[-1]
        out = numpy.empty(self.dim)
        out[:-1] = laplacian_apply(self.grid, U) + self.weights @ U + \
                self.source(t)
        out[-1] = 1.0
        return out

    def jacobian_action(self, state, x):
        t = state[-1]
        xU = x[:-1]
        out = numpy.empty(self.dim)
        # d(source)/dt is the source itself
        out[:-1] = laplacian_apply(self.grid, xU) + self.weights @ xU + \
                self.source(t) * x[-1]
        out[-1] = 0.0
        return out

    def exact(self, t):
        state = numpy.empty(self.dim)
        state[:-1] = self.profile * numpy.exp(t)
        state[-1] = t
        return state

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
