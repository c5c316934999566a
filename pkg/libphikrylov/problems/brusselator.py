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

from libphikrylov.grid import Grid2D, NEUMANN, laplacian_apply
from libphikrylov.problem import OdeProblem


class Brusselator(OdeProblem):
    """
    The two species Brusselator on the unit square:

        u_t = 1 + u^2 v - 4 u + alpha lap(u)
        v_t = 3 u - u^2 v + alpha lap(v)

    with homogeneous Neumann boundaries, u = 2 + 0.25 y and
    v = 1 + 0.8 x at t = 0. The state is [all u; all v].
    """

    def __init__(self, config=None):
        super(Brusselator, self).__init__(config)
        self.n = self._grid_points(64)
        self.problem_name = "brusselator"
        self.alpha = float(self._config_value("alpha", 0.02))
        self.tend = float(self._config_value("tend", 1.0))

        self.grid = Grid2D(self.n, 0.0, 1.0, NEUMANN)
        self.half = self.grid.size
        self.dim = 2 * self.half
        self.n_physical = self.dim
        self.nnz_per_row = 6

        x, y = self.grid.mesh()
        self.u0 = numpy.concatenate([(2.0 + 0.25 * y).ravel(),
                (1.0 + 0.8 * x).ravel()])

    def f(self, state):
        u = state[:self.half]
        v = state[self.half:]
        uuv = u * u * v
        fu = 1.0 + uuv - 4.0 * u + self.alpha * laplacian_apply(self.grid, u)
        fv = 3.0 * u - uuv + self.alpha * laplacian_apply(self.grid, v)
        return numpy.concatenate([fu, fv])

    def jacobian_action(self, state, x):
        u = state[:self.half]
        v = state[self.half:]
        xu = x[:self.half]
        xv = x[self.half:]
        uv = u * v
        uu = u * u
        ju = (2.0 * uv - 4.0) * xu + uu * xv + \
                self.alpha * laplacian_apply(self.grid, xu)
        jv = (3.0 - 2.0 * uv) * xu - uu * xv + \
                self.alpha * laplacian_apply(self.grid, xv)
        return numpy.concatenate([ju, jv])

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
