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

from libphikrylov.grid import Grid2D, PERIODIC, laplacian_apply
from libphikrylov.problem import OdeProblem


class GrayScott(OdeProblem):
    """
    Gray-Scott on the periodic unit square:

        u_t = du lap(u) - u v^2 + a (1 - u)
        v_t = dv lap(v) + u v^2 - (a + b) v

    Both species start from Gaussian bumps centred on (1/2, 1/2).
    The state is [all u; all v]. No end time is attached to this problem
    in the literature; it defaults to 0.1.
    """

    def __init__(self, config=None):
        super(GrayScott, self).__init__(config)
        self.n = self._grid_points(64)
        self.problem_name = "gray-scott"
        self.du = float(self._config_value("du", 0.2))
        self.dv = float(self._config_value("dv", 0.1))
        self.a = float(self._config_value("a", 0.04))
        self.b = float(self._config_value("b", 0.06))
        self.tend = float(self._config_value("tend", 0.1))

        self.grid = Grid2D(self.n, 0.0, 1.0, PERIODIC)
        self.half = self.grid.size
        self.dim = 2 * self.half
        self.n_physical = self.dim
        self.nnz_per_row = 6

        x, y = self.grid.mesh()
        dx = (x - 0.5) ** 2
        dy = (y - 0.5) ** 2
        u0 = 1.0 - numpy.exp(-150.0 * (dx + dy))
        v0 = numpy.exp(-150.0 * (dx + 2.0 * dy))
        self.u0 = numpy.concatenate([u0.ravel(), v0.ravel()])

    def f(self, state):
        u = state[:self.half]
        v = state[self.half:]
        uvv = u * v * v
        fu = self.du * laplacian_apply(self.grid, u) - uvv + \
                self.a * (1.0 - u)
        fv = self.dv * laplacian_apply(self.grid, v) + uvv - \
                (self.a + self.b) * v
        return numpy.concatenate([fu, fv])

    def jacobian_action(self, state, x):
        u = state[:self.half]
        v = state[self.half:]
        xu = x[:self.half]
        xv = x[self.half:]
        vv = v * v
        uv2 = 2.0 * u * v
        ju = self.du * laplacian_apply(self.grid, xu) - \
                (vv + self.a) * xu - uv2 * xv
        jv = self.dv * laplacian_apply(self.grid, xv) + vv * xu + \
                (uv2 - self.a - self.b) * xv
        return numpy.concatenate([ju, jv])

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
