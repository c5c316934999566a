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


class AllenCahn(OdeProblem):
    """
    u_t = alpha lap(u) + u - u^3 on [-1, 1]^2 with no-flow boundaries,
    starting from u = 0.1 + 0.1 cos(2 pi x) cos(2 pi y).
    """

    def __init__(self, config=None):
        super(AllenCahn, self).__init__(config)
        self.n = self._grid_points(64)
        self.problem_name = "allen-cahn"
        self.alpha = float(self._config_value("alpha", 0.1))
        self.tend = float(self._config_value("tend", 1.0))

        self.grid = Grid2D(self.n, -1.0, 1.0, NEUMANN)
        self.dim = self.grid.size
        self.n_physical = self.dim

        x, y = self.grid.mesh()
        u0 = 0.1 + 0.1 * numpy.cos(2 * numpy.pi * x) * \
                numpy.cos(2 * numpy.pi * y)
        self.u0 = u0.ravel()

    def f(self, u):
        return self.alpha * laplacian_apply(self.grid, u) + u - u ** 3

    def jacobian_action(self, u, x):
        return self.alpha * laplacian_apply(self.grid, x) + \
                (1.0 - 3.0 * u ** 2) * x

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
