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

from libphikrylov.grid import Grid2D, NEUMANN, gradient_apply, laplacian_apply
from libphikrylov.problem import OdeProblem


class AdvectionDiffusionReaction(OdeProblem):
    """
    Advection-diffusion-reaction on the unit square:

        u_t = epsilon lap(u) - alpha (u_x + u_y) + gamma u (u - 1/2) (1 - u)

    with homogeneous Neumann boundaries and
    u = 256 (x y (1 - x) (1 - y))^2 + 0.3 at t = 0.
    """

    def __init__(self, config=None):
        super(AdvectionDiffusionReaction, self).__init__(config)
        self.n = self._grid_points(100)
        self.problem_name = "adr"
        self.epsilon = float(self._config_value("epsilon", 0.01))
        self.alpha = float(self._config_value("alpha", -10.0))
        self.gamma = float(self._config_value("gamma", 100.0))
        self.tend = float(self._config_value("tend", 0.1))

        self.grid = Grid2D(self.n, 0.0, 1.0, NEUMANN)
        self.dim = self.grid.size
        self.n_physical = self.dim
        self.nnz_per_row = 5

        x, y = self.grid.mesh()
        self.u0 = (256.0 * (x * y * (1 - x) * (1 - y)) ** 2 + 0.3).ravel()

    def _transport(self, u):
        grad = gradient_apply(self.grid, u, 0) + gradient_apply(self.grid, u, 1)
        return self.epsilon * laplacian_apply(self.grid, u) - self.alpha * grad

    def f(self, u):
        reaction = self.gamma * u * (u - 0.5) * (1.0 - u)
        return self._transport(u) + reaction

    def jacobian_action(self, u, x):
        dreaction = self.gamma * (-3.0 * u ** 2 + 3.0 * u - 0.5)
        return self._transport(x) + dreaction * x

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
