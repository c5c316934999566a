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
Uniform finite difference grids and second order stencils.

Three boundary kinds are supported:
    NEUMANN   -- homogeneous Neumann (no-flow). Node-inclusive grid with
                 spacing (b - a)/(n - 1); closed with mirror ghost nodes,
                 u_{-1} = u_1.
    PERIODIC  -- n nodes at a + i (b - a)/n; the last node wraps to the
                 first.
    DIRICHLET -- homogeneous Dirichlet. Node-inclusive grid with spacing
                 (b - a)/(n - 1) but only the n - 2 interior nodes are
                 stored; boundary values are zero.

Fields are flat arrays in C order over the stored nodes.

API Functions
-------------
laplacian_apply:
    The standard 3 / 5 point Laplacian with the grid's boundary closure.
gradient_apply:
    Second order central first derivative along one axis.
trapezoid_weights:
    Trapezoidal quadrature weights for a node-inclusive 1D grid.
"""

import numpy
import scipy.ndimage

from libphikrylov.errors import DimensionError

NEUMANN = "neumann"
PERIODIC = "periodic"
DIRICHLET = "dirichlet"

# scipy.ndimage boundary modes; "mirror" reflects about the edge node
_NDIMAGE_MODES = {
    NEUMANN: "mirror",
    PERIODIC: "wrap",
    DIRICHLET: "constant",
}


def trapezoid_weights(count, delta):
    """
    Returns the trapezoidal rule weights for count equally spaced nodes,
    boundary nodes included.
    """
    weights = numpy.full(count, delta)
    weights[0] = 0.5 * delta
    weights[-1] = 0.5 * delta
    return weights


class Grid(object):
    """
    A uniform grid on [lower, upper]^ndim with one boundary kind.

    Attributes:
      n -- the number of nodes per dimension, boundary nodes included
           for Neumann and Dirichlet grids.
      ndim -- 1 or 2.
      lower, upper -- the domain bounds, identical in each dimension.
      boundary -- NEUMANN, PERIODIC or DIRICHLET.
      delta -- the node spacing.
      shape -- the shape of the stored field.
      size -- the number of stored values.
    """

    def __init__(self, n, lower, upper, boundary, ndim):
        if boundary not in _NDIMAGE_MODES:
            raise DimensionError("unknown boundary kind %r" % (boundary))
        if ndim not in (1, 2):
            raise DimensionError("grids must be 1D or 2D, got %d" % (ndim))
        if n < 3:
            raise DimensionError("grid needs at least 3 nodes, got %d" % (n))
        if not upper > lower:
            raise DimensionError("empty domain [%r, %r]" % (lower, upper))

        self.n = int(n)
        self.ndim = ndim
        self.lower = float(lower)
        self.upper = float(upper)
        self.boundary = boundary

        length = self.upper - self.lower
        if boundary == PERIODIC:
            self.delta = length / self.n
            stored = self.n
        elif boundary == DIRICHLET:
            self.delta = length / (self.n - 1)
            stored = self.n - 2
        else:
            self.delta = length / (self.n - 1)
            stored = self.n

        self.shape = (stored,) * ndim
        self.size = stored ** ndim

    def axis_nodes(self, include_boundary=False):
        """
        Returns the 1D coordinates of the nodes along one axis.

        Parameters:
          include_boundary -- for Dirichlet grids, also return the two
                              boundary nodes that are not stored.
        """
        if self.boundary == PERIODIC:
            return self.lower + self.delta * numpy.arange(self.n)
        nodes = numpy.linspace(self.lower, self.upper, self.n)
        if self.boundary == DIRICHLET and not include_boundary:
            return nodes[1:-1]
        return nodes

    def mesh(self):
        """
        Returns the coordinate arrays of the stored nodes, one per
        dimension, each of the grid's shape.
        """
        axis = self.axis_nodes()
        if self.ndim == 1:
            return (axis,)
        return tuple(numpy.meshgrid(axis, axis, indexing="ij"))

    def weights(self):
        """
        Returns quadrature weights for the stored nodes, flattened.

        Neumann grids use the trapezoidal rule, periodic grids the
        rectangle rule, and Dirichlet grids the trapezoidal rule with
        the zero boundary values left out.
        """
        if self.boundary == PERIODIC:
            axis = numpy.full(self.n, self.delta)
        elif self.boundary == DIRICHLET:
            axis = numpy.full(self.n - 2, self.delta)
        else:
            axis = trapezoid_weights(self.n, self.delta)

        if self.ndim == 1:
            return axis
        return numpy.outer(axis, axis).ravel()

    def integrate(self, field):
        return float(self.weights() @ self._flat(field))

    def _flat(self, field):
        field = numpy.asarray(field, dtype=float)
        if field.size != self.size:
            raise DimensionError("field of size %d on a grid of size %d" % (
                    field.size, self.size))
        return field.ravel()

    def _shaped(self, field):
        return self._flat(field).reshape(self.shape)

    def _mode(self):
        return _NDIMAGE_MODES[self.boundary]


class Grid1D(Grid):
    def __init__(self, n, lower=0.0, upper=1.0, boundary=DIRICHLET):
        super(Grid1D, self).__init__(n, lower, upper, boundary, 1)


class Grid2D(Grid):
    def __init__(self, n, lower=0.0, upper=1.0, boundary=NEUMANN):
        super(Grid2D, self).__init__(n, lower, upper, boundary, 2)


def laplacian_apply(grid, field):
    """
    Applies the second order finite difference Laplacian.

    In 2D this is the 5 point stencil
        (u_{i-1,j} + u_{i+1,j} + u_{i,j-1} + u_{i,j+1} - 4 u_{i,j}) / delta^2
    with ghost values supplied by the grid's boundary kind.

    Parameters:
      grid -- a Grid.
      field -- a flat array of grid.size values.

    Returns:
      the Laplacian as a flat array.

    Raises:
      DimensionError if the field doesn't match the grid.
    """
    u = grid._shaped(field)
    lap = scipy.ndimage.laplace(u, mode=grid._mode(), cval=0.0)
    return lap.ravel() / grid.delta ** 2


def gradient_apply(grid, field, axis):
    """
    Applies the central difference (u_{i+1} - u_{i-1}) / (2 delta) along
    one axis. Mirror ghost nodes make the derivative vanish on Neumann
    boundaries.
    """
    if axis < 0 or axis >= grid.ndim:
        raise DimensionError("axis %d out of range for a %dD grid" % (
                axis, grid.ndim))
    u = grid._shaped(field)
    du = scipy.ndimage.correlate1d(u, [-0.5, 0.0, 0.5], axis=axis,
            mode=grid._mode(), cval=0.0)
    return du.ravel() / grid.delta

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
