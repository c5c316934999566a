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
import pytest
import scipy.sparse

from libphikrylov.problem import OdeProblem


def diffusion_matrix(n, scale=1.0):
    """
    Returns scale times the 1D Dirichlet second difference matrix
    tridiag(1, -2, 1), as a dense array. Its eigenvalues lie in
    (-4 scale, 0).
    """
    main = -2.0 * numpy.ones(n)
    off = numpy.ones(n - 1)
    return scale * (numpy.diag(main) + numpy.diag(off, 1) +
            numpy.diag(off, -1))


def stable_random_matrix(rng, n, norm1):
    """
    Returns a random nonsymmetric matrix with its spectrum shifted into
    the left half plane and scaled to the requested 1-norm.
    """
    R = rng.standard_normal((n, n)) / numpy.sqrt(n)
    A = R - 1.5 * numpy.eye(n)
    return A * (norm1 / numpy.linalg.norm(A, 1))


class LinearProblem(OdeProblem):
    """
    du/dt = A u with the Jacobian A, for checking that schemes reduce to
    the matrix exponential.
    """

    def __init__(self, A, u0, tend=1.0):
        super(LinearProblem, self).__init__()
        self.problem_name = "linear"
        self.A = numpy.asarray(A, dtype=float)
        self.dim = self.A.shape[0]
        self.n_physical = self.dim
        self.u0 = numpy.asarray(u0, dtype=float)
        self.tend = tend

    def f(self, u):
        return self.A @ u

    def jacobian_action(self, u, x):
        return self.A @ x


@pytest.fixture
def rng():
    return numpy.random.default_rng(20190423)


@pytest.fixture
def diffusion():
    return diffusion_matrix


@pytest.fixture
def stable_random():
    return stable_random_matrix


@pytest.fixture
def linear_problem():
    return LinearProblem


@pytest.fixture
def sparse_diffusion():
    def build(n, scale=1.0):
        return scipy.sparse.csr_matrix(diffusion_matrix(n, scale))
    return build

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
