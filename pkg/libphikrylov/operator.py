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
import scipy.sparse
import scipy.sparse.linalg

from libphikrylov.errors import DimensionError, DomainError


class LinearOperator(object):
    """
    Matrix-free square linear operator x -> A x on R^N.

    This is the extension point of the library: anything that can apply
    a matrix to a vector can be handed to the solver by wrapping it in a
    LinearOperator. The apply function must be deterministic, linear and
    free of side effects. If several solves share one operator from
    different threads, apply must also be safe to call concurrently.

    API Functions
    -------------
    apply:
        Applies the operator to a vector, checking shapes and finiteness.
    """

    def __init__(self, dim, apply, nnz_hint=None):
        """
        Init function for the LinearOperator class.

        Parameters:
          dim -- the dimension N of the space the operator acts on.
          apply -- a callable mapping a length N vector to a length N
                   vector.
          nnz_hint -- an optional count of nonzeros in the underlying
                      matrix. Only used by the cost model diagnostics.
        """
        if int(dim) != dim or dim <= 0:
            raise DimensionError("operator dimension must be positive, got %r" \
                    % (dim))
        self.dim = int(dim)
        self._apply = apply
        self.nnz_hint = nnz_hint

    def apply(self, x):
        """
        Applies the operator to x.

        Raises:
          DimensionError if x or the result has the wrong length.
          DomainError if the result contains NaN or infinity.
        """
        if x.shape != (self.dim,):
            raise DimensionError("operator of dimension %d applied to shape %s" \
                    % (self.dim, x.shape))
        y = numpy.asarray(self._apply(x), dtype=float)
        if y.shape != (self.dim,):
            raise DimensionError("operator returned shape %s, expected (%d,)" \
                    % (y.shape, self.dim))
        if not numpy.all(numpy.isfinite(y)):
            raise DomainError("operator returned non-finite values")
        return y

    def __matmul__(self, x):
        return self.apply(x)


def as_operator(obj, nnz_hint=None):
    """
    Converts obj into a LinearOperator.

    Parameters:
      obj -- a LinearOperator (returned as is), a dense square array, a
             scipy sparse matrix or a scipy LinearOperator.
      nnz_hint -- overrides the nonzero count derived from obj.

    Returns:
      a LinearOperator wrapping obj.
    """
    if isinstance(obj, LinearOperator):
        return obj

    if scipy.sparse.issparse(obj):
        if obj.shape[0] != obj.shape[1]:
            raise DimensionError("operator must be square, got shape %s" % (
                    obj.shape,))
        matrix = scipy.sparse.csr_matrix(obj)
        if nnz_hint is None:
            nnz_hint = matrix.nnz
        return LinearOperator(matrix.shape[0], matrix.dot, nnz_hint)

    if isinstance(obj, scipy.sparse.linalg.LinearOperator):
        if obj.shape[0] != obj.shape[1]:
            raise DimensionError("operator must be square, got shape %s" % (
                    obj.shape,))
        return LinearOperator(obj.shape[0], obj.matvec, nnz_hint)

    matrix = numpy.asarray(obj, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionError("operator must be a square matrix, got shape %s" \
                % (matrix.shape,))
    if nnz_hint is None:
        nnz_hint = int(numpy.count_nonzero(matrix))
    return LinearOperator(matrix.shape[0], matrix.dot, nnz_hint)


def linearity_defect(op, rng, trials=5):
    """
    Measures how far op is from being linear on random inputs.

    For random x, y, alpha and beta, computes
        ||A(alpha x + beta y) - alpha A x - beta A y|| / (||A x|| + ||A y||)
    and returns the largest value seen. A linear operator returns
    something of the order of machine precision.

    Parameters:
      op -- anything as_operator accepts.
      rng -- a numpy Generator.
      trials -- the number of random samples.
    """
    op = as_operator(op)
    worst = 0.0
    for _ in range(trials):
        x = rng.standard_normal(op.dim)
        y = rng.standard_normal(op.dim)
        alpha, beta = rng.standard_normal(2)
        Ax = op.apply(x)
        Ay = op.apply(y)
        lhs = op.apply(alpha * x + beta * y)
        scale = numpy.linalg.norm(Ax) + numpy.linalg.norm(Ay)
        if scale == 0.0:
            continue
        defect = numpy.linalg.norm(lhs - alpha * Ax - beta * Ay) / scale
        worst = max(worst, defect)
    return worst

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
