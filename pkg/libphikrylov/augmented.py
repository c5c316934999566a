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
Matrix-free action of the augmented matrix

    A~ = [[A, B],
          [0, K]]

where B = [b_p, ..., b_1] and K is the p x p upper shift matrix. The first
N entries of exp(tau A~) [b_0; e_p] are sum_j tau^j phi_j(tau A) b_j, so
one exponential of A~ yields the whole linear combination.

B is stored scaled by nu = 2^-ceil(log2 ||B||_1) and the tail of every
start vector is scaled by mu = 1/nu. Both are powers of two, so the
scaling introduces no rounding of its own.

API Functions
-------------
build_augmented:
    Wraps an operator and the vectors b_p..b_0 into an AugmentedSystem.
augmented_matvec:
    Applies A~ to a vector of length N + p.
tail_exact:
    The exact value of the last p entries of the propagated vector.
"""

import math

import numpy

from libphikrylov.errors import DimensionError, DomainError
from libphikrylov.operator import as_operator

# nonzeros per row assumed when an operator carries no nnz_hint
DEFAULT_NNZ_PER_ROW = 10


def tail_exact(t_now, tau, p):
    """
    Returns [t^(p-1)/(p-1)!, ..., t, 1] for t = t_now + tau.

    Parameters:
      t_now -- the start of the current substep.
      tau -- the substep length.
      p -- the augmentation size, at least 1.
    """
    t = t_now + tau
    tail = numpy.empty(p)
    for i in range(p):
        power = p - 1 - i
        tail[i] = t ** power / math.factorial(power)
    return tail


class AugmentedSystem(object):
    """
    The augmented matrix A~ for one phi-function request, applied
    matrix-free. Instances never change after construction.

    Attributes:
      operator -- the LinearOperator for A.
      B -- the N x p block [b_p, ..., b_1], already multiplied by nu.
      b0 -- the vector b_0.
      p -- the augmentation size.
      nu, mu -- the normalisation constants, nu * mu == 1.
      n -- the dimension N of A.
      size -- N + p.
    """

    def __init__(self, operator, B, b0, nu, mu):
        self.operator = operator
        self.B = B
        self.b0 = b0
        self.p = B.shape[1]
        self.nu = nu
        self.mu = mu
        self.n = operator.dim
        self.size = self.n + self.p

    def matvec(self, v):
        return augmented_matvec(self, v)

    def start_vector(self, head, t_now):
        """
        Builds the vector the next substep propagates: head in the first
        N entries and mu times the exact tail at t_now in the last p.
        """
        v = numpy.empty(self.size)
        v[:self.n] = head
        if self.p > 0:
            v[self.n:] = self.mu * tail_exact(t_now, 0.0, self.p)
        return v

    def nnz(self):
        """
        Estimates the number of nonzeros in A~, for the cost model.
        """
        if self.operator.nnz_hint is not None:
            base = self.operator.nnz_hint
        else:
            base = DEFAULT_NNZ_PER_ROW * self.n
        return base + self.n * self.p + max(self.p - 1, 0)


def build_augmented(operator, vectors):
    """
    Wraps an operator and the vectors [b_p, ..., b_1, b_0] into an
    AugmentedSystem.

    Parameters:
      operator -- anything as_operator accepts.
      vectors -- the list [b_p, ..., b_1, b_0], in that order. A list of
                 length one means p == 0 and no augmentation is done.

    Returns:
      an AugmentedSystem.

    Raises:
      DimensionError if the vectors don't all have length N.
    """
    operator = as_operator(operator)
    n = operator.dim

    if len(vectors) == 0:
        raise DimensionError("at least b_0 must be given")

    cols = []
    for i, b in enumerate(vectors):
        b = numpy.asarray(b, dtype=float)
        if b.shape != (n,):
            raise DimensionError("vector %d has shape %s, expected (%d,)" % (
                    i, b.shape, n))
        if not numpy.all(numpy.isfinite(b)):
            raise DomainError("vector %d has non-finite entries" % (i))
        cols.append(b)

    b0 = cols[-1].copy()
    p = len(cols) - 1
    B = numpy.zeros((n, p))
    for i in range(p):
        B[:, i] = cols[i]

    nu = 1.0
    mu = 1.0
    if p > 0:
        normB = numpy.abs(B).sum(axis=0).max()
        if normB > 0:
            ex = int(math.ceil(math.log2(normB)))
            nu = math.ldexp(1.0, -ex)
            mu = math.ldexp(1.0, ex)
            B *= nu

    return AugmentedSystem(operator, B, b0, nu, mu)


def augmented_matvec(system, v):
    """
    Applies A~ to v, calling the user's operator exactly once.

    Parameters:
      system -- an AugmentedSystem.
      v -- a vector of length N + p.

    Returns:
      A~ v as a new vector.
    """
    if v.shape != (system.size,):
        raise DimensionError("augmented matvec needs length %d, got shape %s" \
                % (system.size, v.shape))

    n = system.n
    out = numpy.empty(system.size)
    out[:n] = system.operator.apply(v[:n])
    if system.p > 0:
        out[:n] += system.B @ v[n:]
        out[n:-1] = v[n + 1:]
        out[-1] = 0.0
    return out

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
