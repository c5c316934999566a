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
Brute force reference values for phi-functions.

Everything in here assembles dense matrices and is only meant for the
small instances used by the test suite and by the benchmark harness when
it needs a trusted answer. Nothing in the Krylov solver path calls into
this module.

API Functions
-------------
phi_scalar:
    phi_k(z) for a real scalar z.
phi_dense:
    phi_k(tau A) for a small dense matrix A.
phi_taylor:
    phi_k(tau A) summed directly from its Taylor series.
assemble_augmented:
    Builds the dense augmented matrix for a matrix A and vectors b_1..b_p.
phi_combination_dense:
    sum_j tau^j phi_j(tau A) b_j via one dense exponential.
"""

import math

import numpy

from libphikrylov.denselinalg import expm, shift_matrix
from libphikrylov.errors import DimensionError, DomainError

MAX_PHI_INDEX = 8
MAX_PHI_DIM = 256
MAX_COMBINATION_DIM = 2048

# below this |z| the scalar recurrence cancels badly, so sum the series
SCALAR_SERIES_CUTOFF = 0.1


def _check_index(k):
    if int(k) != k or k < 0 or k > MAX_PHI_INDEX:
        raise DomainError("phi index must be an integer in [0, %d], got %r" % (
                MAX_PHI_INDEX, k))
    return int(k)


def _check_dense(A, limit):
    A = numpy.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError("oracle needs a square matrix, got shape %s" % (
                A.shape,))
    if A.shape[0] > limit:
        raise DomainError("oracle is limited to dimension %d, got %d" % (
                limit, A.shape[0]))
    if not numpy.all(numpy.isfinite(A)):
        raise DomainError("oracle input has non-finite entries")
    return A


def phi_scalar(z, k):
    """
    Evaluates phi_k(z) for a real scalar z.

    Uses phi_0 = e^z and the recurrence
    phi_{k+1}(z) = (phi_k(z) - 1/k!) / z, switching to the Taylor series
    sum_j z^j / (j+k)! when |z| < 0.1.
    """
    k = _check_index(k)
    z = float(z)

    if abs(z) < SCALAR_SERIES_CUTOFF:
        terms = []
        term = 1.0 / math.factorial(k)
        j = 0
        while True:
            terms.append(term)
            j += 1
            term = term * z / (j + k)
            if abs(term) < 1e-18 * abs(terms[0]) or j > 60:
                break
        return math.fsum(terms)

    value = math.exp(z)
    for i in range(k):
        value = (value - 1.0 / math.factorial(i)) / z
    return value


def _kahan_matrix_sum(terms):
    """
    Sums a list of equally shaped arrays with compensated summation.
    """
    total = numpy.zeros_like(terms[0])
    comp = numpy.zeros_like(terms[0])
    for term in terms:
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def phi_taylor(A, tau, k, terms=None):
    """
    Sums phi_k(tau A) = sum_{j >= 0} (tau A)^j / (j + k)! directly.

    The summation is compensated, but the series itself still cancels
    for large ||tau A||, so keep this to modest norms (||tau A||_1 of a
    few units).

    Parameters:
      A -- a square matrix.
      tau -- the real scaling of A.
      k -- the phi index, 0 to 8.
      terms -- the number of series terms to use. If None, terms are
               added until they stop contributing at double precision.

    Returns:
      phi_k(tau A) as a dense array.
    """
    k = _check_index(k)
    A = _check_dense(A, MAX_PHI_DIM)
    n = A.shape[0]
    tA = tau * A

    power = numpy.eye(n)
    collected = [power / math.factorial(k)]
    j = 1
    while True:
        power = power @ tA
        term = power / math.factorial(j + k)
        collected.append(term)
        j += 1
        if terms is not None:
            if j >= terms:
                break
        elif j > 300 or numpy.abs(term).max() <= \
                1e-18 * numpy.abs(collected[0]).max():
            break
    return _kahan_matrix_sum(collected)


def phi_dense(A, tau, k, route="augmented"):
    """
    Evaluates phi_k(tau A) for a small dense matrix.

    The default route exponentiates the block matrix
        [[tau A, I, 0, ..., 0],
         [0,     0, I, ..., 0],
         ...
         [0,     0, 0, ..., 0]]
    of k + 1 block rows and reads phi_k(tau A) off the top right block,
    i.e. the augmented matrix construction with the identity as the block
    of right hand sides. The "taylor" route sums the series instead.

    Parameters:
      A -- a square matrix of dimension at most 256.
      tau -- the real scaling of A.
      k -- the phi index, 0 to 8.
      route -- either "augmented" or "taylor".

    Returns:
      phi_k(tau A) as a dense array.
    """
    k = _check_index(k)
    A = _check_dense(A, MAX_PHI_DIM)

    if route == "taylor":
        return phi_taylor(A, tau, k)
    if route != "augmented":
        raise ValueError("unknown phi_dense route %r" % (route))

    n = A.shape[0]
    if k == 0:
        return expm(A, tau)[0]

    big = numpy.zeros((n * (k + 1), n * (k + 1)))
    big[:n, :n] = tau * A
    for blk in range(k):
        big[blk * n:(blk + 1) * n, (blk + 1) * n:(blk + 2) * n] = \
                numpy.eye(n)

    E = expm(big, 1.0)[0]
    return E[:n, k * n:(k + 1) * n]


def _stack_vectors(A, vectors):
    A = numpy.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError("oracle needs a square matrix, got shape %s" % (
                A.shape,))
    n = A.shape[0]
    if len(vectors) == 0:
        raise DimensionError("at least b_0 must be given")
    if len(vectors) - 1 > MAX_PHI_INDEX:
        raise DomainError("oracle supports at most p = %d" % (MAX_PHI_INDEX))

    stacked = []
    for i, b in enumerate(vectors):
        b = numpy.asarray(b, dtype=float)
        if b.shape != (n,):
            raise DimensionError("b_%d has shape %s, expected (%d,)" % (
                    i, b.shape, n))
        stacked.append(b)
    return A, stacked


def assemble_augmented(A, vectors):
    """
    Assembles the dense augmented matrix [[A, B], [0, K]].

    Parameters:
      A -- an N x N matrix.
      vectors -- the list [b_0, b_1, ..., b_p]. b_0 does not enter the
                 matrix but is accepted so callers can pass the same list
                 they give to phi_combination_dense.

    Returns:
      the (N + p) x (N + p) augmented matrix, where B = [b_p, ..., b_1].
    """
    A, stacked = _stack_vectors(A, vectors)
    n = A.shape[0]
    p = len(stacked) - 1

    At = numpy.zeros((n + p, n + p))
    At[:n, :n] = A
    for col in range(p):
        At[:n, n + col] = stacked[p - col]
    At[n:, n:] = shift_matrix(p)
    return At


def phi_combination_dense(A, tau, vectors, full=False):
    """
    Evaluates sum_{j=0}^{p} tau^j phi_j(tau A) b_j with one dense
    exponential of the augmented matrix.

    Parameters:
      A -- an N x N matrix.
      tau -- the real scaling.
      vectors -- the list [b_0, b_1, ..., b_p].
      full -- if True, return all N + p entries of exp(tau A~) v instead
              of only the first N.

    Returns:
      the linear combination as a vector.
    """
    A, stacked = _stack_vectors(A, vectors)
    n = A.shape[0]
    if n > MAX_COMBINATION_DIM:
        raise DomainError("oracle is limited to dimension %d, got %d" % (
                MAX_COMBINATION_DIM, n))
    p = len(stacked) - 1

    if p == 0:
        E = expm(A, tau)[0]
        return E @ stacked[0]

    At = assemble_augmented(A, stacked)
    v = numpy.zeros(n + p)
    v[:n] = stacked[0]
    v[-1] = 1.0

    w = expm(At, tau)[0] @ v
    if full:
        return w
    return w[:n]

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
