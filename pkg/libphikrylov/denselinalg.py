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
Small dense kernels used on the projected (Krylov-sized) matrices.

The matrix exponential is a diagonal Pade approximant combined with
scaling and squaring, choosing the lowest Pade degree out of 3, 5, 7, 9
and 13 whose backward error bound covers the 1-norm of the input. Unlike
scipy.linalg.expm, it reports how many dense matrix products it spent,
which is what the solver's cost model is expressed in.

API Functions
-------------
expm:
    Computes exp(scale * M) and the number of dense multiplications used.
matvec_dense:
    Dense matrix-vector product with shape checking.
shift_matrix:
    Builds the p x p upper shift matrix K.
"""

import math

import numpy
import scipy.linalg

from libphikrylov.errors import DimensionError, DomainError

# Backward error thresholds on ||A||_1 for each diagonal Pade degree
PADE_THETA = {
    3: 1.495585217958292e-2,
    5: 2.539398330063230e-1,
    7: 9.504178996162932e-1,
    9: 2.097847961257068e0,
    13: 5.371920351148152e0,
}

PADE_COEFFS = {
    3: (120., 60., 12., 1.),
    5: (30240., 15120., 3360., 420., 30., 1.),
    7: (17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.),
    9: (17643225600., 8821612800., 2075673600., 302702400., 30270240.,
        2162160., 110880., 3960., 90., 1.),
    13: (64764752532480000., 32382376266240000., 7771770303897600.,
         1187353796428800., 129060195264000., 10559470521600.,
         670442572800., 33522128640., 1323241920., 40840800., 960960.,
         16380., 182., 1.),
}


def _check_square(M, what="matrix"):
    M = numpy.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError("%s must be square, got shape %s" % (
                what, M.shape))
    if not numpy.all(numpy.isfinite(M)):
        raise DomainError("%s has non-finite entries" % (what))
    return M


def _pade_low(A, ident, degree):
    """
    Evaluates U and V of the degree 3, 5, 7 or 9 diagonal Pade approximant
    to exp(A), where the approximant is (V - U)^-1 (V + U).

    Returns:
      a tuple (U, V, mults) where mults is the number of dense products
      used.
    """
    b = PADE_COEFFS[degree]
    A2 = A @ A
    mults = 1
    powers = [ident, A2]

    # even powers A^4, A^6, A^8 as needed
    for _ in range(2, (degree + 1) // 2):
        powers.append(powers[-1] @ A2)
        mults += 1

    Usum = numpy.zeros_like(A)
    V = numpy.zeros_like(A)
    for k, P in enumerate(powers):
        Usum += b[2 * k + 1] * P
        V += b[2 * k] * P

    U = A @ Usum
    mults += 1
    return U, V, mults


def _pade13(A, ident):
    b = PADE_COEFFS[13]
    A2 = A @ A
    A4 = A2 @ A2
    A6 = A4 @ A2

    inner = A6 @ (b[13] * A6 + b[11] * A4 + b[9] * A2)
    U = A @ (inner + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * ident)
    V = A6 @ (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + \
            b[4] * A4 + b[2] * A2 + b[0] * ident
    return U, V, 6


def _pade_solve(U, V):
    try:
        return scipy.linalg.solve(V - U, V + U)
    except numpy.linalg.LinAlgError as e:
        raise DomainError("Pade denominator is singular: %s" % (e)) from e


def expm(M, scale=1.0):
    """
    Computes the matrix exponential exp(scale * M).

    Parameters:
      M -- a square two-dimensional array.
      scale -- a finite real factor applied to M before exponentiation.

    Returns:
      a tuple (E, nmult) where E is exp(scale * M) and nmult is the number
      of dense matrix-matrix products performed, squarings included.

    Raises:
      DimensionError if M is not square.
      DomainError if M or scale is not finite, or if the Pade
      denominator cannot be solved.
    """
    M = _check_square(M)
    if not math.isfinite(scale):
        raise DomainError("expm scale factor must be finite, got %r" % (scale))

    n = M.shape[0]
    if n == 0:
        return numpy.zeros((0, 0)), 0

    A = scale * M
    ident = numpy.eye(n)
    norm = numpy.linalg.norm(A, 1)

    for degree in (3, 5, 7, 9):
        if norm <= PADE_THETA[degree]:
            U, V, mults = _pade_low(A, ident, degree)
            E = _pade_solve(U, V)
            return E, mults

    squarings = 0
    if norm > PADE_THETA[13]:
        squarings = int(math.ceil(math.log2(norm / PADE_THETA[13])))
        A = A / (2.0 ** squarings)

    U, V, mults = _pade13(A, ident)
    E = _pade_solve(U, V)

    for _ in range(squarings):
        E = E @ E
    return E, mults + squarings


def matvec_dense(M, x):
    """
    Multiplies a dense matrix by a vector.

    Parameters:
      M -- a two-dimensional array.
      x -- a vector with as many entries as M has columns.

    Returns:
      the product M x as a new vector.
    """
    M = numpy.asarray(M, dtype=float)
    x = numpy.asarray(x, dtype=float)
    if M.ndim != 2 or x.ndim != 1 or M.shape[1] != x.shape[0]:
        raise DimensionError("cannot multiply %s matrix by %s vector" % (
                M.shape, x.shape))
    return M @ x


def shift_matrix(p):
    """
    Returns the p x p matrix with ones on the first superdiagonal.
    """
    return numpy.eye(p, k=1)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
