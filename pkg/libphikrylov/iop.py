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
Incomplete orthogonalisation procedure of length 2.

Each new Krylov vector is orthogonalised against the previous two basis
vectors only, so building m vectors costs O(m (N + p)) instead of the
O(m^2 (N + p)) of full Arnoldi. The basis is not orthonormal in general
but spans the Krylov space, and the projected matrix H is banded.
"""

import numpy

from libphikrylov.errors import DimensionError, RequestError

IOP_WINDOW = 2

HAPPY_RELATIVE = 1e-12
HAPPY_FLOOR = 1e-14


class KrylovState(object):
    """
    The Krylov basis and projected matrix for one substep.

    Row i of V holds the basis vector v_{i+1}, i.e. V is stored
    transposed relative to the usual column convention so that every
    basis vector is contiguous in memory. H is (m_max + 1) x (m_max + 1);
    the extra column is where the error estimate embeds e_1.

    Attributes:
      V -- (m_max + 1) x (N + p) array of basis vectors.
      H -- (m_max + 1) x (m_max + 1) projected matrix.
      j -- the number of completed IOP steps.
      happy -- True once the recurrence has broken down.
      beta -- the norm of the start vector.
      matvecs -- the number of operator applications so far.
    """

    def __init__(self, size, m_max):
        self.m_max = m_max
        self.V = numpy.zeros((m_max + 1, size))
        self.H = numpy.zeros((m_max + 1, m_max + 1))
        self.j = 0
        self.happy = False
        self.beta = 0.0
        self.matvecs = 0

    def start(self, v):
        """
        Resets the state and makes v / ||v|| the first basis vector.

        Returns:
          the norm of v.
        """
        self.H[:, :] = 0.0
        self.j = 0
        self.happy = False
        self.beta = float(numpy.linalg.norm(v))
        if self.beta > 0.0:
            self.V[0] = v / self.beta
        else:
            self.V[0] = 0.0
        return self.beta

    def basis(self):
        """
        Returns the completed basis vectors as the columns of a
        (N + p) x j array.
        """
        return self.V[:self.j].T

    def projection(self):
        """
        Returns a copy of the j x j projected matrix H_j.
        """
        return self.H[:self.j, :self.j].copy()

    def subdiagonal(self):
        """
        Returns h_{j+1,j}, which is zero after a happy breakdown.
        """
        if self.j == 0 or self.happy:
            return 0.0
        return self.H[self.j, self.j - 1]


def iop_extend(system, state, m_target):
    """
    Runs IOP steps until the basis holds m_target vectors or the
    recurrence breaks down.

    Extending an existing state gives bit-for-bit the same columns as a
    single run to the larger target would have.

    Parameters:
      system -- the AugmentedSystem supplying the matrix-vector product.
      state -- a KrylovState that has been started.
      m_target -- the number of basis vectors wanted, more than the state
                  already holds and at most m_max.

    Returns:
      the updated state (the same object).

    Raises:
      DimensionError if m_target exceeds m_max.
      RequestError if the state has already broken down or already holds
      m_target vectors.
    """
    if m_target > state.m_max:
        raise DimensionError("m_target %d exceeds m_max %d" % (
                m_target, state.m_max))
    if state.happy:
        raise RequestError("cannot extend a Krylov basis after breakdown")
    if m_target <= state.j:
        raise RequestError("basis already holds %d vectors, asked for %d" % (
                state.j, m_target))

    V = state.V
    H = state.H

    while state.j < m_target:
        j = state.j
        w = system.matvec(V[j])
        state.matvecs += 1

        scale = numpy.linalg.norm(w)
        for i in range(max(0, j - IOP_WINDOW + 1), j + 1):
            H[i, j] = V[i] @ w
            w = w - H[i, j] * V[i]

        s = numpy.linalg.norm(w)
        state.j = j + 1

        if s <= max(HAPPY_RELATIVE * scale, HAPPY_FLOOR):
            state.happy = True
            break

        H[j + 1, j] = s
        V[j + 1] = w / s

    return state

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
