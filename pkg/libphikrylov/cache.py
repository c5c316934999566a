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

from threading import Lock

import numpy

from libphikrylov.logger import log


class ReferenceCache(object):
    """
    Class for storing and recalling reference solutions during a sweep.

    Computing a self-convergence reference means integrating the problem
    with a step eight times smaller than the smallest step in the sweep,
    which usually costs more than the rest of the sweep put together. Every
    row of a sweep that shares a (problem, scheme, n, t_end, h_ref)
    combination shares one reference, and worker threads asking for a
    reference that is still being computed wait for it rather than
    starting a second computation.

    Cached arrays are read-only.

    API Functions
    -------------
      search_reference:
        Returns a cached reference solution, or None.
      store_reference:
        Caches a reference solution.
      fetch_reference:
        Returns a cached reference solution, computing it first if needed.
    """

    def __init__(self):
        self.entries = {}
        self.pending = {}
        self.cachelock = Lock()

    def __len__(self):
        with self.cachelock:
            return len(self.entries)

    def search_reference(self, problem, scheme, n, tend, h_ref):
        """
        Searches the cache for a reference solution.

        Parameters:
          problem -- the problem id.
          scheme -- the scheme id used to compute the reference.
          n -- the grid size.
          tend -- the end of the integration interval.
          h_ref -- the step used to compute the reference.

        Returns:
          the cached solution, or None if there isn't one.
        """
        key = self._reference_cache_key(problem, scheme, n, tend, h_ref)
        return self._cachefetch(key)

    def store_reference(self, problem, scheme, n, tend, h_ref, solution):
        """
        Caches a reference solution. Any existing entry is replaced.
        """
        key = self._reference_cache_key(problem, scheme, n, tend, h_ref)
        self._cachestore(key, solution)

    def fetch_reference(self, problem, scheme, n, tend, h_ref, compute):
        """
        Returns the reference solution for the given key, calling compute()
        to produce it if it isn't cached yet. Concurrent callers with the
        same key share a single call to compute().

        Exceptions raised by compute() propagate to the caller that ran
        it, and nothing is cached.
        """
        key = self._reference_cache_key(problem, scheme, n, tend, h_ref)

        with self.cachelock:
            if key in self.entries:
                return self.entries[key]
            if key not in self.pending:
                self.pending[key] = Lock()
            keylock = self.pending[key]

        with keylock:
            cached = self._cachefetch(key)
            if cached is not None:
                return cached

            log("Computing %s reference for %s at n=%s, h=%g" % (
                    scheme, problem, n, h_ref))
            solution = compute()
            self._cachestore(key, solution)

        with self.cachelock:
            self.pending.pop(key, None)
        return self.entries[key]

    def _cachestore(self, key, data):
        stored = numpy.array(data, dtype=float)
        stored.setflags(write=False)
        with self.cachelock:
            self.entries[key] = stored

    def _cachefetch(self, key):
        with self.cachelock:
            return self.entries.get(key)

    def _reference_cache_key(self, problem, scheme, n, tend, h_ref):
        return "_".join([str(problem), str(scheme), str(n), repr(float(tend)),
                repr(float(h_ref))])

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
