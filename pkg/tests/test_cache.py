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

import threading
import time
from concurrent.futures import ThreadPoolExecutor

import numpy
import pytest

from libphikrylov.cache import ReferenceCache


def test_store_and_search():
    cache = ReferenceCache()
    assert cache.search_reference("adr", "epirk4s3", 16, 0.1, 0.001) is None

    cache.store_reference("adr", "epirk4s3", 16, 0.1, 0.001, [1.0, 2.0])
    found = cache.search_reference("adr", "epirk4s3", 16, 0.1, 0.001)
    numpy.testing.assert_array_equal(found, [1.0, 2.0])
    assert len(cache) == 1

    # every part of the key matters
    assert cache.search_reference("adr", "epirk4s3", 16, 0.2, 0.001) is None
    assert cache.search_reference("adr", "epirk4s3", 16, 0.1, 0.002) is None
    assert cache.search_reference("adr", "exprb5s3", 16, 0.1, 0.001) is None
    assert cache.search_reference("adr", "epirk4s3", 32, 0.1, 0.001) is None


def test_cached_arrays_are_read_only():
    cache = ReferenceCache()
    source = numpy.ones(3)
    cache.store_reference("semilinear", "epirk4s3", 10, 1.0, 0.01, source)
    source[0] = 5.0

    found = cache.search_reference("semilinear", "epirk4s3", 10, 1.0, 0.01)
    assert found[0] == 1.0
    with pytest.raises(ValueError):
        found[0] = 2.0


def test_fetch_computes_once():
    cache = ReferenceCache()
    calls = []

    def compute():
        calls.append(1)
        return numpy.arange(4.0)

    first = cache.fetch_reference("adr", "epirk4s3", 8, 0.1, 0.01, compute)
    second = cache.fetch_reference("adr", "epirk4s3", 8, 0.1, 0.01, compute)
    assert len(calls) == 1
    assert first is second


def test_concurrent_fetches_share_one_computation():
    cache = ReferenceCache()
    calls = []
    lock = threading.Lock()

    def compute():
        with lock:
            calls.append(1)
        time.sleep(0.1)
        return numpy.full(5, 7.0)

    with ThreadPoolExecutor(max_workers=6) as executor:
        futures = [executor.submit(cache.fetch_reference, "gray-scott",
                "exprb5s3", 16, 0.1, 0.001, compute) for _ in range(6)]
        results = [future.result() for future in futures]

    assert len(calls) == 1
    for result in results:
        numpy.testing.assert_array_equal(result, numpy.full(5, 7.0))


def test_failed_compute_caches_nothing():
    cache = ReferenceCache()

    def broken():
        raise RuntimeError("no reference today")

    with pytest.raises(RuntimeError):
        cache.fetch_reference("adr", "epirk4s3", 8, 0.1, 0.01, broken)
    assert len(cache) == 0

    found = cache.fetch_reference("adr", "epirk4s3", 8, 0.1, 0.01,
            lambda: numpy.zeros(2))
    numpy.testing.assert_array_equal(found, numpy.zeros(2))
    assert len(cache) == 1

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
