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
Convergence sweeps: integrate a problem with a list of step sizes, measure
the error of each run against a reference and collect the results as
RunRecords that can be written out as CSV for precision diagrams.

The reference is either the problem's exact solution or a
self-convergence reference computed with the same scheme, a step of
min(h) / 8 and a Krylov tolerance of 1e-14.

API Functions
-------------
parse_sweep_config:
    Fills in defaults and checks a sweep configuration dictionary.
run_sweep:
    Runs every (n, scheme, h) row of a sweep, in parallel if asked to.
emit_csv:
    Writes records to a CSV file.
"""

import csv
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor

import numpy

from libphikrylov.cache import ReferenceCache
from libphikrylov.errors import OutputError, PhiKrylovError, RequestError
from libphikrylov.errors import UnknownNameError
from libphikrylov.logger import log, warn
from libphikrylov.problems import PROBLEMS, make_problem
from libphikrylov.schemes import SCHEMES, get_scheme

CSV_COLUMNS = ["problem", "scheme", "n", "h", "tol", "error", "wall_s",
        "substeps", "matvecs", "avg_m"]

REFERENCE_EXACT = "exact"
REFERENCE_SELF = "self"
REFERENCE_TOL = 1e-14
REFERENCE_REFINEMENT = 8

DEFAULT_SWEEP_TOL = 1e-14
THREADS_ENV = "PHIKRYLOV_THREADS"


class RunRecord(object):
    """
    The outcome of one (problem, scheme, n, h) row of a sweep.

    Attributes:
      problem, scheme -- the ids of the problem and scheme.
      n -- the grid size.
      h -- the requested step size.
      tol -- the Krylov tolerance.
      error -- the max norm of the difference to the reference; NaN if
               the row failed.
      wall_s -- seconds spent integrating, reference excluded.
      substeps, matvecs -- Krylov work counters summed over the run.
      avg_m -- the mean Krylov basis size per accepted substep.
      failed -- True if the row failed.
      reason -- why the row failed, or None.
    """

    def __init__(self, problem, scheme, n, h, tol, error=float("nan"),
            wall_s=0.0, substeps=0, matvecs=0, avg_m=0.0, failed=False,
            reason=None):
        self.problem = problem
        self.scheme = scheme
        self.n = n
        self.h = h
        self.tol = tol
        self.error = error
        self.wall_s = wall_s
        self.substeps = substeps
        self.matvecs = matvecs
        self.avg_m = avg_m
        self.failed = failed
        self.reason = reason

    def as_row(self):
        """
        Returns the record as a list of strings in CSV_COLUMNS order.
        Floats carry 17 significant digits so they parse back exactly.
        """
        return [self.problem, self.scheme, str(self.n), _fmt(self.h),
                _fmt(self.tol), _fmt(self.error), _fmt(self.wall_s),
                str(self.substeps), str(self.matvecs), _fmt(self.avg_m)]


def _fmt(value):
    return "%.17g" % (value)


def _env_threads():
    value = os.environ.get(THREADS_ENV)
    if value is None or value.strip() == "":
        return None
    try:
        threads = int(value)
    except ValueError:
        log("Ignoring %s=%r, expected an integer" % (THREADS_ENV, value))
        return None
    return max(1, threads)


def _as_list(value):
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        return list(value)
    return [value]


def parse_sweep_config(config):
    """
    Checks a sweep configuration and fills in its defaults.

    Recognised keys: problem, schemes (or scheme), n, h, tol, reference,
    tend and threads. n and h may be single values or lists.

    Returns:
      a new dictionary with every key present.

    Raises:
      UnknownNameError for an unknown problem or scheme id.
      RequestError for an empty h list, a bad step or reference mode.
    """
    problem = config.get("problem")
    if problem not in PROBLEMS:
        raise UnknownNameError("unknown problem %r" % (problem))

    schemes = _as_list(config.get("schemes", config.get("scheme")))
    if not schemes:
        raise RequestError("a sweep needs at least one scheme")
    for scheme in schemes:
        if scheme not in SCHEMES:
            raise UnknownNameError("unknown scheme %r" % (scheme))

    hs = _as_list(config.get("h"))
    if not hs:
        raise RequestError("a sweep needs at least one step size")
    hs = [float(h) for h in hs]
    for h in hs:
        if not h > 0:
            raise RequestError("step sizes must be positive, got %r" % (h))

    ns = _as_list(config.get("n"))
    if not ns:
        ns = [None]

    has_exact = PROBLEMS[problem].HAS_EXACT
    reference = config.get("reference")
    if reference is None:
        reference = REFERENCE_EXACT if has_exact else REFERENCE_SELF
    if reference not in (REFERENCE_EXACT, REFERENCE_SELF):
        raise RequestError("reference must be 'exact' or 'self', got %r" % (
                reference))
    if reference == REFERENCE_EXACT and not has_exact:
        raise RequestError("problem %s has no exact solution" % (problem))

    threads = config.get("threads")
    cap = _env_threads()
    if threads is None:
        threads = cap if cap is not None else 1
    threads = max(1, int(threads))
    if cap is not None:
        threads = min(threads, cap)

    tol = config.get("tol")
    if tol is None:
        tol = DEFAULT_SWEEP_TOL

    return {
        "problem": problem,
        "schemes": schemes,
        "n": ns,
        "h": hs,
        "tol": float(tol),
        "reference": reference,
        "tend": config.get("tend"),
        "threads": threads,
    }


def _max_error(problem, u, reference):
    diff = problem.physical(u) - problem.physical(reference)
    return float(numpy.max(numpy.abs(diff)))


def _reference_solution(settings, problem, scheme_id, h_ref, cache):
    if settings["reference"] == REFERENCE_EXACT:
        return problem.exact(problem.tend)

    def compute():
        scheme = get_scheme(scheme_id)
        return scheme.integrate(problem, h_ref, REFERENCE_TOL).u

    return cache.fetch_reference(settings["problem"], scheme_id, problem.n,
            problem.tend, h_ref, compute)


def _run_row(settings, problem, scheme_id, h, h_ref, cache):
    record = RunRecord(settings["problem"], scheme_id, problem.n, h,
            settings["tol"])
    scheme = get_scheme(scheme_id)

    try:
        start = time.perf_counter()
        result = scheme.integrate(problem, h, settings["tol"])
        record.wall_s = time.perf_counter() - start

        reference = _reference_solution(settings, problem, scheme_id, h_ref,
                cache)
    except PhiKrylovError as e:
        record.failed = True
        record.reason = str(e)
        warn("Sweep row %s/%s n=%s h=%g failed: %s" % (record.problem,
                scheme_id, record.n, h, e))
        return record

    record.error = _max_error(problem, result.u, reference)
    record.substeps = result.stats["substeps"]
    record.matvecs = result.stats["matvecs"]
    record.avg_m = result.average_m()
    if not math.isfinite(record.error):
        record.failed = True
        record.reason = "non-finite solution"
        warn("Sweep row %s/%s n=%s h=%g produced a non-finite solution" % (
                record.problem, scheme_id, record.n, h))
        return record

    log("Sweep row %s/%s n=%s h=%g: error %.3e in %.3fs" % (record.problem,
            scheme_id, record.n, h, record.error, record.wall_s))
    return record


def run_sweep(config, cache=None):
    """
    Runs a convergence sweep.

    Rows are produced for every n, then every scheme, then every h, and
    returned in that order whatever order the worker threads finish in.
    A failing row is recorded with failed set and the sweep carries on.

    Parameters:
      config -- a sweep configuration dictionary, see parse_sweep_config.
      cache -- a ReferenceCache to share references with other sweeps.

    Returns:
      a list of RunRecords.
    """
    settings = parse_sweep_config(config)
    if cache is None:
        cache = ReferenceCache()

    problem_config = {}
    if settings["tend"] is not None:
        problem_config["tend"] = float(settings["tend"])

    h_ref = min(settings["h"]) / REFERENCE_REFINEMENT

    rows = []
    for n in settings["n"]:
        problem = make_problem(settings["problem"], n, problem_config)
        for scheme_id in settings["schemes"]:
            for h in settings["h"]:
                rows.append((problem, scheme_id, h))

    if settings["threads"] == 1 or len(rows) == 1:
        return [_run_row(settings, problem, scheme_id, h, h_ref, cache)
                for problem, scheme_id, h in rows]

    with ThreadPoolExecutor(max_workers=settings["threads"]) as executor:
        futures = [executor.submit(_run_row, settings, problem, scheme_id, h,
                h_ref, cache) for problem, scheme_id, h in rows]
        return [future.result() for future in futures]


def sweep_failed(records):
    return any(record.failed for record in records)


def emit_csv(records, path):
    """
    Writes records to a CSV file with the header
    problem,scheme,n,h,tol,error,wall_s,substeps,matvecs,avg_m
    and one row per record, in the order given.

    Raises:
      RequestError if there are no records.
      OutputError if the file can't be written.
    """
    if not records:
        raise RequestError("no records to write")

    try:
        with open(path, "w", newline="") as csvfile:
            writer = csv.writer(csvfile, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for record in records:
                writer.writerow(record.as_row())
    except OSError as e:
        raise OutputError("cannot write %s: %s" % (path, e)) from e

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
