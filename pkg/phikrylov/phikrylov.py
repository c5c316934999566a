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

from libphikrylov.cache import ReferenceCache
from libphikrylov.errors import PhiKrylovError
from libphikrylov.kiops import DEFAULT_M_INIT, DEFAULT_M_MAX, DEFAULT_M_MIN
from libphikrylov.kiops import DEFAULT_MAX_SUBSTEPS, DEFAULT_TOL, TASK_II
from libphikrylov.kiops import kiops
from libphikrylov.logger import log
from libphikrylov.problems import PROBLEMS
from libphikrylov.problems import make_problem as _make_problem
from libphikrylov.schemes import SCHEMES, get_scheme
from libphikrylov.sweep import emit_csv as _emit_csv
from libphikrylov.sweep import run_sweep as _run_sweep

SOLVER_DEFAULTS = {
    "tol": DEFAULT_TOL,
    "m_init": DEFAULT_M_INIT,
    "m_min": DEFAULT_M_MIN,
    "m_max": DEFAULT_M_MAX,
    "max_substeps": DEFAULT_MAX_SUBSTEPS,
}


class PhiKrylov(object):
    """
    Primary class for phikrylov, bundling the Krylov phi-function solver,
    the exponential integrators, the benchmark problems and the sweep
    harness behind a single object.

    Every API function reports failures by logging the reason and
    returning None; the exceptions behind those failures are available
    from the libphikrylov modules for callers that want them.

    API Functions
    -------------
    get_schemes:
        Returns the ids of the available integrators.
    get_problems:
        Returns the ids of the available benchmark problems.
    phi:
        Evaluates a phi-function linear combination with the Krylov solver.
    make_problem:
        Builds a benchmark problem.
    integrate:
        Integrates a problem with one of the schemes at a constant step.
    run_sweep:
        Runs a convergence sweep.
    emit_csv:
        Writes sweep records to a CSV file.
    """

    def __init__(self, solverconf=None):
        """
        Init function for the PhiKrylov class.

        Parameters:
          solverconf -- an optional dictionary of default solver options:
                        tol, m_init, m_min, m_max and max_substeps. Options
                        passed to phi() take precedence.
        """
        self.solverconf = self._parse_solver_options(solverconf,
                SOLVER_DEFAULTS)
        self.schemes = {}
        self.cache = ReferenceCache()

    def get_schemes(self):
        """
        Returns:
          a sorted list of integrator ids.
        """
        return sorted(SCHEMES.keys())

    def get_problems(self):
        """
        Returns:
          a sorted list of problem ids.
        """
        return sorted(PROBLEMS.keys())

    def phi(self, T, operator, vectors, task=TASK_II, options=None):
        """
        Evaluates sum_j T_l^j phi_j(T_l A) b_j (Task II) or phi_q(T_l A) b_q
        (Task I) at each output time T_l.

        Parameters:
          T -- the output times, strictly increasing and positive.
          operator -- the matrix A as a LinearOperator, dense array or
                      scipy sparse matrix.
          vectors -- the list [b_p, ..., b_1, b_0].
          task -- "I" or "II".
          options -- a dictionary overriding the default solver options.

        Returns:
          a SolveResult, or None if the solve fails.
        """
        opts = self._parse_solver_options(options, self.solverconf)
        try:
            return kiops(T, operator, vectors, tol=opts["tol"],
                    m_init=opts["m_init"], m_min=opts["m_min"],
                    m_max=opts["m_max"], task=task,
                    max_substeps=opts["max_substeps"])
        except PhiKrylovError as e:
            log("Failed to evaluate phi-functions: %s" % (e))
            return None

    def make_problem(self, name, config=None):
        """
        Builds a benchmark problem.

        Parameters:
          name -- the problem id, see get_problems().
          config -- an optional dictionary of problem settings: n, tend
                    and the problem's physical constants.

        Returns:
          an OdeProblem, or None if the problem can't be built.
        """
        try:
            return _make_problem(name, config=config)
        except PhiKrylovError as e:
            log("Failed to create problem %s: %s" % (name, e))
            return None

    def integrate(self, scheme, problem, h, tol=None):
        """
        Integrates a problem over its whole time span with constant steps.

        Parameters:
          scheme -- the integrator id, see get_schemes().
          problem -- an OdeProblem, or a problem id to build one with
                     default settings.
          h -- the step size.
          tol -- the Krylov tolerance. Defaults to the solver tolerance.

        Returns:
          an IntegrationResult, or None if the integration fails.
        """
        if tol is None:
            tol = self.solverconf["tol"]

        if isinstance(problem, str):
            problem = self.make_problem(problem)
            if problem is None:
                return None

        integrator = self._getscheme(scheme)
        if integrator is None:
            return None

        try:
            return integrator.integrate(problem, h, tol)
        except PhiKrylovError as e:
            log("Failed to integrate %s with %s: %s" % (
                    problem.problem_name, scheme, e))
            return None

    def run_sweep(self, config):
        """
        Runs a convergence sweep, sharing self-convergence references with
        earlier sweeps run through this instance.

        Parameters:
          config -- a sweep configuration dictionary with the keys problem,
                    schemes, n, h, tol, reference, tend and threads.

        Returns:
          a list of RunRecords, or None if the configuration is invalid.
          Rows that fail are included, with their failed flag set.
        """
        try:
            return _run_sweep(config, self.cache)
        except PhiKrylovError as e:
            log("Failed to run sweep: %s" % (e))
            return None

    def emit_csv(self, records, path):
        """
        Writes sweep records to a CSV file.

        Returns:
          True if the file was written, None otherwise.
        """
        try:
            _emit_csv(records, path)
        except PhiKrylovError as e:
            log("Failed to write %s: %s" % (path, e))
            return None
        return True

    def _getscheme(self, scheme):
        """
        Finds the integrator instance for a scheme id, creating it the
        first time it is asked for.

        Returns:
          an EpirkScheme, or None if the id is unknown.
        """
        if scheme in self.schemes:
            return self.schemes[scheme]

        try:
            newscheme = get_scheme(scheme)
        except PhiKrylovError as e:
            log(e)
            return None

        self.schemes[scheme] = newscheme
        return newscheme

    def _parse_solver_options(self, options, defaults):
        parsed = dict(defaults)
        if options is None:
            return parsed

        for key, value in options.items():
            if key not in SOLVER_DEFAULTS:
                log("Ignoring unknown solver option %s" % (key))
                continue
            parsed[key] = value
        return parsed

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
