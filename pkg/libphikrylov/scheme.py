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

import numbers

import numpy

from libphikrylov.errors import PhiKrylovError, RequestError, StageError
from libphikrylov.kiops import DEFAULT_M_INIT, TASK_I, TASK_II, kiops
from libphikrylov.logger import log

# (t_end - t0) / h must be this close to an integer
STEP_COUNT_SLACK = 0.01

STAT_KEYS = ["substeps", "rejections", "matvecs", "dense_exp_calls",
        "krylov_steps", "exp_mults", "kiops_calls"]


def remainder(f, jacobian_action, u_n, f_n, u):
    """
    Computes the nonlinear remainder r(u) = f(u) - f_n - J(u_n) (u - u_n).

    Parameters:
      f -- the right hand side function.
      jacobian_action -- a function (u, x) -> J(u) x.
      u_n -- the state the step started from.
      f_n -- f(u_n), already evaluated.
      u -- the state to evaluate the remainder at.
    """
    return f(u) - f_n - jacobian_action(u_n, u - u_n)


def new_stats():
    return dict((key, 0) for key in STAT_KEYS)


class IntegrationResult(object):
    """
    The endpoint of a constant step integration.

    Attributes:
      u -- the state at t_end.
      t -- t_end.
      steps -- the number of steps taken.
      h -- the step size actually used.
      stats -- kiops work counters summed over every call.
      hints -- the warm start Krylov sizes after the last step.
    """

    def __init__(self, u, t, steps, h, stats, hints):
        self.u = u
        self.t = t
        self.steps = steps
        self.h = h
        self.stats = stats
        self.hints = hints

    def average_m(self):
        """
        Returns the mean Krylov basis size per accepted substep.
        """
        if self.stats["substeps"] == 0:
            return 0.0
        return self.stats["krylov_steps"] / float(self.stats["substeps"])


class EpirkScheme(object):
    """
    Base class for all exponential integrators.

    Each scheme module inherits from this class and implements _advance,
    which performs one step using the grouped phi-function calls of that
    scheme. The base class takes care of calling the Krylov solver,
    warm starting every call slot from its previous Krylov size, adding
    up work counters and turning solver failures into StageErrors.

    API Functions
    -------------
    step:
        Performs a single step of size h.
    integrate:
        Performs constant steps from t0 to t_end.
    """

    def __init__(self):
        # These members MUST be overridden by the child scheme's init
        # function
        self.scheme_name = "basescheme"
        self.order = None
        self.calls = 0

        # Coefficients of the scheme, keyed by name
        self.tableau = {}

    def _advance(self, ctx, u_n, f_n, h):
        raise NotImplementedError

    def _hint_list(self, m_hint):
        if m_hint is None:
            return [DEFAULT_M_INIT] * self.calls
        if isinstance(m_hint, numbers.Integral):
            return [m_hint] * self.calls
        hints = list(m_hint)
        if len(hints) != self.calls:
            raise RequestError("%s needs %d warm start hints, got %d" % (
                    self.scheme_name, self.calls, len(hints)))
        return hints

    def step(self, problem, u_n, h, tol, m_hint=None, stats=None,
            step_index=None):
        """
        Performs one step of the scheme.

        Parameters:
          problem -- the OdeProblem being integrated.
          u_n -- the current state.
          h -- the step size.
          tol -- the tolerance passed to every Krylov solve.
          m_hint -- the starting Krylov size: None for the default, an int
                    for every call, or a list with one entry per call slot
                    as returned by a previous step.
          stats -- an optional dictionary of work counters to add to.
          step_index -- the index of this step, used in error messages.

        Returns:
          a tuple (u_next, hints) where hints holds the final Krylov size
          of each call slot; hints[-1] is that of the last call.

        Raises:
          StageError if any Krylov solve fails.
        """
        if not h > 0:
            raise RequestError("step size must be positive, got %r" % (h))
        if stats is None:
            stats = new_stats()

        u_n = numpy.asarray(u_n, dtype=float)
        f_n = problem.f(u_n)
        ctx = _StepContext(self, problem, u_n, f_n, h, tol,
                self._hint_list(m_hint), stats, step_index)
        u_next = self._advance(ctx, u_n, f_n, h)
        return u_next, ctx.hints

    def integrate(self, problem, h, tol, m_hint=None):
        """
        Integrates a problem from t0 to t_end with constant steps.

        The number of steps is (t_end - t0) / h rounded to the nearest
        integer, and the step is then adjusted so that the last step ends
        exactly on t_end.

        Returns:
          an IntegrationResult.

        Raises:
          RequestError if (t_end - t0) / h is not within 1% of an integer.
          StageError if a step fails.
        """
        span = problem.tend - problem.t0
        ratio = span / h
        steps = int(round(ratio))
        if steps < 1 or abs(ratio - steps) > STEP_COUNT_SLACK:
            raise RequestError("step %r does not divide [%r, %r]" % (
                    h, problem.t0, problem.tend))
        h_used = span / steps

        stats = new_stats()
        hints = m_hint
        u = numpy.array(problem.u0, dtype=float)
        for index in range(steps):
            u, hints = self.step(problem, u, h_used, tol, hints, stats, index)

        return IntegrationResult(u, problem.tend, steps, h_used, stats,
                hints)


class _StepContext(object):
    """
    Everything a scheme needs while performing one step: the Jacobian
    at u_n scaled by h, the warm start hints and the counters.
    """

    def __init__(self, scheme, problem, u_n, f_n, h, tol, hints, stats,
            step_index):
        self.scheme = scheme
        self.problem = problem
        self.u_n = u_n
        self.tol = tol
        self.hints = hints
        self.stats = stats
        self.step_index = step_index
        self.operator = problem.jacobian_operator(u_n, scale=h)
        self.f_n = f_n

    def remainder(self, u):
        return remainder(self.problem.f, self.problem.jacobian_action,
                self.u_n, self.f_n, u)

    def phi(self, slot, stage, T, vectors, task):
        """
        Runs one Krylov solve for call slot `slot` on h J(u_n).

        Returns:
          the outputs array of the solve.
        """
        try:
            result = kiops(T, self.operator, vectors, tol=self.tol,
                    m_init=self.hints[slot], task=task)
        except PhiKrylovError as e:
            log("%s stage %s failed at step %s: %s" % (
                    self.scheme.scheme_name, stage, self.step_index, e))
            raise StageError(self.scheme.scheme_name, stage,
                    self.step_index, str(e)) from e

        self.hints[slot] = result.final_m
        for key in STAT_KEYS:
            if key in result.stats:
                self.stats[key] += result.stats[key]
        self.stats["kiops_calls"] += 1
        return result.outputs

    def phi_single(self, slot, stage, T, q, b):
        """
        Evaluates phi_q(T_k h J) b for every T_k with one Task I solve.
        """
        zero = numpy.zeros_like(b)
        vectors = [b] + [zero] * q
        return self.phi(slot, stage, T, vectors, TASK_I)

    def phi_final(self, slot, hf, b3, b4):
        """
        Evaluates phi_1(h J) hf + phi_3(h J) b3 + phi_4(h J) b4 with one
        Task II solve.
        """
        zero = numpy.zeros_like(hf)
        return self.phi(slot, "u_next", [1.0], [b4, b3, zero, hf, zero],
                TASK_II)[0]

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
