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
Adaptive Krylov solver for linear combinations of phi-functions.

Given output times T_1 < ... < T_end, an operator A and vectors
b_p, ..., b_1, b_0, the solver evaluates

    w(T_l) = sum_j T_l^j phi_j(T_l A) b_j

by propagating exp(tau A~) over substeps of the augmented matrix A~.
Each substep builds an incompletely orthogonalised Krylov basis, takes
the exponential of the small projected matrix with the first column
embedded for the error estimate, and then either accepts the substep or
retries with a larger basis or a shorter substep.

Two kinds of request are supported:
    Task I  -- a single phi_q term at several output times. Outputs are
               rescaled by 1/T_l^q so they hold phi_q(T_l A) b_q.
    Task II -- the full linear combination at a single output time.

API Functions
-------------
kiops:
    Convenience entry point taking the raw inputs.
solve:
    Runs the solver on a PhiRequest.
projected_step:
    Exponential of the projected matrix plus the error estimate.
acceptance:
    Scaled error and the accept/reject decision.
suggest_parameters:
    Next substep length and Krylov size.
record_outputs:
    Writes accepted substep results into the output store.
cost_iop, cost_exp, cost_model, compare_scenarios:
    Operation count estimates, for diagnostics only.
"""

import collections
import math

import numpy

from libphikrylov.augmented import build_augmented
from libphikrylov.denselinalg import expm
from libphikrylov.errors import ConvergenceError, RequestError
from libphikrylov.iop import KrylovState, iop_extend
from libphikrylov.logger import debug, log
from libphikrylov.operator import as_operator

TASK_I = "I"
TASK_II = "II"

DEFAULT_TOL = 1e-7
DEFAULT_M_INIT = 10
DEFAULT_M_MIN = 10
DEFAULT_M_MAX = 128
DEFAULT_MAX_SUBSTEPS = 10000

# smallest m_min for which the +33% cap still lets m grow by one
SMALLEST_M_MIN = 3

DELTA = 1.4
GAMMA = 0.9
GAMMA_MMAX = 0.6

TAU_SHRINK = 5.0
TAU_GROW = 5.0
M_SHRINK = 0.75
M_GROW = 4.0 / 3.0

INITIAL_KAPPA = 2.0
KAPPA_MIN = 1.1
KAPPA_MAX = 10.0
Q_FLOOR = 0.5
ORDER_LOG_GUARD = 1e-12

ProjectedStep = collections.namedtuple("ProjectedStep",
        ["w", "epsilon", "F", "n_mult"])


class PhiRequest(object):
    """
    Everything the solver needs for one evaluation.

    Attributes:
      T -- the output times as a float array.
      operator -- the LinearOperator A.
      vectors -- the list [b_p, ..., b_1, b_0].
      tol -- the relative tolerance.
      m_init, m_min, m_max -- Krylov size bounds.
      task -- TASK_I or TASK_II.
      max_substeps -- the attempt budget before ConvergenceError.
      q -- the phi index that Task I outputs are rescaled for; filled in
           by validate().
    """

    def __init__(self, T, operator, vectors, tol=DEFAULT_TOL,
            m_init=DEFAULT_M_INIT, m_min=DEFAULT_M_MIN, m_max=DEFAULT_M_MAX,
            task=TASK_II, max_substeps=DEFAULT_MAX_SUBSTEPS):
        self.T = numpy.atleast_1d(numpy.asarray(T, dtype=float))
        self.operator = as_operator(operator)
        self.vectors = [numpy.asarray(b, dtype=float) for b in vectors]
        self.tol = tol
        self.m_init = m_init
        self.m_min = m_min
        self.m_max = m_max
        self.task = task
        self.max_substeps = max_substeps
        self.q = 0

    def validate(self):
        """
        Checks the request and works out the Task I phi index.

        Raises:
          RequestError describing the first problem found.
        """
        T = self.T
        if T.ndim != 1 or len(T) == 0:
            raise RequestError("at least one output time is required")
        if not numpy.all(numpy.isfinite(T)) or T[0] <= 0:
            raise RequestError("output times must be finite and positive")
        if numpy.any(numpy.diff(T) <= 0):
            raise RequestError("output times must be strictly increasing")

        if not self.tol > 0:
            raise RequestError("tolerance must be positive, got %r" % (
                    self.tol))
        if self.m_min < SMALLEST_M_MIN:
            raise RequestError("m_min must be at least %d, got %d" % (
                    SMALLEST_M_MIN, self.m_min))
        if self.m_min > self.m_max:
            raise RequestError("m_min %d is larger than m_max %d" % (
                    self.m_min, self.m_max))
        if self.max_substeps <= 0:
            raise RequestError("the substep budget must be positive")
        if len(self.vectors) == 0:
            raise RequestError("at least b_0 must be given")

        if self.task == TASK_II:
            if len(T) != 1:
                raise RequestError("Task II takes exactly one output time")
            self.q = 0
        elif self.task == TASK_I:
            self.q = self._single_phi_index()
        else:
            raise RequestError("unknown task %r" % (self.task))

    def _single_phi_index(self):
        p = len(self.vectors) - 1
        if p == 0:
            return 0

        nonzero = []
        for q in range(1, p + 1):
            if numpy.any(self.vectors[p - q] != 0):
                nonzero.append(q)

        if len(nonzero) > 1:
            raise RequestError("Task I needs a single phi term, got indices %s"
                    % (nonzero))
        if len(nonzero) == 0:
            return 0
        if numpy.any(self.vectors[-1] != 0):
            raise RequestError("Task I with phi_%d needs b_0 == 0" % (
                    nonzero[0]))
        return nonzero[0]


class StepController(object):
    """
    Substep length, Krylov size and the estimates that drive their
    adaptation.

    The *_old attributes describe the most recent rejected attempt within
    the current substep and are None when there wasn't one.
    """

    def __init__(self, tau, m, m_min, m_max):
        self.tau = tau
        self.m = m
        self.m_min = m_min
        self.m_max = m_max
        self.q = max(m / 4.0 - 1.0, Q_FLOOR)
        self.kappa = INITIAL_KAPPA
        self.clear_history()

    def clear_history(self):
        self.omega_old = None
        self.epsilon_old = None
        self.tau_old = None
        self.m_old = None

    def remember_rejection(self, omega, epsilon, tau, m):
        self.omega_old = omega
        self.epsilon_old = epsilon
        self.tau_old = tau
        self.m_old = m

    def has_history(self):
        return self.omega_old is not None


class SolveResult(object):
    """
    The outcome of a solve.

    Attributes:
      outputs -- a len(T) x N array; row l is the result for T_l.
      final_m -- the Krylov size suggested for a subsequent solve.
      stats -- a dictionary of work counters: substeps, rejections,
               matvecs, dense_exp_calls, krylov_steps, exp_mults and
               error_estimate.
    """

    def __init__(self, outputs, final_m, stats):
        self.outputs = outputs
        self.final_m = final_m
        self.stats = stats

    def __len__(self):
        return len(self.outputs)

    def __getitem__(self, index):
        return self.outputs[index]


def projected_step(state, tau, beta):
    """
    Exponentiates the projected matrix with e_1 embedded in its last
    column and extracts the update and its error estimate.

    The (j + 1) x (j + 1) working matrix is [[H_j, e_1], [0, 0]]. Its
    exponential holds exp(tau H_j) in the leading block and
    tau phi_1(tau H_j) e_1 in the last column. The state's own H is never
    modified, so nothing needs restoring after a rejection.

    Parameters:
      state -- a KrylovState with at least one completed step.
      tau -- the substep length.
      beta -- the norm of the substep's start vector.

    Returns:
      a ProjectedStep (w, epsilon, F, n_mult) where w is the propagated
      vector of length N + p, epsilon is the error estimate (zero after a
      happy breakdown), F is the dense exponential and n_mult the number
      of dense products spent on it.
    """
    j = state.j
    work = numpy.zeros((j + 1, j + 1))
    work[:j, :j] = state.H[:j, :j]
    work[0, j] = 1.0

    F, n_mult = expm(work, tau)
    w = beta * (state.V[:j].T @ F[:j, 0])

    if state.happy:
        epsilon = 0.0
    else:
        epsilon = abs(beta * state.subdiagonal() * F[j - 1, j])
    return ProjectedStep(w, epsilon, F, n_mult)


def acceptance(epsilon, tau, t_end, tol):
    """
    Computes the scaled error omega = t_end * epsilon / (tau * tol).

    Returns:
      a tuple (omega, accept) where accept is omega <= 1.4.
    """
    omega = t_end * epsilon / (tau * tol)
    return omega, omega <= DELTA


def _estimate_order(ctrl, epsilon, m):
    fallback = max(m / 4.0 - 1.0, Q_FLOOR)
    if not ctrl.has_history() or ctrl.tau == ctrl.tau_old:
        return fallback
    if epsilon <= 0 or ctrl.epsilon_old <= 0:
        return fallback

    # local error ~ tau^(q + 1)
    denom = math.log(ctrl.tau / ctrl.tau_old)
    if abs(denom) < ORDER_LOG_GUARD:
        return fallback
    q = math.log(epsilon / ctrl.epsilon_old) / denom - 1.0
    if not math.isfinite(q) or q < Q_FLOOR:
        return fallback
    return q


def _estimate_kappa(ctrl, omega, m):
    if not ctrl.has_history() or ctrl.m_old == m:
        return INITIAL_KAPPA
    if omega <= 0 or ctrl.omega_old <= 0:
        return INITIAL_KAPPA

    kappa = (omega / ctrl.omega_old) ** (1.0 / (ctrl.m_old - m))
    if not math.isfinite(kappa):
        return INITIAL_KAPPA
    return min(KAPPA_MAX, max(KAPPA_MIN, kappa))


def _clip_tau(tau, tau_new, remaining):
    tau_new = max(tau / TAU_SHRINK, min(TAU_GROW * tau, tau_new))
    return min(remaining, tau_new)


def _clip_m(m, m_new, m_min, m_max):
    low = int(math.ceil(M_SHRINK * m))
    high = int(math.floor(M_GROW * m))
    m_new = max(low, min(high, m_new))
    return max(m_min, min(m_max, m_new))


def suggest_parameters(ctrl, omega, epsilon, state, t_remaining):
    """
    Suggests the substep length and Krylov size for the next attempt.

    Below m_max the substep length is kept and the Krylov size varies.
    Once the basis has reached m_max the size is frozen and the substep
    length varies instead, with a safety factor of 0.6 after a rejection
    and 0.9 otherwise. Suggestions are clipped here, before anything
    looks at them: tau to [tau/5, 5 tau] and never past the end of the
    interval, m to [-25%, +33%] of its current value and [m_min, m_max].

    Parameters:
      ctrl -- the StepController; its q and kappa are updated.
      omega -- the scaled error of the attempt.
      epsilon -- the error estimate of the attempt.
      state -- the KrylovState the attempt used.
      t_remaining -- how much of the interval is left after this attempt.

    Returns:
      a tuple (tau_new, m_new).
    """
    tau = ctrl.tau
    m = ctrl.m

    if state.happy:
        return min(tau, t_remaining), m

    ctrl.q = _estimate_order(ctrl, epsilon, m)
    ctrl.kappa = _estimate_kappa(ctrl, omega, m)

    if state.j >= ctrl.m_max:
        if omega > DELTA:
            tau_new = tau * (GAMMA_MMAX / omega) ** (1.0 / ctrl.q)
            tau_new = min(t_remaining, max(tau / TAU_SHRINK, tau_new))
            return tau_new, state.j

        if omega == 0:
            tau_new = TAU_GROW * tau
        else:
            tau_new = tau * (GAMMA / omega) ** (1.0 / (ctrl.q + 1.0))
        return _clip_tau(tau, tau_new, t_remaining), m

    if omega == 0:
        m_new = 0
    else:
        m_new = int(math.ceil(m + math.log(omega / GAMMA) /
                math.log(ctrl.kappa)))
    return min(tau, t_remaining), _clip_m(m, m_new, ctrl.m_min, ctrl.m_max)


def cost_iop(m, n, p, nnz):
    """
    Operation count of m IOP steps on the augmented matrix.
    """
    size = n + p
    return m * (2 * nnz + (2 * p - 1) * n + p) + 8 * size - 4 * size + \
            3 * size * m


def cost_exp(n_mult, m, p):
    """
    Operation count of a dense exponential of order m + p that used
    n_mult matrix products.
    """
    size = m + p
    return n_mult * (2 * size - 1) * size ** 2


def cost_model(m, tau, t_remaining, n, p, nnz, n_mult):
    """
    Lower bound on the cost of finishing the interval with substeps of
    length tau and Krylov size m.
    """
    steps = math.ceil(t_remaining / tau)
    return steps * (cost_iop(m, n, p, nnz) + cost_exp(n_mult, m, p))


def compare_scenarios(tau, tau_new, m, m_new, t_remaining, n, p, nnz,
        n_mult):
    """
    Compares keeping m and moving to tau_new (scenario A) with keeping
    tau and moving to m_new (scenario B).

    Returns:
      a dictionary with the two costs and the name of the cheaper one.
    """
    if t_remaining <= 0:
        return {"cost_a": 0, "cost_b": 0, "cheaper": "B"}
    cost_a = cost_model(m, tau_new, t_remaining, n, p, nnz, n_mult)
    cost_b = cost_model(m_new, tau, t_remaining, n, p, nnz, n_mult)
    if cost_a < cost_b:
        cheaper = "A"
    else:
        cheaper = "B"
    return {"cost_a": cost_a, "cost_b": cost_b, "cheaper": cheaper}


def record_outputs(T, state, F, beta, w_store, ell, t_now, t_next, n,
        task):
    """
    Writes the results of an accepted substep covering [t_now, t_next].

    For Task I, every output time strictly inside the substep gets its
    own dense exponential of H_j over T_k - t_now. The carried solution,
    which always lives in row ell of w_store, is then advanced with the
    full substep exponential F. If the substep ends exactly on the next
    output time, that row is final and the carried solution moves on to
    the following row.

    Returns:
      a tuple (extra_exps, ell) with the number of additional dense
      exponentials computed and the new output cursor.
    """
    j = state.j
    basis = state.V[:j, :n].T
    extra_exps = 0
    last = len(T) - 1

    if task == TASK_I:
        inside = 0
        for k in range(ell, len(T)):
            if T[k] < t_next:
                inside += 1

        if inside > 0:
            for k in range(inside):
                F2 = expm(state.H[:j, :j], T[ell + k] - t_now)[0]
                w_store[ell + k] = beta * (basis @ F2[:, 0])
                extra_exps += 1
            ell += inside

    w_store[ell] = beta * (basis @ F[:j, 0])

    if ell < last and T[ell] == t_next:
        w_store[ell + 1] = w_store[ell]
        ell += 1

    return extra_exps, ell


def solve(request):
    """
    Runs the adaptive Krylov solver on a PhiRequest.

    Returns:
      a SolveResult.

    Raises:
      RequestError if the request is invalid.
      ConvergenceError if the substep budget runs out.
      DomainError if the operator produces non-finite values.
    """
    request.validate()
    system = build_augmented(request.operator, request.vectors)
    n = system.n
    p = system.p

    T = request.T
    t_end = T[-1]
    tol = request.tol

    w_store = numpy.zeros((len(T), n))
    w_store[0] = system.b0

    # a Krylov space never grows past the augmented dimension
    m_max = min(request.m_max, system.size)
    m_min = min(request.m_min, m_max)
    m = max(m_min, min(request.m_init, m_max))
    ctrl = StepController(t_end, m, m_min, m_max)
    state = KrylovState(system.size, m_max)

    stats = {
        "substeps": 0,
        "rejections": 0,
        "matvecs": 0,
        "dense_exp_calls": 0,
        "krylov_steps": 0,
        "exp_mults": 0,
        "error_estimate": 0.0,
    }

    t_now = 0.0
    ell = 0
    attempts = 0
    fresh = True
    beta = 0.0
    omega = 0.0

    while t_now < t_end:
        if attempts >= request.max_substeps:
            diagnostics = {
                "t_now": t_now, "t_end": t_end, "tau": ctrl.tau,
                "m": ctrl.m, "substeps": stats["substeps"],
                "rejections": stats["rejections"], "omega": omega,
            }
            log("kiops gave up after %d attempts at t = %g of %g" % (
                    attempts, t_now, t_end))
            raise ConvergenceError("no convergence within %d substeps" % (
                    request.max_substeps), diagnostics)
        attempts += 1

        if fresh:
            beta = state.start(system.start_vector(w_store[ell], t_now))
            fresh = False
            if beta == 0.0:
                # zero start vector, every remaining output is zero
                w_store[ell:] = 0.0
                break

        if not state.happy and state.j < ctrl.m:
            before = state.j
            iop_extend(system, state, ctrl.m)
            stats["krylov_steps"] += state.j - before

        tau = ctrl.tau
        step = projected_step(state, tau, beta)
        stats["dense_exp_calls"] += 1
        stats["exp_mults"] += step.n_mult

        omega, accept = acceptance(step.epsilon, tau, t_end, tol)

        t_next = t_now + tau
        if t_end - t_next <= 4 * numpy.spacing(t_end):
            t_next = t_end
        if accept:
            remaining = t_end - t_next
        else:
            remaining = t_end - t_now

        tau_new, m_new = suggest_parameters(ctrl, omega, step.epsilon, state,
                remaining)
        debug("kiops t=%.6g tau=%.3g m=%d j=%d omega=%.3g -> tau=%.3g m=%d"
                % (t_now, tau, ctrl.m, state.j, omega, tau_new, m_new))

        if accept:
            extra, ell = record_outputs(T, state, step.F, beta, w_store, ell,
                    t_now, t_next, n, request.task)
            stats["dense_exp_calls"] += extra
            stats["substeps"] += 1
            stats["error_estimate"] += step.epsilon
            t_now = t_next
            fresh = True
            ctrl.clear_history()
        else:
            if tau_new != tau and m_new == ctrl.m:
                scenarios = compare_scenarios(tau, tau_new, ctrl.m, m_new,
                        remaining, n, p, system.nnz(), step.n_mult)
                debug("kiops rejected, cost A %(cost_a)g, B %(cost_b)g" %
                        scenarios)
            ctrl.remember_rejection(omega, step.epsilon, tau, ctrl.m)
            stats["rejections"] += 1

        ctrl.tau = tau_new
        ctrl.m = m_new

    stats["matvecs"] = state.matvecs

    if request.task == TASK_I and request.q > 0:
        for k in range(len(T)):
            w_store[k] /= T[k] ** request.q

    return SolveResult(w_store, ctrl.m, stats)


def kiops(T, operator, vectors, tol=DEFAULT_TOL, m_init=DEFAULT_M_INIT,
        m_min=DEFAULT_M_MIN, m_max=DEFAULT_M_MAX, task=TASK_II,
        max_substeps=DEFAULT_MAX_SUBSTEPS):
    """
    Evaluates phi-function linear combinations with the adaptive Krylov
    solver.

    Parameters:
      T -- the output times, strictly increasing and positive. Task II
           takes a single time.
      operator -- the matrix A: a LinearOperator, dense array, scipy
                  sparse matrix or scipy LinearOperator.
      vectors -- the list [b_p, ..., b_1, b_0]. Note the order: b_0 comes
                 last.
      tol -- the relative tolerance.
      m_init -- the first Krylov size to try, e.g. final_m of a previous
                solve.
      m_min, m_max -- bounds on the Krylov size.
      task -- TASK_I or TASK_II.
      max_substeps -- the number of attempts before giving up.

    Returns:
      a SolveResult whose outputs row l holds the result for T[l].
    """
    request = PhiRequest(T, operator, vectors, tol=tol, m_init=m_init,
            m_min=m_min, m_max=m_max, task=task, max_substeps=max_substeps)
    return solve(request)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
