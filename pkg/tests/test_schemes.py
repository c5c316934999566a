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

import math

import numpy
import pytest
import scipy.linalg
import scipy.special

from libphikrylov.errors import DomainError, RequestError, StageError
from libphikrylov.errors import UnknownNameError
from libphikrylov.phioracle import phi_dense
from libphikrylov.problem import OdeProblem
from libphikrylov.problems import make_problem
from libphikrylov.scheme import STAT_KEYS, remainder
from libphikrylov.schemes import SCHEMES, get_scheme
from libphikrylov.schemes import epirk5p1 as p1

ALL_SCHEMES = sorted(SCHEMES)


def dense_jacobian(problem, u):
    identity = numpy.eye(problem.dim)
    return numpy.column_stack([problem.jacobian_action(u, identity[:, k])
            for k in range(problem.dim)])


class NaiveStep(object):
    """
    Evaluates every phi term of a step separately with the dense oracle.
    """

    def __init__(self, problem, u, h):
        self.problem = problem
        self.u = u
        self.h = h
        self.f_n = problem.f(u)
        self.hJ = h * dense_jacobian(problem, u)
        self.hf = h * self.f_n

    def phi(self, g, k, b):
        return phi_dense(self.hJ, g, k) @ b

    def r(self, U):
        return self.h * remainder(self.problem.f,
                self.problem.jacobian_action, self.u, self.f_n, U)

    def epirk4s3(self, c):
        u, hf = self.u, self.hf
        U2 = u + c["g2"] * self.phi(c["g2"], 1, hf)
        U3 = u + c["g3"] * self.phi(c["g3"], 1, hf)
        r2 = self.r(U2)
        d = self.r(U3) - 2.0 * r2
        return u + self.phi(1.0, 1, hf) + \
                self.phi(1.0, 3, c["p3_r2"] * r2 + c["p3_d"] * d) + \
                self.phi(1.0, 4, c["p4_r2"] * r2 + c["p4_d"] * d)

    def epirk4s3a(self, c):
        u, hf = self.u, self.hf
        U2 = u + c["g2"] * self.phi(c["g2"], 1, hf)
        U3 = u + c["g3"] * self.phi(c["g3"], 1, hf)
        r2 = self.r(U2)
        r3 = self.r(U3)
        return u + self.phi(1.0, 1, hf) + \
                self.phi(1.0, 3, c["p3_r2"] * r2 + c["p3_r3"] * r3) + \
                self.phi(1.0, 4, c["p4_r2"] * r2 + c["p4_r3"] * r3)

    def exprb5s3(self, c):
        u, hf = self.u, self.hf
        U2 = u + c["g2"] * self.phi(c["g2"], 1, hf)
        r2 = self.r(U2)
        U3 = u + c["g3"] * self.phi(c["g3"], 1, hf) + \
                c["u3_a"] * self.phi(c["g2"], 3, r2) + \
                c["u3_b"] * self.phi(c["g3"], 3, r2)
        r3 = self.r(U3)
        return u + self.phi(1.0, 1, hf) + \
                self.phi(1.0, 3, c["p3_r2"] * r2 + c["p3_r3"] * r3) + \
                self.phi(1.0, 4, c["p4_r2"] * r2 + c["p4_r3"] * r3)

    def epirk5p1(self, c):
        u, hf = self.u, self.hf
        U2 = u + p1.ALPHA_11 * self.phi(p1.G_11, 1, hf)
        r2 = self.r(U2)
        U3 = u + p1.ALPHA_21 * self.phi(p1.G_21, 1, hf) + \
                p1.ALPHA_22 * self.phi(p1.G_22, 1, r2)
        d = self.r(U3) - 2.0 * r2
        return u + p1.BETA_1 * self.phi(p1.G_31, 1, hf) + \
                p1.BETA_2 * self.phi(p1.G_32, 1, r2) + \
                p1.BETA_3 * self.phi(p1.G_33, 3, d)


def test_remainder_of_square():
    f = lambda u: u * u
    jac = lambda u, x: 2.0 * u * x
    u_n = numpy.array([0.5, -1.0, 2.0])
    h = 0.1
    r = remainder(f, jac, u_n, f(u_n), u_n + h)
    numpy.testing.assert_allclose(r, h * h, rtol=1e-12)


def test_remainder_of_linear_function(rng, diffusion):
    A = diffusion(6)
    u_n = rng.standard_normal(6)
    u = rng.standard_normal(6)
    r = remainder(lambda v: A @ v, lambda v, x: A @ x, u_n, A @ u_n, u)
    numpy.testing.assert_allclose(r, 0.0, atol=1e-14)


class TestRegistry(object):

    def test_names(self):
        assert ALL_SCHEMES == ["epirk4s3", "epirk4s3a", "epirk5p1",
                "exprb5s3"]
        with pytest.raises(UnknownNameError):
            get_scheme("rk4")

    @pytest.mark.parametrize("name, order, calls", [("epirk4s3", 4, 2),
            ("epirk4s3a", 4, 2), ("exprb5s3", 5, 3), ("epirk5p1", 5, 3)])
    def test_shape(self, name, order, calls):
        scheme = get_scheme(name)
        assert scheme.scheme_name == name
        assert scheme.order == order
        assert scheme.calls == calls

    def test_coefficients(self):
        c = get_scheme("epirk4s3").tableau
        assert (c["g2"], c["g3"]) == (1.0 / 8.0, 1.0 / 9.0)
        assert (c["p3_r2"], c["p4_r2"]) == (1892.0, -42336.0)
        assert (c["p3_d"], c["p4_d"]) == (1458.0, -34992.0)

        c = get_scheme("epirk4s3a").tableau
        assert (c["g2"], c["g3"]) == (0.5, 2.0 / 3.0)
        assert (c["p3_r2"], c["p4_r2"]) == (32.0, -144.0)
        assert (c["p3_r3"], c["p4_r3"]) == (-13.5, 81.0)

        c = get_scheme("exprb5s3").tableau
        assert (c["g2"], c["g3"]) == (0.5, 0.9)
        assert (c["u3_a"], c["u3_b"]) == (27.0 / 25.0, 729.0 / 125.0)
        assert (c["p3_r2"], c["p4_r2"]) == (18.0, -60.0)
        assert (c["p3_r3"], c["p4_r3"]) == (-250.0 / 81.0, 500.0 / 27.0)

        c = get_scheme("epirk5p1").tableau
        assert c["alpha"][0][0] == pytest.approx(0.3512959269505819)
        assert c["beta"][2] == pytest.approx(2.271459926542262)
        assert c["g"][2][1] == pytest.approx(0.71111109536436687)
        assert c["g"][1][1] == c["g"][2][0] == 1.0


class TestLinearProblems(object):

    @pytest.mark.parametrize("name", ALL_SCHEMES)
    def test_reduces_to_exponential(self, rng, diffusion, linear_problem,
            name):
        A = diffusion(20, 20.0)
        u0 = rng.standard_normal(20)
        problem = linear_problem(A, u0, tend=1.0)
        result = get_scheme(name).integrate(problem, 0.1, 1e-12)
        expected = scipy.linalg.expm(A) @ u0
        assert numpy.abs(result.u - expected).max() <= \
                1e-9 * numpy.abs(expected).max()
        assert result.steps == 10
        assert result.t == 1.0

    @pytest.mark.parametrize("name", ALL_SCHEMES)
    def test_scalar_decay(self, linear_problem, name):
        problem = linear_problem([[-1.0]], [1.0])
        result = get_scheme(name).integrate(problem, 0.25, 1e-12)
        assert result.u[0] == pytest.approx(math.exp(-1.0), rel=1e-9)


class TestStep(object):

    @pytest.mark.parametrize("name", ALL_SCHEMES)
    def test_grouped_calls_match_separate_terms(self, name):
        problem = make_problem("semilinear", n=12)
        u = problem.exact(0.3)
        h = 0.1
        scheme = get_scheme(name)
        u_next, hints = scheme.step(problem, u, h, 1e-13)

        naive = getattr(NaiveStep(problem, u, h), name)(scheme.tableau)
        assert numpy.abs(u_next - naive).max() <= \
                1e-9 * numpy.abs(naive).max()
        assert len(hints) == scheme.calls

    @pytest.mark.parametrize("name", ALL_SCHEMES)
    def test_stats_and_hints(self, name):
        problem = make_problem("allen-cahn", n=8, config={"tend": 0.1})
        scheme = get_scheme(name)
        stats = dict((key, 0) for key in STAT_KEYS)
        _, hints = scheme.step(problem, problem.u0, 0.05, 1e-8, m_hint=12,
                stats=stats)
        assert stats["kiops_calls"] == scheme.calls
        assert stats["matvecs"] == stats["krylov_steps"] > 0
        assert len(hints) == scheme.calls
        assert all(isinstance(m, int) and m >= 1 for m in hints)

        # hints from one step warm start the next
        u_next, _ = scheme.step(problem, problem.u0, 0.05, 1e-8, hints)
        assert numpy.all(numpy.isfinite(u_next))

    def test_hint_count_is_checked(self):
        problem = make_problem("semilinear", n=10)
        with pytest.raises(RequestError):
            get_scheme("epirk4s3").step(problem, problem.u0, 0.1, 1e-8,
                    m_hint=[10, 10, 10])

    def test_step_size_is_checked(self):
        problem = make_problem("semilinear", n=10)
        with pytest.raises(RequestError):
            get_scheme("epirk4s3").step(problem, problem.u0, 0.0, 1e-8)

    def test_stage_failure(self, linear_problem):

        class Broken(linear_problem):
            def jacobian_action(self, u, x):
                return numpy.full_like(x, numpy.nan)

        problem = Broken(-numpy.eye(3), numpy.ones(3))
        with pytest.raises(StageError) as info:
            get_scheme("epirk4s3").integrate(problem, 0.5, 1e-8)
        error = info.value
        assert error.scheme == "epirk4s3"
        assert error.stage == "U2,U3"
        assert error.step_index == 0
        assert isinstance(error.__cause__, DomainError)


class TestIntegrate(object):

    def test_step_must_divide_interval(self):
        problem = make_problem("semilinear", n=10)
        with pytest.raises(RequestError):
            get_scheme("epirk4s3").integrate(problem, 0.3, 1e-8)

    def test_near_divisor_is_adjusted(self):
        problem = make_problem("semilinear", n=10, config={"tend": 0.5})
        result = get_scheme("epirk4s3a").integrate(problem, 0.1001, 1e-10)
        assert result.steps == 5
        assert result.h == pytest.approx(0.1, rel=1e-14)
        assert result.u[-1] == pytest.approx(0.5, rel=1e-8)
        assert result.average_m() > 0

    @pytest.mark.parametrize("name", ALL_SCHEMES)
    def test_semilinear_accuracy(self, name):
        problem = make_problem("semilinear", n=40)
        result = get_scheme(name).integrate(problem, 0.1, 1e-12)
        exact = problem.exact(problem.tend)
        error = numpy.abs(result.u - exact).max()
        assert error <= 1e-5 * numpy.abs(exact).max()


class JacobiElliptic(OdeProblem):
    """
    u' = (u2 u3, -u1 u3, -k u1 u2) from (0, 1, 1), solved by the Jacobi
    elliptic functions (sn, cn, dn) with parameter k. Not stiff.
    """

    def __init__(self, k=0.51, tend=2.0):
        super(JacobiElliptic, self).__init__()
        self.problem_name = "jacobi-elliptic"
        self.k = k
        self.dim = 3
        self.n_physical = 3
        self.u0 = numpy.array([0.0, 1.0, 1.0])
        self.tend = tend

    def f(self, u):
        return numpy.array([u[1] * u[2], -u[0] * u[2], -self.k * u[0] * u[1]])

    def jacobian_action(self, u, x):
        return numpy.array([u[2] * x[1] + u[1] * x[2],
                -u[2] * x[0] - u[0] * x[2],
                -self.k * (u[1] * x[0] + u[0] * x[1])])

    def exact(self, t):
        sn, cn, dn, _ = scipy.special.ellipj(t, self.k)
        return numpy.array([sn, cn, dn])


def observed_order(scheme, problem, steps, tol):
    exact = problem.exact(problem.tend)
    errors = []
    for h in steps:
        result = scheme.integrate(problem, h, tol)
        errors.append(numpy.abs(problem.physical(result.u) -
                problem.physical(exact)).max())
    assert all(fine < coarse for coarse, fine in zip(errors, errors[1:]))
    return numpy.polyfit(numpy.log(steps), numpy.log(errors), 1)[0]


def test_elliptic_exact_solution():
    problem = JacobiElliptic()
    t, dt = 0.7, 1e-5
    derivative = (problem.exact(t + dt) - problem.exact(t - dt)) / (2 * dt)
    numpy.testing.assert_allclose(derivative, problem.f(problem.exact(t)),
            rtol=1e-8, atol=1e-9)


@pytest.mark.parametrize("name", ALL_SCHEMES)
def test_classical_order(name):
    scheme = get_scheme(name)
    slope = observed_order(scheme, JacobiElliptic(),
            (0.2, 0.1, 0.05, 0.025), 1e-14)
    if scheme.order == 4:
        assert slope == pytest.approx(4.0, abs=0.3)
    else:
        assert slope == pytest.approx(5.0, abs=0.4)


# epirk5p1 only meets the classical order conditions, so on the stiff
# semilinear problem it drops to about third order
@pytest.mark.slow
@pytest.mark.parametrize("name, expected, slack", [("epirk4s3", 4.0, 0.3),
        ("epirk4s3a", 4.0, 0.3), ("exprb5s3", 5.0, 0.4),
        ("epirk5p1", 3.0, 0.4)])
def test_stiff_order(name, expected, slack):
    problem = make_problem("semilinear", n=200)
    slope = observed_order(get_scheme(name), problem,
            (0.1, 0.05, 0.025, 0.0125), 1e-14)
    assert slope == pytest.approx(expected, abs=slack)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
