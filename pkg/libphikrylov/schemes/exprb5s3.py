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

from libphikrylov.scheme import EpirkScheme


class Exprb5s3(EpirkScheme):
    """
    Stiffly accurate fifth order exponential Rosenbrock scheme written in
    EPIRK form:

        U2 = u_n + 1/2 phi_1(h J / 2) h f_n
        U3 = u_n + 9/10 phi_1(9 h J / 10) h f_n
             + (27/25 phi_3(h J / 2) + 729/125 phi_3(9 h J / 10)) h r(U2)
        u_{n+1} = u_n + phi_1(h J) h f_n
                  + (18 phi_3 - 60 phi_4)(h J) h r(U2)
                  + (-250/81 phi_3 + 500/27 phi_4)(h J) h r(U3)

    Call 0 evaluates the phi_1 stage terms at T = [1/2, 9/10], call 1 the
    two phi_3 terms of U3 at the same times, and call 2 the update.
    """

    def __init__(self):
        super(Exprb5s3, self).__init__()
        self.scheme_name = "exprb5s3"
        self.order = 5
        self.calls = 3
        self.tableau = {
            "g2": 1.0 / 2.0,
            "g3": 9.0 / 10.0,
            "u3_a": 27.0 / 25.0,
            "u3_b": 729.0 / 125.0,
            "p3_r2": 18.0,
            "p4_r2": -60.0,
            "p3_r3": -250.0 / 81.0,
            "p4_r3": 500.0 / 27.0,
        }

    def _advance(self, ctx, u_n, f_n, h):
        c = self.tableau
        hf = h * f_n
        nodes = [c["g2"], c["g3"]]

        stages = ctx.phi_single(0, "U2,U3", nodes, 1, hf)
        U2 = u_n + c["g2"] * stages[0]
        r2 = h * ctx.remainder(U2)

        cubic = ctx.phi_single(1, "U3", nodes, 3, r2)
        U3 = u_n + c["g3"] * stages[1] + c["u3_a"] * cubic[0] + \
                c["u3_b"] * cubic[1]
        r3 = h * ctx.remainder(U3)

        b3 = c["p3_r2"] * r2 + c["p3_r3"] * r3
        b4 = c["p4_r2"] * r2 + c["p4_r3"] * r3
        return u_n + ctx.phi_final(2, hf, b3, b4)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
