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


class Epirk4s3(EpirkScheme):
    """
    Stiffly accurate fourth order EPIRK scheme with stage nodes 1/8 and
    1/9:

        U2 = u_n + 1/8 phi_1(h J / 8) h f_n
        U3 = u_n + 1/9 phi_1(h J / 9) h f_n
        u_{n+1} = u_n + phi_1(h J) h f_n
                  + (1892 phi_3 - 42336 phi_4)(h J) h r(U2)
                  + (1458 phi_3 - 34992 phi_4)(h J) h (r(U3) - 2 r(U2))

    Call 0 evaluates both stage terms at T = [1/9, 1/8]; call 1 evaluates
    the whole update at T = 1.
    """

    def __init__(self):
        super(Epirk4s3, self).__init__()
        self.scheme_name = "epirk4s3"
        self.order = 4
        self.calls = 2
        self.tableau = {
            "g2": 1.0 / 8.0,
            "g3": 1.0 / 9.0,
            "p3_r2": 1892.0,
            "p4_r2": -42336.0,
            "p3_d": 1458.0,
            "p4_d": -34992.0,
        }

    def _advance(self, ctx, u_n, f_n, h):
        c = self.tableau
        hf = h * f_n

        stages = ctx.phi_single(0, "U2,U3", [c["g3"], c["g2"]], 1, hf)
        U3 = u_n + c["g3"] * stages[0]
        U2 = u_n + c["g2"] * stages[1]

        r2 = h * ctx.remainder(U2)
        d = h * ctx.remainder(U3) - 2.0 * r2

        b3 = c["p3_r2"] * r2 + c["p3_d"] * d
        b4 = c["p4_r2"] * r2 + c["p4_d"] * d
        return u_n + ctx.phi_final(1, hf, b3, b4)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
