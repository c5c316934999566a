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


class Epirk4s3A(EpirkScheme):
    """
    Stiffly accurate fourth order EPIRK scheme with stage nodes 1/2 and
    2/3. Same call pattern as epirk4s3, but r(U3) enters the update on
    its own rather than as r(U3) - 2 r(U2).
    """

    def __init__(self):
        super(Epirk4s3A, self).__init__()
        self.scheme_name = "epirk4s3a"
        self.order = 4
        self.calls = 2
        self.tableau = {
            "g2": 1.0 / 2.0,
            "g3": 2.0 / 3.0,
            "p3_r2": 32.0,
            "p4_r2": -144.0,
            "p3_r3": -27.0 / 2.0,
            "p4_r3": 81.0,
        }

    def _advance(self, ctx, u_n, f_n, h):
        c = self.tableau
        hf = h * f_n

        stages = ctx.phi_single(0, "U2,U3", [c["g2"], c["g3"]], 1, hf)
        U2 = u_n + c["g2"] * stages[0]
        U3 = u_n + c["g3"] * stages[1]

        r2 = h * ctx.remainder(U2)
        r3 = h * ctx.remainder(U3)

        b3 = c["p3_r2"] * r2 + c["p3_r3"] * r3
        b4 = c["p4_r2"] * r2 + c["p4_r3"] * r3
        return u_n + ctx.phi_final(1, hf, b3, b4)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
