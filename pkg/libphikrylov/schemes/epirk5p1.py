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

ALPHA_11 = 0.3512959269505819
ALPHA_21 = 0.8440547201165712
ALPHA_22 = 1.690589160956896
BETA_1 = 1.0
BETA_2 = 1.272712731735689
BETA_3 = 2.271459926542262

G_11 = 0.3512959269505819
G_21 = 0.8440547201165712
G_22 = 1.0
G_31 = 1.0
G_32 = 0.71111109536436687
G_33 = 0.6237811195337149


class Epirk5P1(EpirkScheme):
    """
    Classical (not stiffly accurate) fifth order EPIRK scheme:

        U2 = u_n + a11 phi_1(g11 h J) h f_n
        U3 = u_n + a21 phi_1(g21 h J) h f_n + a22 phi_1(g22 h J) h r(U2)
        u_{n+1} = u_n + b1 phi_1(g31 h J) h f_n + b2 phi_1(g32 h J) h r(U2)
                  + b3 phi_3(g33 h J) h (r(U3) - 2 r(U2))

    Call 0 evaluates every phi_1 term on h f_n at T = [g11, g21, g31],
    call 1 both phi_1 terms on h r(U2) at T = [g32, g22], and call 2 the
    phi_3 term at g33.
    """

    def __init__(self):
        super(Epirk5P1, self).__init__()
        self.scheme_name = "epirk5p1"
        self.order = 5
        self.calls = 3
        self.tableau = {
            "alpha": [[ALPHA_11], [ALPHA_21, ALPHA_22]],
            "beta": [BETA_1, BETA_2, BETA_3],
            "g": [[G_11], [G_21, G_22], [G_31, G_32, G_33]],
        }

    def _advance(self, ctx, u_n, f_n, h):
        hf = h * f_n

        fterms = ctx.phi_single(0, "U2,U3,u_next", [G_11, G_21, G_31], 1, hf)
        U2 = u_n + ALPHA_11 * fterms[0]
        r2 = h * ctx.remainder(U2)

        # g32 < g22, so the u_{n+1} term comes first
        rterms = ctx.phi_single(1, "U3,u_next", [G_32, G_22], 1, r2)
        U3 = u_n + ALPHA_21 * fterms[1] + ALPHA_22 * rterms[1]
        d = h * ctx.remainder(U3) - 2.0 * r2

        cubic = ctx.phi_single(2, "u_next", [G_33], 3, d)
        return u_n + BETA_1 * fterms[2] + BETA_2 * rterms[0] + \
                BETA_3 * cubic[0]

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
