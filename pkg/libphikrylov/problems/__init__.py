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

from libphikrylov.errors import UnknownNameError
from libphikrylov.problems.adr import AdvectionDiffusionReaction
from libphikrylov.problems.allencahn import AllenCahn
from libphikrylov.problems.brusselator import Brusselator
from libphikrylov.problems.grayscott import GrayScott
from libphikrylov.problems.semilinear import SemilinearParabolic

__all__ = ['adr', 'allencahn', 'brusselator', 'grayscott', 'semilinear']

PROBLEMS = {
    "allen-cahn": AllenCahn,
    "adr": AdvectionDiffusionReaction,
    "brusselator": Brusselator,
    "gray-scott": GrayScott,
    "semilinear": SemilinearParabolic,
}


def make_problem(name, n=None, config=None):
    """
    Builds a benchmark problem by id.

    Parameters:
      name -- one of "allen-cahn", "adr", "brusselator", "gray-scott" or
              "semilinear".
      n -- the number of grid points per dimension. Overrides config.
      config -- an optional dictionary of problem settings: n, tend and
                any of the problem's physical constants.

    Returns:
      a new OdeProblem.

    Raises:
      UnknownNameError if name is not a known problem.
      DimensionError if n < 8.
    """
    if name not in PROBLEMS:
        raise UnknownNameError("unknown problem %r, expected one of %s" % (
                name, ", ".join(sorted(PROBLEMS))))

    settings = dict(config or {})
    if n is not None:
        settings["n"] = n
    return PROBLEMS[name](settings)

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
