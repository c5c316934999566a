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
from libphikrylov.schemes.epirk4s3 import Epirk4s3
from libphikrylov.schemes.epirk4s3a import Epirk4s3A
from libphikrylov.schemes.epirk5p1 import Epirk5P1
from libphikrylov.schemes.exprb5s3 import Exprb5s3

__all__ = ['epirk4s3', 'epirk4s3a', 'epirk5p1', 'exprb5s3']

SCHEMES = {
    "epirk4s3": Epirk4s3,
    "epirk4s3a": Epirk4s3A,
    "epirk5p1": Epirk5P1,
    "exprb5s3": Exprb5s3,
}


def get_scheme(name):
    """
    Returns a new instance of the scheme with the given id.

    Raises:
      UnknownNameError if name is not a known scheme.
    """
    if name not in SCHEMES:
        raise UnknownNameError("unknown scheme %r, expected one of %s" % (
                name, ", ".join(sorted(SCHEMES))))
    return SCHEMES[name]()

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
