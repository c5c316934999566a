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

__all__ = ['augmented', 'cache', 'denselinalg', 'errors', 'grid', 'iop',
           'kiops', 'logger', 'operator', 'phioracle', 'problem', 'scheme',
           'problems', 'schemes', 'sweep']
