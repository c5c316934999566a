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

try:
    from setuptools import setup, find_packages
except ImportError:
    from distutils.core import setup

requires = [
    'numpy>=1.17',
    'scipy>=1.4',
    ]

tests_require = [
    'pytest>=6.0',
    ]

setup(
    name='phikrylov',
    description='Adaptive Krylov phi-function solver and exponential '
            'integrators for stiff ODEs.',
    packages = find_packages(exclude=['tests', 'examples', 'examples.*']),
    install_requires=requires,
    tests_require=tests_require,
    extras_require={'test': tests_require},
    entry_points={
        'console_scripts': [
            'bench = phikrylov.bench:main',
        ],
    },
    python_requires='>=3.6',
    version='1.0',
)
