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
Command line harness for convergence sweeps.

    bench --problem semilinear --scheme epirk4s3 --n 200 \
          --h 0.1,0.05,0.025 --tol 1e-14 --out semilinear.csv

Exit status is 0 when every row succeeded, 1 when nothing could be run
or written, and 2 when some rows failed.
"""

import argparse
import logging
import sys

from libphikrylov.logger import set_verbosity, warn
from libphikrylov.sweep import sweep_failed
from phikrylov.phikrylov import PhiKrylov

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARTIAL = 2


def _float_list(text):
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated numbers, "
                "got %r" % (text))


def _int_list(text):
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, "
                "got %r" % (text))


def _name_list(text):
    return [item.strip() for item in text.split(",") if item.strip()]


def build_parser():
    parser = argparse.ArgumentParser(prog="bench",
            description="Run an exponential integrator convergence sweep "
                    "and write the results as CSV.")
    parser.add_argument("--problem", required=True,
            help="problem id: allen-cahn, adr, brusselator, gray-scott or "
                    "semilinear")
    parser.add_argument("--scheme", required=True, type=_name_list,
            help="scheme id, or a comma separated list of them")
    parser.add_argument("--n", type=_int_list, default=None,
            help="grid points per dimension, or a comma separated list")
    parser.add_argument("--h", required=True, type=_float_list,
            help="comma separated list of step sizes")
    parser.add_argument("--tol", type=float, default=1e-14,
            help="Krylov tolerance (default 1e-14)")
    parser.add_argument("--out", required=True,
            help="path of the CSV file to write")
    parser.add_argument("--reference", choices=["exact", "self"],
            default=None, help="reference solution (default: exact when "
                    "the problem has one, self otherwise)")
    parser.add_argument("--tend", type=float, default=None,
            help="override the end of the integration interval")
    parser.add_argument("--threads", type=int, default=None,
            help="worker threads, capped by PHIKRYLOV_THREADS")
    parser.add_argument("-q", "--quiet", action="store_true",
            help="only report failures")
    parser.add_argument("--debug", action="store_true",
            help="log every Krylov substep")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)

    if args.debug:
        set_verbosity(logging.DEBUG)
    elif args.quiet:
        set_verbosity(logging.WARNING)
    else:
        set_verbosity(logging.INFO)

    config = {
        "problem": args.problem,
        "schemes": args.scheme,
        "n": args.n,
        "h": args.h,
        "tol": args.tol,
        "reference": args.reference,
        "tend": args.tend,
        "threads": args.threads,
    }

    phik = PhiKrylov()
    records = phik.run_sweep(config)
    if records is None:
        sys.stderr.write("bench: invalid sweep configuration\n")
        return EXIT_ERROR

    if phik.emit_csv(records, args.out) is None:
        sys.stderr.write("bench: could not write %s\n" % (args.out))
        return EXIT_ERROR

    if sweep_failed(records):
        failed = [r for r in records if r.failed]
        warn("%d of %d sweep rows failed" % (len(failed), len(records)))
        for record in failed:
            sys.stderr.write("bench: %s/%s n=%s h=%r failed: %s\n" % (
                    record.problem, record.scheme, record.n, record.h,
                    record.reason))
        return EXIT_PARTIAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :
