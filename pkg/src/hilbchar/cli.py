"""``hilbchar`` command line.

Exit status: 0 on success, 1 when ``verify`` finds a failing identity, 2 on
usage errors (bad flags, out-of-range parameters, the degree cap, I/O).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .cycles import ch_standard, grothendieck_matrix
from .hilb import catalan_qt, fake_degree, graded_module_series, procesi_series
from .limits import DegreeCapError, check_degree
from .macdonald import kostka_macdonald
from .partitions import partitions_of
from .serialize import (
    CycleReport,
    FakeDegreeTable,
    PartitionList,
    PolyResult,
    SeriesResult,
    emit,
)
from .symfun import kostka_classical
from .verify import VerifyParameterError, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive")
        return v

    return conv


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("json", "csv"), default="json")
    common.add_argument("--path", help="write here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")

    parser = argparse.ArgumentParser(prog="hilbchar", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_n(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=_positive("--n"), required=True)
        return p

    with_n("partitions", "partitions of n in decreasing lex order")
    with_n("kostka", "classical Kostka matrix")
    with_n("macdonald-kostka", "(q, t)-Kostka table")
    for name, help_ in (("catalan", "q,t-Catalan series"), ("procesi", "twisted Procesi series")):
        p = with_n(name, help_)
        p.add_argument("--k", type=_positive("--k"), default=1)
    with_n("fake-degrees", "fake degrees f_mu(v)")
    p = with_n("series", "graded module series")
    p.add_argument("--k", type=_nonneg, default=1)
    p.add_argument("--variant", choices=("P1", "P2"), default="P1")
    p.add_argument("--order", type=_nonneg, default=20, help="truncation degree of the expansion")
    with_n("char-cycles", "characteristic cycles of standard modules")

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--k-max", type=int, default=3)
    return parser


def _compute(args):
    cmd = args.command
    if cmd != "verify":
        check_degree(args.n)
    if cmd == "partitions":
        return PartitionList(args.n, tuple(partitions_of(args.n)))
    if cmd == "kostka":
        return kostka_classical(args.n)
    if cmd == "macdonald-kostka":
        return kostka_macdonald(args.n)
    if cmd == "catalan":
        return PolyResult("catalan", args.n, args.k, catalan_qt(args.n, args.k))
    if cmd == "procesi":
        return PolyResult("procesi", args.n, args.k, procesi_series(args.n, args.k))
    if cmd == "fake-degrees":
        return FakeDegreeTable(args.n, {mu: fake_degree(mu) for mu in partitions_of(args.n)})
    if cmd == "series":
        return SeriesResult(graded_module_series(args.n, args.k, args.variant), args.order)
    if cmd == "char-cycles":
        m = grothendieck_matrix(args.n)
        return CycleReport(args.n, m, {mu: ch_standard(mu) for mu in m.order})
    if cmd == "verify":
        return run_verify(args.n_max, args.k_max, seed=args.seed)
    raise AssertionError(cmd)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = _compute(args)
        text = emit(result, args.out, args.path)
    except (DegreeCapError, VerifyParameterError, ValueError, OSError) as exc:
        print(f"hilbchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.path is None:
        sys.stdout.write(text)
    if args.command == "verify":
        print(f"verify: {result.passed} passed, {result.failed} failed", file=sys.stderr)
        return result.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
