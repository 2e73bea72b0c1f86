"""Command-line front end: solve a system and report solution counts, or run
the scaling benchmark families.

Exit codes: 0 success, 2 parse/usage error, 3 ideal not zero-dimensional,
4 internal oracle mismatch (a bug, never expected).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from . import linalg
from .groebner import GroebnerBasis, NotZeroDimensionalError, buchberger
from .parsing import ParseError, format_monomial, parse_system
from .poly import GREVLEX, ORDER_KINDS
from .quotient import HermiteReport, hermite_report
from .univariate import UnivariatePolynomial, from_multivariate, squarefree_part, sturm_count

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_ZERO_DIMENSIONAL = 3
EXIT_ORACLE_MISMATCH = 4


class OracleMismatchError(RuntimeError):
    """A cross-check disagreed with the main computation."""


@dataclass(frozen=True)
class RunConfiguration:
    """One solve invocation: exactly one input source plus output options."""

    source_path: str | None = None
    inline_polynomials: tuple[str, ...] = ()
    order_kind: str = GREVLEX
    json_output: bool = False
    print_matrix: bool = False
    cross_check: bool = False

    def __post_init__(self):
        if (self.source_path is None) == (not self.inline_polynomials):
            raise ValueError("exactly one input source required: FILE or --poly")
        if self.order_kind not in ORDER_KINDS:
            raise ValueError(f"unknown order {self.order_kind!r}")

    def read_text(self) -> str:
        if self.source_path is not None:
            return Path(self.source_path).read_text(encoding="utf-8")
        return "\n".join(self.inline_polynomials)


def _solve_text(text: str, kind: str) -> tuple[list[str], GroebnerBasis, HermiteReport]:
    variables, polys = parse_system(text, kind)
    basis = buchberger(polys, polys[0].order)
    return variables, basis, hermite_report(basis)


def _cross_check(variables: Sequence[str], basis: GroebnerBasis, report: HermiteReport) -> str | None:
    """Returns a description of the first mismatch, or None if all checks agree."""
    oracle = linalg.inertia_via_charpoly(report.form.rows())
    if (oracle.rank, oracle.signature) != (report.rank, report.signature):
        return (
            f"characteristic-polynomial inertia (rank {oracle.rank}, signature "
            f"{oracle.signature}) != congruence inertia (rank {report.rank}, "
            f"signature {report.signature})"
        )
    if len(variables) == 1:
        generator = from_multivariate(basis.generators[0])
        complex_count = squarefree_part(generator).degree
        real_count = sturm_count(generator)
        if (complex_count, real_count) != (report.complex_count, report.real_count):
            return (
                f"univariate oracle counts ({complex_count}, {real_count}) != "
                f"pipeline counts ({report.complex_count}, {report.real_count})"
            )
    return None


def _matrix_strings(report: HermiteReport) -> list[list[str]]:
    return [[str(value) for value in row] for row in report.form.entries]


def _emit_text(
    variables: Sequence[str], report: HermiteReport, print_matrix: bool, out: TextIO
) -> None:
    names = list(variables)
    basis_names = [format_monomial(m, names) for m in report.form.basis.monomials]
    print(f"variables: {', '.join(names)}", file=out)
    print(f"order: {report.form.basis.order.kind}", file=out)
    print(f"quotient dimension: {report.quotient_dimension}", file=out)
    print(f"basis: {', '.join(basis_names) if basis_names else '(empty)'}", file=out)
    if print_matrix:
        print("Hermite matrix:", file=out)
        for row in _matrix_strings(report):
            print(" ".join(row), file=out)
    print(f"number of complex solutions: {report.complex_count}", file=out)
    print(f"number of real solutions: {report.real_count}", file=out)


def _emit_json(variables: Sequence[str], report: HermiteReport, out: TextIO) -> None:
    names = list(variables)
    payload = {
        "variables": names,
        "order": report.form.basis.order.kind,
        "quotient_dimension": report.quotient_dimension,
        "basis": [format_monomial(m, names) for m in report.form.basis.monomials],
        "hermite_matrix": _matrix_strings(report),
        "rank": report.rank,
        "signature": report.signature,
        "distinct_complex_solutions": report.complex_count,
        "distinct_real_solutions": report.real_count,
    }
    print(json.dumps(payload, indent=2), file=out)


def run_solve(config: RunConfiguration, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        text = config.read_text()
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    try:
        variables, basis, report = _solve_text(text, config.order_kind)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except NotZeroDimensionalError:
        print("error: the ideal is not zero-dimensional", file=err)
        return EXIT_NOT_ZERO_DIMENSIONAL
    if config.cross_check:
        mismatch = _cross_check(variables, basis, report)
        if mismatch is not None:
            print(f"oracle mismatch: {mismatch}", file=err)
            return EXIT_ORACLE_MISMATCH
    if config.json_output:
        _emit_json(variables, report, out)
    else:
        _emit_text(variables, report, config.print_matrix, out)
    return EXIT_OK


def sphere_family(n: int) -> list[str]:
    """x1 = 1 intersected with growing spheres; one simple real solution."""
    polys = ["x1-1"]
    for k in range(2, n + 1):
        polys.append("+".join(f"x{i}^2" for i in range(1, k + 1)) + "-1")
    return polys


def degree_family(d: int) -> list[str]:
    """The diagonal x1 = x2 against x1^d = x2; roots of t^d = t on the diagonal."""
    return ["x1-x2", f"x1^{d}-x2"]


def _degree_family_expected(d: int) -> tuple[int, int]:
    f = UnivariatePolynomial([0, -1] + [0] * (d - 2) + [1])  # t^d - t
    return squarefree_part(f).degree, sturm_count(f)


@dataclass(frozen=True)
class BenchResult:
    family: str
    parameter: int
    quotient_dimension: int
    complex_count: int
    real_count: int
    seconds: float


def _timed_solve(texts: list[str], repeats: int) -> tuple[HermiteReport, float]:
    best = None
    report = None
    for _ in range(max(1, repeats)):
        start = time.perf_counter()
        _, _, report = _solve_text("\n".join(texts), GREVLEX)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return report, best


def run_bench(
    max_spheres: int = 5,
    max_degree: int = 7,
    repeats: int = 3,
    out: TextIO | None = None,
) -> list[BenchResult]:
    """Run both benchmark families, asserting counts and reporting wall time.

    Times are informational (machine-specific); the counts are checked against
    closed-form expectations and the univariate oracle.  Raises
    OracleMismatchError if any count is wrong.
    """
    if max_spheres < 2 or max_degree < 2:
        raise ValueError("benchmark families start at n = 2 and d = 2")
    out = out if out is not None else sys.stdout
    results = []
    for n in range(2, max_spheres + 1):
        report, seconds = _timed_solve(sphere_family(n), repeats)
        if (report.complex_count, report.real_count) != (1, 1):
            raise OracleMismatchError(
                f"sphere family n={n}: expected counts (1, 1), "
                f"got ({report.complex_count}, {report.real_count})"
            )
        results.append(
            BenchResult("sphere", n, report.quotient_dimension,
                        report.complex_count, report.real_count, seconds)
        )
        print(
            f"sphere n={n}: dimension {report.quotient_dimension}, "
            f"complex {report.complex_count}, real {report.real_count}, "
            f"{seconds:.6f}s",
            file=out,
        )
    for d in range(2, max_degree + 1):
        expected = _degree_family_expected(d)
        report, seconds = _timed_solve(degree_family(d), repeats)
        if (report.complex_count, report.real_count) != expected:
            raise OracleMismatchError(
                f"degree family d={d}: expected counts {expected}, "
                f"got ({report.complex_count}, {report.real_count})"
            )
        results.append(
            BenchResult("degree", d, report.quotient_dimension,
                        report.complex_count, report.real_count, seconds)
        )
        print(
            f"degree d={d}: dimension {report.quotient_dimension}, "
            f"complex {report.complex_count}, real {report.real_count}, "
            f"{seconds:.6f}s",
            file=out,
        )
    return results


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermite-count",
        description="Count distinct complex and real solutions of a "
        "zero-dimensional polynomial system, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a system from a file or inline strings")
    solve.add_argument("file", nargs="?", help="system file (one polynomial per line)")
    solve.add_argument("--poly", action="append", default=[], metavar="STR",
                       help="inline polynomial; repeat for a system")
    solve.add_argument("--order", choices=list(ORDER_KINDS), default=GREVLEX)
    solve.add_argument("--json", action="store_true", help="machine-readable output")
    solve.add_argument("--print-matrix", action="store_true", help="include the matrix in text output")
    solve.add_argument("--check", action="store_true",
                       help="run independent oracles and fail loudly on mismatch")

    bench = sub.add_parser("bench", help="run the scaling benchmark families")
    bench.add_argument("--spheres", type=int, default=5, metavar="N",
                       help="largest sphere-family variable count (default 5)")
    bench.add_argument("--degrees", type=int, default=7, metavar="D",
                       help="largest degree-family exponent (default 7)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    if ns.command == "solve":
        try:
            config = RunConfiguration(
                source_path=ns.file,
                inline_polynomials=tuple(ns.poly),
                order_kind=ns.order,
                json_output=ns.json,
                print_matrix=ns.print_matrix,
                cross_check=ns.check,
            )
        except ValueError as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        return run_solve(config)
    try:
        run_bench(max_spheres=ns.spheres, max_degree=ns.degrees)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleMismatchError as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
