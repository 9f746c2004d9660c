"""Exact computations on nilpotent and solvable Lie algebras.

Structure constants live in Q(sqrt(2), sqrt(3), ...) and every result is exact.
"""

from ._core import (
    Algebra,
    InvalidAlgebra,
    ParseError,
    Scalar,
    catalog_names,
    run,
)

__all__ = ["Algebra", "InvalidAlgebra", "ParseError", "Scalar", "catalog_names", "run", "main"]


def main() -> int:
    import sys

    code, out, err = run(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
