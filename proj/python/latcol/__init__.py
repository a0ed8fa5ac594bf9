"""Exact invariant-subspace lattices and lattice collineations of finite matrices.

Matrices are nested lists of scalars. Inputs may be ints, Fractions or strings
such as "1/2-3i"; results come back as canonical strings, and ``to_fraction``
turns the real ones into ``fractions.Fraction``.
"""

from fractions import Fraction

from ._latcol import (
    InputError,
    PreconditionError,
    alg_lat,
    col_check,
    commutant,
    diagonal_separator,
    hankel_witness,
    intertwiners,
    jordan_matrix,
    jordan_type,
    parse_scalar,
    run_cli,
    run_suite,
)


def to_fraction(entry):
    """Fraction for a real scalar string; ValueError for a non-real one."""
    if "i" in entry:
        raise ValueError(f"{entry!r} is not real")
    return Fraction(entry)


def as_fractions(matrix):
    return [[to_fraction(e) for e in row] for row in matrix]


__all__ = [
    "InputError",
    "PreconditionError",
    "alg_lat",
    "as_fractions",
    "col_check",
    "commutant",
    "diagonal_separator",
    "hankel_witness",
    "intertwiners",
    "jordan_matrix",
    "jordan_type",
    "parse_scalar",
    "run_cli",
    "run_suite",
    "to_fraction",
]
