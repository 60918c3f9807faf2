"""Exact sparse linear systems over Q, solved with sympy's sparse domain matrices."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from .errors import InfeasibleError

logger = logging.getLogger(__name__)


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass
class LinearSolution:
    values: Dict[Hashable, Fraction]
    rank: int
    nullity: int


def solve_sparse(
    columns: Sequence[Hashable],
    equations: Sequence[Mapping[Hashable, Fraction]],
    rhs: Sequence[Fraction],
) -> LinearSolution:
    """Solve ``sum_j A[i][j] x_j = rhs[i]``; free variables are set to zero.

    ``equations[i]`` maps column keys to coefficients. Raises
    ``InfeasibleError`` when the system is inconsistent.
    """
    index = {key: j for j, key in enumerate(columns)}
    n = len(columns)
    rows: Dict[int, Dict[int, object]] = {}
    for i, (equation, b) in enumerate(zip(equations, rhs)):
        row = {index[key]: _to_qq(c) for key, c in equation.items() if c != 0}
        if b != 0:
            row[n] = _to_qq(b)
        if row:
            rows[i] = row
    augmented = SDM(rows, (len(equations), n + 1), QQ)
    reduced, pivots = augmented.rref()
    if pivots and pivots[-1] == n:
        raise InfeasibleError(f"inconsistent system: {len(equations)} equations, {n} unknowns")
    values: Dict[Hashable, Fraction] = {}
    for r, col in enumerate(pivots):
        entry = reduced.get(r, {}).get(n)
        if entry is not None and entry != 0:
            values[columns[col]] = _to_fraction(entry)
    rank = len(pivots)
    logger.debug("🔧 solved %dx%d system: rank %d", len(equations), n, rank)
    return LinearSolution(values=values, rank=rank, nullity=n - rank)


def matrix_rank(rows: List[Mapping[Hashable, Fraction]], columns: Sequence[Hashable]) -> int:
    index = {key: j for j, key in enumerate(columns)}
    data = {}
    for i, row in enumerate(rows):
        entries = {index[k]: _to_qq(v) for k, v in row.items() if v != 0}
        if entries:
            data[i] = entries
    _, pivots = SDM(data, (len(rows), len(columns)), QQ).rref()
    return len(pivots)
