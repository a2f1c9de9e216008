"""
Fraction-Free Rank Certificates

Rows with complex rational entries are scaled to Gaussian integers (common
denominator) and reduced into an echelon basis with integer-preserving row
operations: r <- p·r - q·b, where p is the pivot of b and q the entry of r in
that column. Each remainder is divided by the integer content of its entries,
so no rational arithmetic happens during elimination.

The basis is incremental: rows are inserted one at a time and the rank after
each insertion is known, which gives span certificates for every prefix in a
single pass.
"""

import logging
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from holoembed.space.models import _SparseSequence

logger = logging.getLogger(__name__)

GaussianInt = tuple[int, int]
IntegerRow = dict[int, GaussianInt]


def to_integer_row(sequence: _SparseSequence) -> IntegerRow:
    """Scale a sparse sequence by the lcm of its denominators"""
    denominators = [value.re.denominator for _, value in sequence.items()]
    denominators += [value.im.denominator for _, value in sequence.items()]
    scale = lcm(*denominators) if denominators else 1
    return {
        n: (int(value.re * scale), int(value.im * scale))
        for n, value in sequence.items()
    }


def _primitive(row: IntegerRow) -> IntegerRow:
    content = 0
    for re, im in row.values():
        content = gcd(content, re, im)
        if content == 1:
            return row
    if content <= 1:
        return row
    return {n: (re // content, im // content) for n, (re, im) in row.items()}


def _eliminate(row: IntegerRow, basis_row: IntegerRow, column: int) -> IntegerRow:
    pr, pi = basis_row[column]
    qr, qi = row[column]
    result: IntegerRow = {}
    for n in row.keys() | basis_row.keys():
        ar, ai = row.get(n, (0, 0))
        br, bi = basis_row.get(n, (0, 0))
        re = (pr * ar - pi * ai) - (qr * br - qi * bi)
        im = (pr * ai + pi * ar) - (qr * bi + qi * br)
        if re or im:
            result[n] = (re, im)
    return _primitive(result)


class EchelonBasis:
    """
    Echelon basis over the Gaussian integers

    Example:
        basis = EchelonBasis()
        basis.insert(SparseVector.delta(0))   # True
        basis.insert(SparseVector.delta(0) * 3)   # False
        basis.rank   # 1
    """

    def __init__(self, rows: Iterable[_SparseSequence] = ()):
        self._rows: dict[int, IntegerRow] = {}
        for row in rows:
            self.insert(row)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, row: IntegerRow) -> IntegerRow:
        """Remainder of row after elimination against the basis"""
        for column in sorted(self._rows):
            if column in row:
                row = _eliminate(row, self._rows[column], column)
                if not row:
                    break
        return row

    def contains(self, sequence: _SparseSequence) -> bool:
        return not self.reduce(to_integer_row(sequence))

    def insert(self, sequence: _SparseSequence) -> bool:
        """Add a row; True when the rank grew"""
        remainder = self.reduce(to_integer_row(sequence))
        if not remainder:
            return False
        self._rows[min(remainder)] = remainder
        return True


def rank(rows: Iterable[_SparseSequence]) -> int:
    """Exact rank of the stacked coefficient rows"""
    return EchelonBasis(rows).rank


def span_equal(first: Sequence[_SparseSequence], second: Sequence[_SparseSequence]) -> bool:
    """span(first) == span(second), via rank(first) == rank(second) == rank(both)"""
    left = EchelonBasis(first)
    right = EchelonBasis(second)
    if left.rank != right.rank:
        return False
    return all(left.contains(row) for row in second)


def prefix_span_certificate(
    first: Sequence[_SparseSequence], second: Sequence[_SparseSequence]
) -> tuple[bool, Optional[int]]:
    """
    span(first[:n]) == span(second[:n]) for every prefix length n

    Returns:
        tuple: (holds, first failing prefix length or None)
    """
    if len(first) != len(second):
        return False, min(len(first), len(second)) + 1
    left, right, joint = EchelonBasis(), EchelonBasis(), EchelonBasis()
    for n, (a, b) in enumerate(zip(first, second), start=1):
        left.insert(a)
        right.insert(b)
        joint.insert(a)
        joint.insert(b)
        if not left.rank == right.rank == joint.rank:
            logger.debug('prefix %d: ranks %d / %d / joint %d', n, left.rank, right.rank, joint.rank)
            return False, n
    return True, None
