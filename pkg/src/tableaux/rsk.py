"""The RSK correspondence π ↔ (P, Q) and shape helpers."""

from bisect import bisect_left
from typing import List

from ..core.exceptions import ShapeMismatchError
from .partition import Partition
from .permutation import Permutation
from .tableau import Tableau, TableauPair, insert_rows, validate_tableau


def rsk(pi: Permutation, naive: bool = False) -> TableauPair:
    """
    Insert π_1, …, π_n into an empty tableau.

    P receives the bumped values; Q gets label i in the cell created at
    step i. ``naive=True`` scans rows linearly instead of binary search.
    """
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for step, x in enumerate(pi.values, start=1):
        i, _ = insert_rows(p_rows, x, naive=naive)
        if i > len(q_rows):
            q_rows.append([])
        q_rows[i - 1].append(step)
    return TableauPair(
        p=Tableau(tuple(tuple(r) for r in p_rows)),
        q=Tableau(tuple(tuple(r) for r in q_rows)),
    )


def shape_of(values) -> Partition:
    """
    Shape only, without building Q.

    Hot path for exhaustive tables; ``values`` is any sequence of distinct
    integers.
    """
    rows: List[List[int]] = []
    for x in values:
        for row in rows:
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                break
            row[j], x = x, row[j]
        else:
            rows.append([x])
    return Partition(tuple(len(r) for r in rows))


def shape(pi: Permutation) -> Partition:
    """λ(π) = sh(P) = sh(Q)."""
    return shape_of(pi.values)


def inverse_rsk(pair: TableauPair) -> Permutation:
    """
    Recover the unique π with rsk(π) = pair.

    Removes the cell labelled n, n−1, …, 1 in Q and reverse-bumps the
    matching entry of P up to the first row.
    """
    p, q = pair.p, pair.q
    for name, t in (("P", p), ("Q", q)):
        report = validate_tableau(t, standard=True)
        if not report.valid:
            raise ShapeMismatchError(
                f"{name} is not a standard tableau: {report.violations[0].message}",
                invariant=f"standard-{name}",
            )
    if p.shape != q.shape:
        raise ShapeMismatchError(
            f"shapes differ: {p.shape} vs {q.shape}", invariant="equal-shapes"
        )

    n = q.size
    if n == 0:
        raise ShapeMismatchError("empty tableau pair", invariant="positive-size")

    p_rows = [list(r) for r in p.rows]
    where = {label: i for i, row in enumerate(q.rows) for label in row}
    values = [0] * n
    for label in range(n, 0, -1):
        i = where[label]
        y = p_rows[i].pop()
        for r in range(i - 1, -1, -1):
            row = p_rows[r]
            j = bisect_left(row, y) - 1
            row[j], y = y, row[j]
        values[label - 1] = y
        if not p_rows[i]:
            p_rows.pop()
    return Permutation(tuple(values))


def longest_increasing_subsequence(pi: Permutation) -> int:
    """Patience sorting: number of piles = length of the longest increasing run."""
    tops: List[int] = []
    for x in pi.values:
        j = bisect_left(tops, x)
        if j == len(tops):
            tops.append(x)
        else:
            tops[j] = x
    return len(tops)
