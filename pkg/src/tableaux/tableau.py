"""Young tableaux: value-semantic rows, validation and row insertion."""

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..core.exceptions import DuplicateEntryError, ValidationError
from .partition import Cell, Partition


@dataclass(frozen=True)
class Tableau:
    """
    Rows of entries, top row first.

    Rows are kept exactly as given, empty ones included. Construction does
    not validate (``validate_tableau`` reports on any row structure); use
    ``Tableau.checked`` where a valid tableau is required.
    """
    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in self.rows))

    @classmethod
    def checked(cls, rows: Sequence[Sequence[int]], standard: bool = False) -> "Tableau":
        """Build and raise ``ValidationError`` on the first violated invariant."""
        t = cls(tuple(tuple(r) for r in rows))
        report = validate_tableau(t, standard=standard)
        if not report.valid:
            first = report.violations[0]
            raise ValidationError(first.message, invariant=first.invariant)
        return t

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> List[int]:
        return [x for row in self.rows for x in row]

    def is_standard(self) -> bool:
        return validate_tableau(self, standard=True).valid

    def to_list(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau P and recording tableau Q of one shape."""
    p: Tableau
    q: Tableau

    @property
    def shape(self) -> Partition:
        return self.p.shape

    def to_dict(self) -> Dict:
        return {"P": self.p.to_list(), "Q": self.q.to_list(), "shape": self.shape.to_list()}


@dataclass(frozen=True)
class Violation:
    """One violated tableau invariant."""
    invariant: str
    message: str

    def to_dict(self) -> Dict:
        return {"invariant": self.invariant, "message": self.message}


@dataclass
class TableauReport:
    """Result of ``validate_tableau``."""
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def invariants(self) -> List[str]:
        return [v.invariant for v in self.violations]

    def to_dict(self) -> Dict:
        return {"valid": self.valid, "violations": [v.to_dict() for v in self.violations]}


def validate_tableau(t: Tableau, standard: bool = False) -> TableauReport:
    """
    List the violated tableau invariants.

    Checks shape monotonicity, strict row and column increase, positive
    distinct entries and, with ``standard=True``, that the entries are
    exactly {1..size}.
    """
    report = TableauReport()
    rows = t.rows

    for i, row in enumerate(rows):
        if not row:
            report.violations.append(Violation("shape-monotone", f"row {i + 1} is empty"))

    for i in range(len(rows) - 1):
        if len(rows[i]) < len(rows[i + 1]):
            report.violations.append(Violation(
                "shape-monotone", f"row {i + 1} is shorter than row {i + 2}"
            ))

    for i, row in enumerate(rows):
        for j in range(len(row) - 1):
            if row[j] >= row[j + 1]:
                report.violations.append(Violation(
                    "row-increasing", f"row {i + 1}: {row[j]} at column {j + 1} is not < {row[j + 1]}"
                ))

    for i in range(len(rows) - 1):
        for j in range(min(len(rows[i]), len(rows[i + 1]))):
            if rows[i][j] >= rows[i + 1][j]:
                report.violations.append(Violation(
                    "column-increasing", f"column {j + 1}: {rows[i][j]} above {rows[i + 1][j]}"
                ))

    entries = t.entries()
    if any(x <= 0 for x in entries):
        report.violations.append(Violation("positive-entries", "entries must be positive"))
    seen, duplicates = set(), set()
    for x in entries:
        if x in seen:
            duplicates.add(x)
        seen.add(x)
    for x in sorted(duplicates):
        report.violations.append(Violation("distinct-entries", f"duplicate entry {x}"))

    if standard and sorted(entries) != list(range(1, len(entries) + 1)):
        report.violations.append(Violation(
            "standard-entries", f"entries are not exactly 1..{len(entries)}"
        ))

    return report


def _bump_index(row: Sequence[int], x: int, naive: bool) -> int:
    """Index of the smallest entry larger than x (len(row) if none)."""
    if naive:
        for j, y in enumerate(row):
            if y > x:
                return j
        return len(row)
    return bisect_left(row, x)


def insert_rows(rows: List[List[int]], x: int, naive: bool = False) -> Cell:
    """
    In-place row insertion on a list-of-lists tableau.

    Returns the 1-based coordinate of the new cell. Entries must already be
    known distinct from x.
    """
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return (i + 1, 1)
        row = rows[i]
        j = _bump_index(row, x, naive)
        if j == len(row):
            row.append(x)
            return (i + 1, j + 1)
        row[j], x = x, row[j]
        i += 1


def row_insert(t: Tableau, x: int, naive: bool = False) -> Tuple[Tableau, Cell]:
    """
    T ← x: Schensted row insertion.

    Returns the new tableau and the coordinate (i, j) of the created cell;
    ``t`` itself is unchanged.
    """
    if x <= 0:
        raise ValidationError(f"entry must be positive: {x}", invariant="positive-entries")
    if any(x in row for row in t.rows):
        raise DuplicateEntryError(x)
    rows = [list(r) for r in t.rows if r]
    cell = insert_rows(rows, x, naive=naive)
    return Tableau(tuple(tuple(r) for r in rows)), cell
