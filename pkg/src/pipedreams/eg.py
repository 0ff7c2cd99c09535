"""Edelman-Greene insertion specialized to pipe dreams.

A filling is read into a two-row word: cross number k, taken row by row
from the top with each row scanned right to left, contributes the pair
(a_k, alpha_k) = (row, row + column).  The alpha letters are inserted with
the Edelman-Greene variant of row bumping (inserting x into a row that
already contains x and x+1 leaves the row alone and bumps x+1), the a
letters record where boxes appear, and both tableaux are transposed before
they are returned, so that columns are the strictly increasing direction of
the recording tableau.

The right-to-left scan inside each row is what keeps the insertion tableau
strictly increasing along rows and columns; reading_direction_report
documents this by trying both scans on a whole family.  For the zigzag
family the insertion tableau is the same staircase tableau for every
filling, which is what lets ``evacuate`` rebuild the word from the
recording tableau alone.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache

from .catalan import Partition
from .perm import zigzag
from .rcgraph import NotZigzagError, RcGraph, bottom_rcgraph, enumerate_rcgraphs

RIGHT_TO_LEFT = "right-to-left"
LEFT_TO_RIGHT = "left-to-right"

BiWord = tuple[tuple[int, int], ...]


class InsertionError(ValueError):
    """The word cannot be inserted while keeping the tableaux strict."""


class InvalidQTableauError(ValueError):
    """The tableau is not the recording tableau of any zigzag filling."""


class NonPartitionBoxesError(ValueError):
    """The row-matching boxes of the recording tableau fail to form a
    partition shape."""


@dataclass(frozen=True)
class Tableau:
    """A filling of a partition shape with positive integers."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        for a, b in zip(self.rows, self.rows[1:]):
            if len(b) > len(a):
                raise ValueError("row lengths must weakly decrease")
        if any(len(r) == 0 for r in self.rows):
            raise ValueError("empty rows are not stored")
        if any(e < 1 for r in self.rows for e in r):
            raise ValueError("entries must be positive")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def box_count(self) -> int:
        return sum(len(r) for r in self.rows)

    def transpose(self) -> Tableau:
        return Tableau(_transposed(self.rows))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_rows(cls, rows) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in r) for r in self.rows)


def _transposed(rows) -> tuple[tuple[int, ...], ...]:
    if not rows:
        return ()
    return tuple(
        tuple(rows[r][c] for r in range(len(rows)) if c < len(rows[r]))
        for c in range(len(rows[0]))
    )


def _zigzag_index(d: RcGraph) -> int:
    n = d.m - 1
    if d.permutation() != zigzag(n):
        raise NotZigzagError(
            f"not a filling for the zigzag permutation of S_{d.m}"
        )
    return n


def eg_word(d: RcGraph, direction: str = RIGHT_TO_LEFT) -> BiWord:
    """The two-row word of a filling: pairs (i, i + j) over the crosses,
    rows top to bottom, each row scanned in the given direction."""
    if direction not in (RIGHT_TO_LEFT, LEFT_TO_RIGHT):
        raise ValueError(f"unknown reading direction {direction!r}")
    pairs: list[tuple[int, int]] = []
    for i, row in enumerate(d.rows, start=1):
        cols = [j for j, c in enumerate(row, start=1) if c]
        if direction == RIGHT_TO_LEFT:
            cols.reverse()
        pairs.extend((i, i + j) for j in cols)
    return tuple(pairs)


def _insert_letter(p_rows: list[list[int]], q_rows: list[list[int]],
                   a: int, x: int) -> None:
    r = 0
    while True:
        if r == len(p_rows):
            p_rows.append([x])
            q_rows.append([a])
            return
        row = p_rows[r]
        idx = bisect_left(row, x)
        if idx < len(row) and row[idx] == x:
            # x already present: only legal when x+1 sits next to it, in
            # which case the row stays put and x+1 bumps instead
            if idx + 1 < len(row) and row[idx + 1] == x + 1:
                x = x + 1
                r += 1
                continue
            raise InsertionError(
                f"letter {x} repeats in row {r + 1} without {x + 1}"
            )
        if idx == len(row):
            row.append(x)
            q_rows[r].append(a)
            return
        x, row[idx] = row[idx], x
        r += 1


def _check_rows_strict(rows: list[list[int]], what: str) -> None:
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            raise InsertionError(f"{what} has a non-strict row {r}")


def eg_insert(word: BiWord) -> tuple[Tableau, Tableau]:
    """Insert a two-row word; returns the insertion and recording tableaux,
    both transposed so columns are the strict direction of the recording."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for a, x in word:
        _insert_letter(p_rows, q_rows, a, x)
    _check_rows_strict(p_rows, "insertion tableau")
    for c in range(len(p_rows[0]) if p_rows else 0):
        column = [r[c] for r in p_rows if c < len(r)]
        if any(a >= b for a, b in zip(column, column[1:])):
            raise InsertionError(
                f"insertion tableau has a non-strict column {column}"
            )
    _check_rows_strict(q_rows, "recording tableau")
    return (
        Tableau(_transposed(tuple(map(tuple, p_rows)))),
        Tableau(_transposed(tuple(map(tuple, q_rows)))),
    )


@lru_cache(maxsize=None)
def _family_insertion_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """The insertion tableau shared by every zigzag filling, in the
    row-strict (untransposed) orientation."""
    p, _ = eg_insert(eg_word(bottom_rcgraph(n)))
    return p.transpose().rows


def evacuate(q: Tableau, n: int) -> BiWord:
    """Rebuild the word whose insertion has recording tableau q.

    Works on the row-strict orientation (the transpose of the customary
    form that ``eg_insert`` returns).  Repeatedly take the outer box with
    the biggest label, preferring the southernmost when tied, and rewind
    one insertion against the family's fixed insertion tableau; the box
    labels come back as the a letters and the values popped out of the top
    row as the alpha letters.
    """
    p_ref = [list(r) for r in _family_insertion_rows(n)]
    qq = [list(r) for r in q.transpose().rows]
    if [len(r) for r in qq] != [len(r) for r in p_ref]:
        raise InvalidQTableauError(
            f"shape {tuple(len(r) for r in qq)} is not the staircase of {n}"
        )
    for r in qq:
        if any(a >= b for a, b in zip(r, r[1:])):
            raise InvalidQTableauError(f"labels are not strict along row {r}")
    pairs: list[tuple[int, int]] = []
    for _ in range(sum(len(r) for r in qq)):
        best_row = -1
        best_label = 0
        for r, row in enumerate(qq):
            if row and row[-1] >= best_label:
                best_label = row[-1]
                best_row = r
        if best_row + 1 < len(qq) and len(qq[best_row + 1]) == len(qq[best_row]):
            raise InvalidQTableauError(
                f"the box holding {best_label} in row {best_row + 1} is not removable"
            )
        a = qq[best_row].pop()
        z = p_ref[best_row].pop()
        for r in range(best_row - 1, -1, -1):
            row = p_ref[r]
            pos = bisect_left(row, z)
            if pos < len(row) and row[pos] == z:
                if pos == 0 or row[pos - 1] != z - 1:
                    raise InvalidQTableauError(
                        f"cannot rewind the insertion of {z} through row {r + 1}"
                    )
                z = z - 1
            else:
                if pos == 0:
                    raise InvalidQTableauError(
                        f"cannot rewind the insertion of {z} through row {r + 1}"
                    )
                z, row[pos - 1] = row[pos - 1], z
        pairs.append((a, z))
    pairs.reverse()
    return tuple(pairs)


def eg_partition_of(d: RcGraph) -> Partition:
    """The partition cut out of the recording tableau by the boxes whose
    label equals their row index (in the transposed, customary form)."""
    _zigzag_index(d)
    _, q = eg_insert(eg_word(d))
    counts: list[int] = []
    for r, row in enumerate(q.rows, start=1):
        matching = [c for c, label in enumerate(row, start=1) if label == r]
        if matching != list(range(1, len(matching) + 1)):
            raise NonPartitionBoxesError(
                f"boxes labelled {r} in row {r} are not left-justified"
            )
        counts.append(len(matching))
    while counts and counts[-1] == 0:
        counts.pop()
    if any(a < b for a, b in zip(counts, counts[1:])):
        raise NonPartitionBoxesError(
            f"row counts {counts} do not weakly decrease"
        )
    return Partition(tuple(counts))


def q_label_row_check(q: Tableau) -> bool:
    """Whether every label i of the recording tableau sits in row i-1 or i."""
    return all(
        label in (r, r + 1)
        for r, row in enumerate(q.rows, start=1)
        for label in row
    )


def reading_direction_report(n: int) -> dict:
    """Try both within-row scans on the whole zigzag family of n and report
    which ones keep the insertion strict with a constant insertion tableau.

    This is a diagnostic for the reading-order convention rather than a
    computation; the library's default is the scan this report singles out.
    """
    report: dict = {}
    family = enumerate_rcgraphs(zigzag(n))
    for direction in (RIGHT_TO_LEFT, LEFT_TO_RIGHT):
        entry = {
            "insertion_ok": True,
            "p_constant": None,
            "label_row_ok": None,
            "detail": "",
        }
        p_seen = set()
        labels_ok = True
        for d in family:
            try:
                p, q = eg_insert(eg_word(d, direction))
            except InsertionError as exc:
                entry["insertion_ok"] = False
                entry["detail"] = str(exc)
                break
            p_seen.add(p.rows)
            labels_ok = labels_ok and q_label_row_check(q)
        if entry["insertion_ok"]:
            entry["p_constant"] = len(p_seen) <= 1
            entry["label_row_ok"] = labels_ok
        report[direction] = entry
    report["usable"] = [
        direction
        for direction in (RIGHT_TO_LEFT, LEFT_TO_RIGHT)
        if report[direction]["insertion_ok"]
        and report[direction]["p_constant"]
        and report[direction]["label_row_ok"]
    ]
    return report
