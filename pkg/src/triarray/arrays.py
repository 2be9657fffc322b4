"""Row-column arrays in standard and RL form, with full TA/RTA verification.

Standard form: an r x c array, every cell filled with one of v symbols, no
symbol repeated in a row or column. The four counting conditions are

  TA1  every symbol occurs the same number k of times,
  TA2  any two rows share lambda_rr symbols,
  TA3  any two columns share lambda_cc symbols,
  TA4  any row and column share lambda_rc symbols (adjusted orthogonality).

RL form swaps the roles of columns and symbols: an incomplete r x v array
whose conditions RTA1-RTA4 mirror TA1-TA4. Cells are stored as int codes
into the symbol list, with -1 for a blank.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import MalformedArrayError, ParameterMismatchError
from .diffsets import DifferenceSet

BLANK = -1


@dataclass(frozen=True, eq=False)
class RowColumnArray:
    form: str                      # "standard" | "rl"
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    symbols: tuple[str, ...]       # cell-value universe; cell codes index into it
    cells: np.ndarray              # (r, c) int matrix, BLANK for empty

    def __post_init__(self):
        if self.form not in ("standard", "rl"):
            raise MalformedArrayError(f"unknown form {self.form!r}")
        cells = np.ascontiguousarray(np.asarray(self.cells, dtype=np.int32))
        if cells.shape != (len(self.row_labels), len(self.col_labels)):
            raise MalformedArrayError("cell matrix shape does not match the labels")
        if cells.size and (cells.max() >= len(self.symbols) or cells.min() < BLANK):
            raise MalformedArrayError("cell codes out of range of the symbol list")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "symbols", tuple(self.symbols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape

    def __eq__(self, other):
        return (isinstance(other, RowColumnArray)
                and self.form == other.form
                and self.row_labels == other.row_labels
                and self.col_labels == other.col_labels
                and self.symbols == other.symbols
                and bool(np.array_equal(self.cells, other.cells)))

    # -- serialisation ---------------------------------------------------------

    def to_json(self) -> dict:
        names = [[("" if c == BLANK else self.symbols[c]) for c in row] for row in self.cells]
        return {"form": self.form, "rows": list(self.row_labels),
                "cols": list(self.col_labels), "symbols": list(self.symbols),
                "cells": names}

    @classmethod
    def from_json(cls, data: dict) -> "RowColumnArray":
        symbols = tuple(data["symbols"])
        code = {s: i for i, s in enumerate(symbols)}
        try:
            cells = [[BLANK if c == "" else code[c] for c in row] for row in data["cells"]]
        except KeyError as exc:
            raise MalformedArrayError(f"cell value {exc.args[0]!r} missing from symbol list")
        return cls(data["form"], tuple(data["rows"]), tuple(data["cols"]), symbols,
                   np.array(cells, dtype=np.int32).reshape(len(data["rows"]), len(data["cols"])))

    def to_grid(self) -> str:
        """Aligned text grid; blanks shown as '.'."""
        header = [""] + list(self.col_labels)
        body = [[self.row_labels[i]] + [("." if c == BLANK else self.symbols[c])
                                        for c in self.cells[i]]
                for i in range(len(self.row_labels))]
        widths = [max(len(row[j]) for row in [header] + body) for j in range(len(header))]
        lines = [" ".join(f"{cell:>{w}}" for cell, w in zip(row, widths)).rstrip()
                 for row in [header] + body]
        return "\n".join(lines)

    @classmethod
    def from_grid(cls, text: str, form: str = "standard") -> "RowColumnArray":
        rows = [line.split() for line in text.splitlines() if line.strip()]
        if len(rows) < 2:
            raise MalformedArrayError("grid needs a header line and at least one row")
        col_labels = tuple(rows[0])
        row_labels = tuple(r[0] for r in rows[1:])
        raw = [r[1:] for r in rows[1:]]
        if any(len(r) != len(col_labels) for r in raw):
            raise MalformedArrayError("ragged grid")
        symbols = tuple(sorted({c for r in raw for c in r if c != "."}))
        code = {s: i for i, s in enumerate(symbols)}
        cells = np.array([[BLANK if c == "." else code[c] for c in r] for r in raw],
                         dtype=np.int32)
        return cls(form, row_labels, col_labels, symbols, cells)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + list(self.col_labels))
        for i, label in enumerate(self.row_labels):
            writer.writerow([label] + [("" if c == BLANK else self.symbols[c])
                                       for c in self.cells[i]])
        return buf.getvalue()


@dataclass(frozen=True)
class ArrayVerdict:
    """Counted verdict; lambda fields are present only when the count is constant.

    (r, c, v) always describe the standard-form equivalent, so verdicts of an
    array and of its RL form agree field by field.
    """

    r: int
    c: int
    v: int
    k: int | None
    is_equireplicate: bool
    lambda_rr: int | None
    lambda_cc: int | None
    lambda_rc: int | None
    double_array: bool
    triple_array: bool
    extremal: bool

    @property
    def parameters(self) -> tuple:
        return (self.v, self.k, self.lambda_rr, self.lambda_cc, self.lambda_rc)

    def describe(self) -> str:
        dims = f"{self.r}x{self.c}"
        if self.triple_array:
            return (f"TA({self.v},{self.k},{self.lambda_rr},{self.lambda_cc},"
                    f"{self.lambda_rc} : {dims})")
        if self.double_array:
            return f"DA({self.v},{self.k},{self.lambda_rr},{self.lambda_cc} : {dims})"
        return f"not a double array ({dims} on {self.v} symbols)"


def _constant(values: np.ndarray) -> int | None:
    flat = np.asarray(values).ravel()
    if flat.size == 0:
        return None
    first = int(flat[0])
    return first if bool((flat == first).all()) else None


def _check_no_line_repeats(a: RowColumnArray):
    cells = a.cells
    for axis, labels, word in ((1, a.row_labels, "row"), (0, a.col_labels, "column")):
        lines = cells if axis == 1 else cells.T
        for i, line in enumerate(lines):
            filled = line[line != BLANK]
            if len(np.unique(filled)) != filled.size:
                raise MalformedArrayError(
                    f"repeated symbol in {word} {labels[i]!r}",
                    condition="no-repeats", witness=labels[i])


def verify_array(a: RowColumnArray) -> ArrayVerdict:
    """Count all four conditions by brute force and report the verdict.

    Raises MalformedArrayError for structural violations (repeats in a line,
    blanks in standard form, fewer than two rows or columns).
    """
    r, c = a.shape
    if r < 2 or c < 2:
        raise MalformedArrayError(
            f"malformed parameters: need at least 2 rows and 2 columns, got {r}x{c}",
            condition="degenerate-parameters")
    _check_no_line_repeats(a)
    if a.form == "standard":
        return _verify_standard(a)
    return _verify_rl(a)


def _verify_standard(a: RowColumnArray) -> ArrayVerdict:
    r, c = a.shape
    v = len(a.symbols)
    if (a.cells == BLANK).any():
        raise MalformedArrayError("standard form cannot contain blanks",
                                  condition="incomplete")
    counts = np.bincount(a.cells.ravel(), minlength=v)
    k = _constant(counts)

    occ_rows = np.zeros((r, v), dtype=np.uint8)
    occ_cols = np.zeros((c, v), dtype=np.uint8)
    rows_idx = np.repeat(np.arange(r), c)
    cols_idx = np.tile(np.arange(c), r)
    occ_rows[rows_idx, a.cells.ravel()] = 1
    occ_cols[cols_idx, a.cells.ravel()] = 1

    rr = _backend.common_counts(occ_rows, occ_rows)
    cc = _backend.common_counts(occ_cols, occ_cols)
    rc = _backend.common_counts(occ_rows, occ_cols)
    lam_rr = _constant(rr[~np.eye(r, dtype=bool)])
    lam_cc = _constant(cc[~np.eye(c, dtype=bool)])
    lam_rc = _constant(rc)

    double = k is not None and lam_rr is not None and lam_cc is not None
    return ArrayVerdict(r=r, c=c, v=v, k=k, is_equireplicate=k is not None,
                        lambda_rr=lam_rr, lambda_cc=lam_cc, lambda_rc=lam_rc,
                        double_array=double, triple_array=double and lam_rc is not None,
                        extremal=(v == r + c - 1))


def _verify_rl(a: RowColumnArray) -> ArrayVerdict:
    r, ncols = a.shape
    nsym = len(a.symbols)
    occ = (a.cells != BLANK).astype(np.uint8)
    k = _constant(occ.sum(axis=0))                      # RTA1

    col_sym = np.zeros((ncols, nsym), dtype=np.uint8)
    fi, fj = np.nonzero(a.cells != BLANK)
    col_sym[fj, a.cells[fi, fj]] = 1

    rr = _backend.common_counts(occ, occ)               # RTA2
    cc = _backend.common_counts(col_sym.T.copy(), col_sym.T.copy())  # RTA3
    profile = _backend.common_counts(occ, col_sym.T.copy())          # RTA4
    lam_rr = _constant(rr[~np.eye(r, dtype=bool)])
    lam_cc = _constant(cc[~np.eye(nsym, dtype=bool)])
    lam_rc = _constant(profile)

    double = k is not None and lam_rr is not None and lam_cc is not None
    # standard-form equivalent: columns <-> symbols swap back
    return ArrayVerdict(r=r, c=nsym, v=ncols, k=k, is_equireplicate=k is not None,
                        lambda_rr=lam_rr, lambda_cc=lam_cc, lambda_rc=lam_rc,
                        double_array=double, triple_array=double and lam_rc is not None,
                        extremal=(ncols == r + nsym - 1))


def rl_to_standard(a: RowColumnArray) -> RowColumnArray:
    """Interchange columns and symbols back; fails if any pairing is missing."""
    if a.form != "rl":
        raise MalformedArrayError("input is not in RL form")
    _check_no_line_repeats(a)
    r, ncols = a.shape
    nsym = len(a.symbols)
    cells = np.full((r, nsym), BLANK, dtype=np.int32)
    fi, fj = np.nonzero(a.cells != BLANK)
    cells[fi, a.cells[fi, fj]] = fj
    if (cells == BLANK).any():
        i, s = np.argwhere(cells == BLANK)[0]
        raise MalformedArrayError(
            f"row {a.row_labels[i]!r} has no column for symbol {a.symbols[s]!r}: "
            "pairing is ambiguous", condition="ambiguous-pairing")
    return RowColumnArray("standard", a.row_labels, a.symbols, a.col_labels, cells)


def standard_to_rl(a: RowColumnArray) -> RowColumnArray:
    """Interchange the roles of columns and symbols."""
    if a.form != "standard":
        raise MalformedArrayError("input is not in standard form")
    r, c = a.shape
    nsym = len(a.symbols)
    cells = np.full((r, nsym), BLANK, dtype=np.int32)
    rows_idx = np.repeat(np.arange(r), c)
    cols_idx = np.tile(np.arange(c), r)
    cells[rows_idx, a.cells.ravel()] = cols_idx
    return RowColumnArray("rl", a.row_labels, a.symbols, a.col_labels, cells)


def derive_parameters(r: int, c: int, k: int) -> tuple[int, int, int, int, int]:
    """Expected extremal triple-array parameters (v, k, c-k, r-k, k)."""
    if k <= 0 or k >= r or k >= c:
        raise ParameterMismatchError(f"replication k={k} incompatible with {r}x{c}")
    v = r + c - 1
    lam_rr, lam_cc, lam_rc = c - k, r - k, k
    if lam_rc != r - lam_cc:
        raise ParameterMismatchError("lambda_rc must equal r - lambda_cc")
    return (v, k, lam_rr, lam_cc, lam_rc)


def direct_construct(d: DifferenceSet) -> RowColumnArray:
    """The array with rows D, columns G minus D, and entry x^-1 * y.

    Always a double array for a difference set; a triple array exactly when
    the row/column overlap count of ``triple_criterion`` is constant.
    """
    group = d.group
    rows = list(d.members)
    cols = [y for y in range(group.order) if y not in d.member_set()]
    symbols = [i for i in range(group.order) if i != group.identity]
    code = {s: i for i, s in enumerate(symbols)}
    inv = group.inverse
    table = group.mul_table
    cells = np.array([[code[int(table[inv[x], y])] for y in cols] for x in rows],
                     dtype=np.int32)
    return RowColumnArray("standard",
                          tuple(group.names[x] for x in rows),
                          tuple(group.names[y] for y in cols),
                          tuple(group.names[s] for s in symbols),
                          cells)


@dataclass(frozen=True)
class TripleCriterion:
    is_constant: bool
    value: int | None
    witness: tuple[str, str, int] | None


def triple_criterion(d: DifferenceSet) -> TripleCriterion:
    """Evaluate |x^-1 D  intersect  D^(-1) y| over all x in D, y outside D."""
    group = d.group
    v = group.order
    table, inv = group.mul_table, group.inverse
    members = np.asarray(d.members, dtype=np.intp)
    outside = np.asarray([y for y in range(v) if y not in d.member_set()], dtype=np.intp)

    left = np.zeros((len(members), v), dtype=np.uint8)   # row x: indicator of x^-1 D
    for i, x in enumerate(members):
        left[i, table[inv[x], members]] = 1
    right = np.zeros((len(outside), v), dtype=np.uint8)  # row y: indicator of D^(-1) y
    inv_members = inv[members]
    for j, y in enumerate(outside):
        right[j, table[inv_members, y]] = 1

    counts = _backend.common_counts(left, right)
    value = _constant(counts)
    if value is not None:
        return TripleCriterion(True, value, None)
    base = int(counts[0, 0])
    bad = np.argwhere(counts != base)
    i, j = (int(bad[0][0]), int(bad[0][1])) if len(bad) else (0, 0)
    return TripleCriterion(False, None,
                           (group.names[int(members[i])], group.names[int(outside[j])],
                            int(counts[i, j])))


def compare_constructions(d: DifferenceSet, youden_route: RowColumnArray) -> dict:
    """Exploratory report: does the Youden route match the direct route cell-wise?

    ``youden_route`` should be the standard form of the identity-column
    deletion. Both arrays are reordered canonically (rows and columns sorted
    by label) before comparison. Informational only; nothing asserts this.
    """
    direct = direct_construct(d)

    def canonical(a: RowColumnArray):
        row_order = np.argsort(np.array(a.row_labels))
        col_order = np.argsort(np.array(a.col_labels))
        grid = [[("" if c == BLANK else a.symbols[c]) for c in row] for row in a.cells]
        reordered = [[grid[i][j] for j in col_order] for i in row_order]
        return ([a.row_labels[i] for i in row_order],
                [a.col_labels[j] for j in col_order], reordered)

    ra, ca, ga = canonical(direct)
    rb, cb, gb = canonical(youden_route)
    same_labels = (ra == rb and ca == cb)
    mismatches = 0
    if same_labels:
        mismatches = sum(1 for x, y in zip(sum(ga, []), sum(gb, [])) if x != y)
    return {"labels_match": same_labels,
            "cells_match": same_labels and mismatches == 0,
            "cell_mismatches": mismatches if same_labels else None}
