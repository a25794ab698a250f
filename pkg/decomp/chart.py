"""
Decomposition charts.

A chart has one row per block of π_Z (the free set) and one column per block of π_Y (the
bound set). A cell holds the output value of the tuple in ``Q_z ∩ P_y``, the don't-care
marker, or ``None`` (shown as φ) when no tuple exists there. Empty cells only appear when Y
and Z share attributes and the row and column disagree on them.

Columns remember the π_Y blocks they were merged from (``keys``) and the tuple ids of
every cell, so no merge ever loses track of a tuple.
"""
import logging
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exceptions import MergeConflict, UnsupportedInput
from .partition import induced_partition
from .relation import DONT_CARE, Relation, Values

logger = logging.getLogger('forge.decomp')

NULL_SYMBOL = 'φ'

Entry = Optional[str]


def format_label(values: Values) -> str:
    if all(len(v) == 1 for v in values):
        return ''.join(values)
    return ','.join(values)


def format_block_name(prefix: str, labels: Sequence[Values]) -> str:
    """``P00∨11`` for binary labels, ``P_{lo,lo∨med,hi}`` once a value is longer."""
    body = '∨'.join(format_label(label) for label in labels)
    if any(len(v) > 1 for label in labels for v in label):
        return f"{prefix}_{{{body}}}"
    return prefix + body


@dataclass(frozen=True)
class ChartRow:
    label: Values
    tids: Tuple[int, ...]

    @property
    def name(self) -> str:
        return format_block_name('Q', [self.label])


@dataclass(frozen=True)
class Column:
    keys: Tuple[int, ...]
    labels: Tuple[Values, ...]
    entries: Tuple[Entry, ...]
    cells: Tuple[Tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return format_block_name('P', self.labels)

    @property
    def members(self) -> FrozenSet[int]:
        return frozenset(t for cell in self.cells for t in cell)

    @property
    def all_null(self) -> bool:
        return all(e is None for e in self.entries)

    @property
    def only_dont_care(self) -> bool:
        return all(e in (None, DONT_CARE) for e in self.entries) and not self.all_null


@dataclass(frozen=True)
class SubChart:
    label: Values
    rows: Tuple[int, ...]
    columns: Tuple[int, ...]


@dataclass(frozen=True)
class SubChartIndex:
    common: Tuple[str, ...]
    groups: Tuple[SubChart, ...]

    def group_of_column(self, column: int) -> int:
        for pos, group in enumerate(self.groups):
            if column in group.columns:
                return pos
        raise KeyError(column)


@dataclass(frozen=True)
class Chart:
    relation: Relation
    bound: Tuple[str, ...]
    free: Tuple[str, ...]
    common: Tuple[str, ...]
    output: str
    rows: Tuple[ChartRow, ...]
    columns: Tuple[Column, ...]
    dropped: Tuple[Column, ...] = ()

    @property
    def width(self) -> int:
        return len(self.columns)

    def column_named(self, name: str) -> int:
        for pos, column in enumerate(self.columns):
            if column.name == name:
                return pos
        raise KeyError(name)

    def has_dont_care(self) -> bool:
        return any(DONT_CARE in c.entries for c in self.columns)

    def subcharts(self) -> Optional[SubChartIndex]:
        """
        The diagonal structure over the shared attributes, or ``None`` if Y and Z are
        disjoint or a column already spans several sub-charts.
        """
        if not self.common:
            return None
        col_pos = [self.bound.index(n) for n in self.common]
        row_pos = [self.free.index(n) for n in self.common]

        groups: Dict[Values, Tuple[List[int], List[int]]] = {}
        for i, row in enumerate(self.rows):
            groups.setdefault(tuple(row.label[p] for p in row_pos), ([], []))[0].append(i)
        for j, column in enumerate(self.columns):
            keys = {tuple(label[p] for p in col_pos) for label in column.labels}
            if len(keys) != 1:
                return None
            groups.setdefault(keys.pop(), ([], []))[1].append(j)

        order = sorted(groups, key=self.relation.sort_key(self.common))
        return SubChartIndex(self.common, tuple(
            SubChart(label, tuple(groups[label][0]), tuple(groups[label][1])) for label in order))


def build_chart(R: Relation, Y: Iterable[str], Z: Iterable[str]) -> Chart:
    """
    Builds the chart M_ZY of the truth table ``R``.

    Rows and columns are sorted by block label in declared domain order.

    :raises UnsupportedInput: if Y ∪ Z is not the input set, the table doesn't have exactly
        one output, or a cell that should hold a tuple is empty or holds several.
    """
    bound, free = R.ordered(Y), R.ordered(Z)
    if len(R.outputs) != 1:
        raise UnsupportedInput(f"a chart needs exactly one output attribute, found {len(R.outputs)}")
    if set(bound) | set(free) != set(R.inputs):
        raise UnsupportedInput(
            f"bound set {','.join(bound)} and free set {','.join(free)} must cover exactly the "
            f"inputs {','.join(R.inputs)}")
    output = R.outputs[0]
    common = tuple(n for n in bound if n in free)

    py, pz = induced_partition(R, bound), induced_partition(R, free)
    col_order = sorted(range(len(py)), key=lambda i: R.sort_key(bound)(py.labels[i]))
    row_order = sorted(range(len(pz)), key=lambda i: R.sort_key(free)(pz.labels[i]))
    col_at = {block: pos for pos, block in enumerate(col_order)}
    row_at = {block: pos for pos, block in enumerate(row_order)}

    cells: Dict[Tuple[int, int], List[int]] = {}
    for tid, _ in R:
        cells.setdefault((row_at[pz.index_of(tid)], col_at[py.index_of(tid)]), []).append(tid)

    col_common = [bound.index(n) for n in common]
    row_common = [free.index(n) for n in common]
    rows = tuple(ChartRow(pz.labels[b], pz.blocks[b]) for b in row_order)
    columns = []
    for j, block in enumerate(col_order):
        label = py.labels[block]
        entries: List[Entry] = []
        col_cells = []
        for i, row in enumerate(rows):
            tids = cells.get((i, j), [])
            agree = [label[p] for p in col_common] == [row.label[p] for p in row_common]
            if not tids:
                if agree:
                    raise UnsupportedInput(
                        f"no tuple for {row.name} ∩ {format_block_name('P', [label])}; "
                        "the truth table is not complete")
                entries.append(None)
            elif len(tids) > 1:
                raise UnsupportedInput(
                    f"{len(tids)} tuples in {row.name} ∩ {format_block_name('P', [label])}")
            else:
                entries.append(R.value(tids[0], output))
            col_cells.append(tuple(tids))
        columns.append(Column((j,), (label,), tuple(entries), tuple(col_cells)))

    chart = Chart(R, bound, free, common, output, rows, tuple(columns))
    if common and chart.subcharts() is None:
        raise UnsupportedInput("chart has no diagonal structure over the shared attributes")
    return chart


def _check_columns(ch: Chart, *indices: int) -> None:
    for i in indices:
        if ch.columns[i].all_null:
            raise UnsupportedInput(f"column {ch.columns[i].name} is empty")


def columns_equivalent(ch: Chart, i: int, j: int) -> bool:
    """
    Same output value in every row and the same empty cells.

    :raises UnsupportedInput: if one of the columns holds a don't-care, use
        :func:`columns_compatible` for those.
    """
    _check_columns(ch, i, j)
    a, b = ch.columns[i], ch.columns[j]
    if DONT_CARE in a.entries or DONT_CARE in b.entries:
        raise UnsupportedInput(
            f"{a.name} or {b.name} holds a don't-care, equivalence is undefined")
    return a.entries == b.entries


def columns_compatible(ch: Chart, i: int, j: int) -> bool:
    """Every row agrees or has a don't-care on one side. Empty cells have to line up."""
    _check_columns(ch, i, j)
    for x, y in zip(ch.columns[i].entries, ch.columns[j].entries):
        if (x is None) != (y is None):
            return False
        if x is not None and x != y and DONT_CARE not in (x, y):
            return False
    return True


def _combine(ch: Chart, columns: Sequence[Column], orthogonal: bool) -> Column:
    entries: List[Entry] = []
    cells = []
    for row in range(len(ch.rows)):
        values = [c.entries[row] for c in columns]
        filled = [v for v in values if v is not None]
        concrete = {v for v in filled if v != DONT_CARE}
        if len(concrete) > 1:
            raise MergeConflict(
                f"merging {', '.join(c.name for c in columns)} puts {sorted(concrete)} "
                f"into row {ch.rows[row].name}")
        if orthogonal and len(filled) > 1:
            raise MergeConflict(f"columns overlap in row {ch.rows[row].name}")
        if not orthogonal and filled and len(filled) != len(values):
            raise MergeConflict(f"empty cells don't line up in row {ch.rows[row].name}")
        if concrete:
            entries.append(concrete.pop())
        else:
            entries.append(DONT_CARE if filled else None)
        cells.append(tuple(sorted(t for c in columns for t in c.cells[row])))

    pairs = sorted(zip((k for c in columns for k in c.keys),
                       (label for c in columns for label in c.labels)))
    return Column(tuple(k for k, _ in pairs), tuple(label for _, label in pairs),
                  tuple(entries), tuple(cells))


def merge_column_groups(ch: Chart, groups: Iterable[Iterable[int]],
                        orthogonal: bool = False) -> Chart:
    """
    Merges every group of column indices into one column at once.

    Merged columns take the place of their leftmost member. With ``orthogonal`` the columns
    must not share a non-empty row (merging across sub-charts); otherwise they must be
    pairwise compatible.

    :raises MergeConflict: if two concrete values would meet in one cell.
    """
    groups = [sorted(set(g)) for g in groups]
    seen: set = set()
    for group in groups:
        if seen.intersection(group):
            raise ValueError("column groups overlap")
        seen.update(group)
        if not orthogonal:
            for i, j in combinations(group, 2):
                if not columns_compatible(ch, i, j):
                    raise MergeConflict(
                        f"{ch.columns[i].name} and {ch.columns[j].name} are not compatible")

    leader = {group[0]: group for group in groups if group}
    columns = []
    for pos, column in enumerate(ch.columns):
        if pos in leader:
            group = leader[pos]
            merged = column if len(group) == 1 else \
                _combine(ch, [ch.columns[i] for i in group], orthogonal)
            if len(group) > 1:
                logger.debug('merged %s into %s', ', '.join(ch.columns[i].name for i in group),
                             merged.name)
            columns.append(merged)
        elif pos not in seen:
            columns.append(column)
    return replace(ch, columns=tuple(columns))


def merge_columns(ch: Chart, cols: Iterable[int]) -> Chart:
    """Merges pairwise compatible (or equivalent) columns into one."""
    return merge_column_groups(ch, [cols])


def merge_orthogonal(ch: Chart, cols: Iterable[int]) -> Chart:
    """Merges columns of different sub-charts whose non-empty rows don't overlap."""
    return merge_column_groups(ch, [cols], orthogonal=True)


def drop_dontcare_columns(ch: Chart) -> Chart:
    """Removes columns whose every non-empty cell is a don't-care and remembers them."""
    dropped = tuple(c for c in ch.columns if c.only_dont_care)
    if not dropped:
        return ch
    logger.debug('dropping don\'t-care columns %s', ', '.join(c.name for c in dropped))
    return replace(ch, columns=tuple(c for c in ch.columns if not c.only_dont_care),
                   dropped=ch.dropped + dropped)


def expand(ch: Chart) -> Dict[Tuple[int, int], Entry]:
    """
    Reads every cell back from the relation, keyed by (row, original column position).
    Charts built from the same table expand to the same mapping however they were merged.
    """
    out: Dict[Tuple[int, int], Entry] = {}
    for column in ch.columns + ch.dropped:
        for row, cell in enumerate(column.cells):
            for tid in cell:
                label = ch.relation.restrict(tid, ch.bound)
                key = column.keys[column.labels.index(label)]
                out[(row, key)] = ch.relation.value(tid, ch.output)
        for key, label in zip(column.keys, column.labels):
            for row in range(len(ch.rows)):
                out.setdefault((row, key), None)
    return out


def render_chart(ch: Chart, title: Optional[str] = None) -> str:
    """
    Text rendering of the chart, rows and columns of one sub-chart kept together.
    Empty cells print as φ, don't-cares as ``-``.
    """
    if not ch.columns:
        return '\n'.join(([title] if title else []) + ['(no columns)']) + '\n'
    index = ch.subcharts()
    if index is not None:
        row_order = [r for g in index.groups for r in g.rows]
        col_order = [c for g in index.groups for c in g.columns]
    else:
        row_order = list(range(len(ch.rows)))
        col_order = list(range(len(ch.columns)))

    head = [''] + [ch.columns[j].name for j in col_order]
    body = [[ch.rows[i].name] + [
        NULL_SYMBOL if ch.columns[j].entries[i] is None else str(ch.columns[j].entries[i])
        for j in col_order] for i in row_order]
    widths = [max(len(line[k]) for line in [head] + body) for k in range(len(head))]

    lines = []
    if title:
        lines.append(title)
    lines.append(f"rows {','.join(ch.free) or '-'} / columns {','.join(ch.bound)}")
    for line in [head] + body:
        lines.append('  '.join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return '\n'.join(lines) + '\n'
