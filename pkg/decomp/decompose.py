"""
Functional decomposition of truth tables: ``F = h(g(Y), Z)``.

Four strategies share one pipeline: build the chart M_ZY, merge its columns into the
columns of M_ZW, read the bridge partition π_W off the merged columns, add W to the table
and project it into T_g and T_h. Every result is checked again with the dependency module
before it is returned.

- :func:`fda_alpha` merges equivalent columns (disjoint Y and Z).
- :func:`fda_beta` runs one alpha pass per bound set and shares a single h table.
- :func:`fda_gamma` handles bound and free sets sharing attributes (diagonal charts).
- :func:`fda_delta` handles don't-cares through a minimum clique partition.
"""
import itertools
import logging
import random
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from forge.utils import ceil_log2

from .chart import (Chart, build_chart, columns_equivalent, drop_dontcare_columns,
                    merge_column_groups)
from .cliquecover import (CliquePartition, build_compat_graph, mcp_enumerate, mcp_exact,
                          mcp_greedy, set_partitions)
from .conf import decomp_setting
from .dependency import holds_fd, holds_mvd
from .exceptions import (SearchBoundExceeded, UniverseMismatch, UnsupportedInput,
                         VerificationFailed)
from .partition import Partition, canonicalize, refines
from .relation import (DONT_CARE, Attribute, Domain, Relation, Role, Values, natural_join,
                       project, relations_equal)
from .types import (Algorithm, Encoding, McpMode, MultiVerificationReport,
                    VerificationReport)

logger = logging.getLogger('forge.decomp')


@dataclass(frozen=True)
class Decomposition:
    algorithm: Algorithm
    relation: Relation
    bound: Tuple[str, ...]
    free: Tuple[str, ...]
    # charts in the order they were produced, the last one is M_ZW
    stages: Tuple[Tuple[str, Chart], ...]
    bridge_partition: Partition
    w_names: Tuple[str, ...]
    w_assignment: Mapping[int, Values]
    with_w: Relation
    table_g: Relation
    table_h: Relation
    verification: VerificationReport

    @property
    def chart(self) -> Chart:
        return self.stages[-1][1]

    @property
    def common(self) -> Tuple[str, ...]:
        return tuple(n for n in self.bound if n in self.free)

    @property
    def k(self) -> int:
        return len(self.bridge_partition)

    @property
    def bits(self) -> int:
        return ceil_log2(self.k)

    @property
    def w_domain(self) -> Domain:
        """The value space of W. Binary bridges join their bit codes, most significant first."""
        domains = [self.with_w.attribute(n).domain.values for n in self.w_names]
        return Domain(','.join(self.w_names), tuple(''.join(c) for c in itertools.product(*domains)))

    @property
    def degenerate(self) -> bool:
        """Every column of M_ZY was a don't-care column, so the function is constant '-'."""
        return not self.chart.columns

    @property
    def nontrivial(self) -> bool:
        return not self.degenerate and is_nontrivial(self.relation, self.bound, self.k)

    def block_names(self) -> List[str]:
        """Names of the merged chart columns, in bridge partition block order."""
        names = []
        for block in self.bridge_partition:
            members = set(block)
            names.append(' ∨ '.join(
                c.name for c in self.chart.columns if c.members and c.members <= members))
        return names


@dataclass(frozen=True)
class MultiDecomposition:
    relation: Relation
    parts: Tuple[Decomposition, ...]
    free: Tuple[str, ...]
    with_w: Relation
    table_h: Relation
    verification: MultiVerificationReport


def is_nontrivial(R: Relation, Y: Sequence[str], k: int) -> bool:
    """Encoding W takes fewer bits than encoding the bound set itself."""
    size = 1
    for name in Y:
        size *= len(R.attribute(name).domain)
    return ceil_log2(k) < ceil_log2(size)


# region bridge variables

def w_attributes(w_name: str, k: int, encoding: Encoding = Encoding.SINGLE) -> List[Attribute]:
    """
    The bridge attributes for ``k`` blocks: one attribute with ``k`` codes, or
    ``ceil(log2 k)`` binary attributes with the most significant bit first.
    """
    if encoding == Encoding.SINGLE:
        codes = tuple(str(i) for i in range(max(k, 2)))
        return [Attribute(Domain(w_name, codes), Role.BRIDGE)]
    width = max(1, ceil_log2(k))
    joiner = '_' if w_name[-1:].isdigit() else ''
    return [Attribute(Domain.binary(f"{w_name}{joiner}{bit}"), Role.BRIDGE)
            for bit in reversed(range(width))]


def w_code(index: int, k: int, encoding: Encoding = Encoding.SINGLE) -> Values:
    if encoding == Encoding.SINGLE:
        return (str(index),)
    return tuple(format(index, f"0{max(1, ceil_log2(k))}b"))


def assign_w(R: Relation, pw: Partition, w_name: Optional[str] = None,
             encoding: Encoding = Encoding.SINGLE) -> Relation:
    """
    Adds the bridge attribute(s) to ``R``. Block ``i`` of ``pw`` (canonical order) gets
    code ``i``.

    :raises UniverseMismatch: if ``pw`` doesn't partition the tuple ids of ``R``.
    :raises SchemaError: if a bridge name is already used.
    """
    if pw.universe != frozenset(R.tids):
        raise UniverseMismatch("the bridge partition doesn't cover the tuples of the table")
    w_name = w_name or decomp_setting('W_NAME')
    k = len(pw)
    values = {tid: w_code(pw.index_of(tid), k, encoding) for tid in R.tids}
    return R.with_columns(w_attributes(w_name, k, encoding), values)


def _fresh_name(R: Relation, base: str) -> str:
    name = base
    while name in R:
        name += "'"
    return name

# endregion


# region chart merging

def merge_equivalent_columns(ch: Chart, within: Optional[Iterable[int]] = None,
                             rng: Optional[random.Random] = None) -> Chart:
    """
    Merges equivalent columns until none are left, optionally only among ``within``.
    ``rng`` shuffles the order columns are visited in; the result doesn't depend on it.
    """
    order = list(within) if within is not None else list(range(ch.width))
    if rng is not None:
        rng.shuffle(order)
    groups: List[List[int]] = []
    for column in order:
        for group in groups:
            if columns_equivalent(ch, group[0], column):
                group.append(column)
                break
        else:
            groups.append([column])
    return merge_column_groups(ch, groups)


def chart_partition(ch: Chart) -> Partition:
    """
    π_W read off a merged chart: one block per column. Tuples of dropped don't-care
    columns join the first block.
    """
    spare = tuple(sorted(t for c in ch.dropped for t in c.members))
    blocks = [tuple(sorted(c.members)) for c in ch.columns]
    if not blocks:
        return Partition.top(spare)
    pw = canonicalize(blocks)
    if spare:
        pw = canonicalize((pw.blocks[0] + spare,) + pw.blocks[1:])
    return pw


def _completed_outputs(ch: Chart, pw: Partition) -> Dict[int, str]:
    """
    The output value every tuple gets from its merged cell; dropped tuples read the cells
    of the first block's column.
    """
    values: Dict[int, str] = {}
    first = None
    for column in ch.columns:
        for entry, cell in zip(column.entries, column.cells):
            for tid in cell:
                values[tid] = entry  # type: ignore
        if pw.blocks and column.members <= set(pw.blocks[0]):
            first = column
    for column in ch.dropped:
        for row, cell in enumerate(column.cells):
            for tid in cell:
                values[tid] = first.entries[row] if first is not None else DONT_CARE  # type: ignore
    return values

# endregion


# region verification

def _agrees(R: Relation, recomposed: Relation) -> bool:
    """Same input vectors, one output each, equal to R's wherever R's is specified."""
    output = R.outputs[0]
    got: Dict[Values, set] = {}
    for tid, _ in recomposed:
        got.setdefault(recomposed.restrict(tid, R.inputs), set()).add(recomposed.value(tid, output))
    expected = {R.restrict(tid, R.inputs): R.value(tid, output) for tid, _ in R}
    if set(got) != set(expected):
        return False
    for key, value in expected.items():
        if len(got[key]) != 1 or (value != DONT_CARE and got[key] != {value}):
            return False
    return True


def _single_report(R: Relation, RW: Relation, Y: Sequence[str], Z: Sequence[str],
                   w_names: Sequence[str], g: Relation, h: Relation) -> VerificationReport:
    output = R.outputs[0]
    common = [n for n in Y if n in Z]
    rest = [n for n in Y if n not in Z]
    joined = natural_join(g, h)
    return VerificationReport(
        fd_y_w=holds_fd(RW, Y, w_names),
        fd_wz_f=holds_fd(RW, list(w_names) + list(Z), [output]),
        mvd_ok=holds_mvd(RW, list(w_names) + common, rest, skip_dont_care=False).holds,
        join_roundtrip=relations_equal(RW, joined),
        recomposition=_agrees(R, project(joined, R.inputs + R.outputs)),
    )


def _valid_bridge(R: Relation, Y: Sequence[str], Z: Sequence[str], candidate: Partition) -> bool:
    name = _fresh_name(R, decomp_setting('W_NAME'))
    RW = assign_w(R, candidate, name)
    common = [n for n in Y if n in Z]
    return (holds_fd(RW, Y, [name]).holds
            and holds_fd(RW, [name] + list(Z), R.outputs).holds
            and holds_mvd(RW, [name] + common, [n for n in Y if n not in Z]).holds)


def _column_partitions(R: Relation, Y: Sequence[str], Z: Sequence[str],
                       max_blocks: Optional[int] = None) -> Iterable[Partition]:
    columns = [sorted(c.members) for c in build_chart(R, Y, Z).columns]
    for blocks in set_partitions(len(columns), max_blocks):
        yield canonicalize([t for i in block for t in columns[i]] for block in blocks)


def check_maximality(R: Relation, Y: Sequence[str], Z: Sequence[str], pw: Partition) -> bool:
    """Every valid bridge partition coarser than π_Y refines ``pw``."""
    return all(refines(candidate, pw) for candidate in _column_partitions(R, Y, Z)
               if _valid_bridge(R, Y, Z, candidate))


def check_minimality(R: Relation, Y: Sequence[str], Z: Sequence[str], pw: Partition) -> bool:
    """No valid bridge partition coarser than π_Y has fewer blocks than ``pw``."""
    if len(pw) <= 1:
        return True
    return not any(_valid_bridge(R, Y, Z, candidate)
                   for candidate in _column_partitions(R, Y, Z, max_blocks=len(pw) - 1))


def recompose(d: Decomposition) -> Relation:
    """T_g ⋈ T_h projected back onto the inputs and the output of the original table."""
    return project(natural_join(d.table_g, d.table_h), d.relation.inputs + d.relation.outputs)


def recompose_multi(md: MultiDecomposition) -> Relation:
    joined = md.parts[0].table_g
    for part in md.parts[1:]:
        joined = natural_join(joined, part.table_g)
    joined = natural_join(joined, md.table_h)
    return project(joined, md.relation.inputs + md.relation.outputs)


def verify_tables(R: Relation, g_tables: Sequence[Relation], h_table: Relation):
    """
    Checks externally supplied T_g and T_h tables against the truth table ``R``.

    One g table gives a :class:`VerificationReport`, several give a
    :class:`MultiVerificationReport`.

    :raises UnsupportedInput: if the tables don't fit together.
    :raises SchemaError: if shared attributes have different domains.
    """
    if not g_tables:
        raise UnsupportedInput("at least one g table is needed")
    if len(R.outputs) != 1 or h_table.outputs != R.outputs:
        raise UnsupportedInput(f"the h table must have the output {','.join(R.outputs)}")
    free = h_table.inputs
    bridges = [g.bridges for g in g_tables]
    if any(not b for b in bridges) or any(set(b) - set(h_table.bridges) for b in bridges):
        raise UnsupportedInput("every g table needs bridge attributes that also appear in h")
    for g in g_tables:
        unknown = set(g.inputs) - set(R.inputs)
        if unknown:
            raise UnsupportedInput(f"g table uses unknown inputs {', '.join(sorted(unknown))}")
    unknown = set(free) - set(R.inputs)
    if unknown:
        raise UnsupportedInput(f"h table uses unknown inputs {', '.join(sorted(unknown))}")

    output = R.outputs[0]
    RW = R
    for g in g_tables:
        RW = natural_join(RW, project(g, g.inputs + g.bridges))
    joined = h_table
    for g in reversed(g_tables):
        joined = natural_join(g, joined)
    all_w = [n for b in bridges for n in b]

    # don't-cares of R take the value h gives them
    h_values = {joined.restrict(t, R.inputs): joined.value(t, output) for t, _ in joined}
    RW = RW.with_values(output, {
        t: h_values[RW.restrict(t, R.inputs)] for t, _ in RW
        if RW.value(t, output) == DONT_CARE and RW.restrict(t, R.inputs) in h_values})
    recomposition = _agrees(R, project(joined, R.inputs + R.outputs))
    roundtrip = relations_equal(RW, joined)

    if len(g_tables) == 1:
        Y = g_tables[0].inputs
        common = [n for n in Y if n in free]
        return VerificationReport(
            fd_y_w=holds_fd(RW, Y, all_w),
            fd_wz_f=holds_fd(RW, all_w + list(free), [output]),
            mvd_ok=holds_mvd(RW, all_w + common, [n for n in Y if n not in free],
                             skip_dont_care=False).holds,
            join_roundtrip=roundtrip,
            recomposition=recomposition,
        )
    fd_parts, mvd_parts = [], []
    for g, w in zip(g_tables, bridges):
        fd_parts.append(holds_fd(RW, g.inputs, w))
        own = project(RW, R.names + w)
        mvd_parts.append(holds_mvd(own, w, g.inputs, skip_dont_care=False).holds)
    return MultiVerificationReport(
        fd_parts=fd_parts, mvd_parts=mvd_parts,
        fd_wz_f=holds_fd(RW, all_w + list(free), [output]),
        join_roundtrip=roundtrip, recomposition=recomposition)

# endregion


# region algorithms

def _sets(R: Relation, Y: Iterable[str], Z: Optional[Iterable[str]]) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    if len(R.outputs) != 1:
        raise UnsupportedInput(f"decomposition needs exactly one output, found {len(R.outputs)}")
    if R.bridges:
        raise UnsupportedInput("the table already has bridge attributes")
    bound = R.ordered(Y)
    if not bound:
        raise UnsupportedInput("the bound set is empty")
    free = R.ordered(Z) if Z is not None else tuple(n for n in R.inputs if n not in bound)
    if set(bound) | set(free) != set(R.inputs):
        raise UnsupportedInput(
            f"bound set {','.join(bound)} and free set {','.join(free)} must cover the inputs")
    return bound, free


def _finish(algorithm: Algorithm, R: Relation, filled: Relation, bound, free,
            stages: Sequence[Tuple[str, Chart]], encoding: Encoding,
            w_name: Optional[str]) -> Decomposition:
    w_name = w_name or decomp_setting('W_NAME')
    pw = chart_partition(stages[-1][1])
    RW = assign_w(filled, pw, w_name, encoding)
    w_attrs = w_attributes(w_name, len(pw), encoding)
    w_names = tuple(a.name for a in w_attrs)
    g = project(RW, bound + w_names)
    h = project(RW, w_names + free + R.outputs)
    d = Decomposition(
        algorithm=algorithm, relation=R, bound=bound, free=free, stages=tuple(stages),
        bridge_partition=pw,
        w_names=w_names,
        w_assignment={tid: RW.restrict(tid, w_names) for tid in RW.tids},
        with_w=RW, table_g=g, table_h=h,
        verification=_single_report(R, RW, bound, free, w_names, g, h),
    )
    logger.info('%s: Y=%s Z=%s k=%d bits=%d nontrivial=%s', algorithm.value, ','.join(bound),
                ','.join(free), d.k, d.bits, d.nontrivial)
    return d


def _with_check(d: Decomposition, **flags: Optional[bool]) -> Decomposition:
    return replace(d, verification=d.verification.copy(update=flags))


def fda_alpha(R: Relation, Y: Iterable[str], Z: Optional[Iterable[str]] = None, *,
              encoding: Encoding = Encoding.SINGLE, w_name: Optional[str] = None,
              rng: Optional[random.Random] = None, check_optimal: bool = True) -> Decomposition:
    """
    Disjoint decomposition of a completely specified table by merging equivalent columns.

    ``Z`` defaults to the inputs outside ``Y``. Maximality of π_W is brute-forced when the
    chart has at most ``MAXIMALITY_CHECK_COLUMNS`` columns.

    :raises UnsupportedInput: for don't-cares or a bound set sharing attributes with Z.
    """
    bound, free = _sets(R, Y, Z)
    if set(bound) & set(free):
        raise UnsupportedInput("bound and free set overlap, use fda_gamma")
    if R.has_dont_care():
        raise UnsupportedInput("the table has don't-cares, use fda_delta")
    chart = build_chart(R, bound, free)
    merged = merge_equivalent_columns(chart, rng=rng)
    d = _finish(Algorithm.ALPHA, R, R, bound, free, [('M_ZY', chart), ('M_ZW', merged)],
                encoding, w_name)
    if check_optimal and chart.width <= decomp_setting('MAXIMALITY_CHECK_COLUMNS'):
        d = _with_check(d, maximal=check_maximality(R, bound, free, d.bridge_partition))
    return d


def fda_beta(R: Relation, bound_sets: Sequence[Iterable[str]], Z: Optional[Iterable[str]] = None,
             *, encoding: Encoding = Encoding.SINGLE, w_name: Optional[str] = None,
             rng: Optional[random.Random] = None) -> MultiDecomposition:
    """
    Multiple decomposition ``F = h(g1(Y1), ..., gK(YK), Z)``. Each ``g_k`` comes from an
    alpha pass against the free set ``X - Y_k``; the bridges are named ``W1`` to ``WK``.

    :raises UnsupportedInput: for overlapping bound sets or don't-cares.
    :raises VerificationFailed: if ``W1..WK Z -> F`` does not hold.
    """
    if not bound_sets:
        raise UnsupportedInput("at least one bound set is needed")
    if R.has_dont_care():
        raise UnsupportedInput("multiple decomposition needs a completely specified table")
    sets = [R.ordered(Y) for Y in bound_sets]
    used: set = set()
    for Y in sets:
        if used & set(Y):
            raise UnsupportedInput(f"bound sets overlap on {', '.join(sorted(used & set(Y)))}")
        used |= set(Y)
    free = R.ordered(Z) if Z is not None else tuple(n for n in R.inputs if n not in used)
    if used & set(free) or used | set(free) != set(R.inputs):
        raise UnsupportedInput("bound sets and free set must split the inputs")
    w_name = w_name or decomp_setting('W_NAME')

    parts = []
    RW = R
    for number, Y in enumerate(sets, start=1):
        rest = tuple(n for n in R.inputs if n not in Y)
        part = fda_alpha(R, Y, rest, encoding=encoding, w_name=f"{w_name}{number}", rng=rng)
        parts.append(part)
        RW = assign_w(RW, part.bridge_partition, f"{w_name}{number}", encoding)
    all_w = [n for part in parts for n in part.w_names]
    table_h = project(RW, all_w + list(free) + list(R.outputs))

    joint = holds_fd(RW, all_w + list(free), R.outputs)
    if not joint.holds:
        raise VerificationFailed(f"bridges and free set don't determine the output: "
                                 f"{joint.describe()}", joint)

    joined = parts[0].table_g
    for part in parts[1:]:
        joined = natural_join(joined, part.table_g)
    joined = natural_join(joined, table_h)
    report = MultiVerificationReport(
        fd_parts=[p.verification.fd_y_w for p in parts],
        mvd_parts=[p.verification.mvd_ok for p in parts],
        fd_wz_f=joint,
        join_roundtrip=relations_equal(RW, joined),
        recomposition=_agrees(R, project(joined, R.inputs + R.outputs)),
    )
    logger.info('beta: %d bound sets, k=%s', len(parts), ','.join(str(p.k) for p in parts))
    return MultiDecomposition(R, tuple(parts), free, RW, table_h, report)


def _gamma_charts(R: Relation, bound, free, rng: Optional[random.Random]):
    chart = build_chart(R, bound, free)
    index = chart.subcharts()
    groups: List[List[int]] = []
    for sub in index.groups:  # type: ignore
        merged = merge_equivalent_columns(chart, within=sub.columns, rng=rng)
        # read the grouping back from the merged columns, merges happen once below
        keys = [c.keys for c in merged.columns if set(c.keys) <= set(sub.columns)]
        groups += [list(k) for k in keys]
    return chart, merge_column_groups(chart, groups)


def _gamma_slots(ch: Chart) -> Tuple[List[int], List[List[int]]]:
    index = ch.subcharts()
    groups = sorted((list(g.columns) for g in index.groups),  # type: ignore
                    key=lambda cols: -len(cols))
    return groups[0], groups[1:]


def _gamma_decomposition(R, bound, free, chart, merged_v, mapping, encoding, w_name,
                         check_optimal) -> Decomposition:
    merged_w = merge_column_groups(merged_v, mapping, orthogonal=True)
    d = _finish(Algorithm.GAMMA, R, R, bound, free,
                [('M_ZY', chart), ('M_ZV', merged_v), ('M_ZW', merged_w)], encoding, w_name)
    if check_optimal and chart.width <= decomp_setting('MINIMALITY_CHECK_COLUMNS'):
        d = _with_check(d, minimal=check_minimality(R, bound, free, d.bridge_partition))
    return d


def _check_gamma(R: Relation) -> None:
    if R.has_dont_care():
        raise UnsupportedInput("the table has don't-cares, use fda_delta")


def fda_gamma(R: Relation, Y: Iterable[str], Z: Iterable[str], *,
              encoding: Encoding = Encoding.SINGLE, w_name: Optional[str] = None,
              rng: Optional[random.Random] = None, check_optimal: bool = True) -> Decomposition:
    """
    Non-disjoint decomposition, Y and Z sharing the attributes C.

    Equivalent columns are merged inside every sub-chart first (M_ZV). Then the i-th column
    of every sub-chart is merged with the i-th column of the widest one, so π_W ends up with
    as many blocks as the widest sub-chart has columns.

    Without shared attributes this is :func:`fda_alpha`.
    """
    bound, free = _sets(R, Y, Z)
    if not set(bound) & set(free):
        logger.warning('bound and free set are disjoint, running fda_alpha instead')
        return fda_alpha(R, bound, free, encoding=encoding, w_name=w_name, rng=rng,
                         check_optimal=check_optimal)
    _check_gamma(R)
    chart, merged_v = _gamma_charts(R, bound, free, rng)
    slots, others = _gamma_slots(merged_v)
    mapping = [[slot] + [group[i] for group in others if i < len(group)]
               for i, slot in enumerate(slots)]
    return _gamma_decomposition(R, bound, free, chart, merged_v, mapping, encoding, w_name,
                                check_optimal)


def enumerate_gamma(R: Relation, Y: Iterable[str], Z: Iterable[str], limit: Optional[int] = None,
                    *, encoding: Encoding = Encoding.SINGLE,
                    w_name: Optional[str] = None) -> List[Decomposition]:
    """
    Every way of merging the sub-chart columns of M_ZV into as many columns as the widest
    sub-chart has, with distinct bridge partitions. The first one is :func:`fda_gamma`'s.
    """
    bound, free = _sets(R, Y, Z)
    if not set(bound) & set(free):
        return [fda_gamma(R, bound, free, encoding=encoding, w_name=w_name)]
    _check_gamma(R)
    limit = limit if limit is not None else decomp_setting('GAMMA_ENUMERATE_LIMIT')
    chart, merged_v = _gamma_charts(R, bound, free, None)
    slots, others = _gamma_slots(merged_v)

    found: List[Decomposition] = []
    seen = set()
    choices = [itertools.permutations(range(len(slots)), len(group)) for group in others]
    for combination in itertools.product(*choices):
        mapping = [[slot] for slot in slots]
        for group, targets in zip(others, combination):
            for column, target in zip(group, targets):
                mapping[target].append(column)
        d = _gamma_decomposition(R, bound, free, chart, merged_v, mapping, encoding, w_name,
                                 check_optimal=not found)
        if d.bridge_partition in seen:
            continue
        if len(found) == limit:
            logger.warning('more than %d merge combinations, listing the first %d', limit, limit)
            break
        seen.add(d.bridge_partition)
        found.append(d)
    return found


def _delta_partitions(ch: Chart, mode: McpMode, limit: Optional[int]) -> List[CliquePartition]:
    graph = build_compat_graph(ch)
    if mode == McpMode.GREEDY:
        return [mcp_greedy(graph)]
    try:
        if mode == McpMode.ENUMERATE:
            return mcp_enumerate(graph, limit)
        return [mcp_exact(graph)]
    except SearchBoundExceeded as e:
        logger.warning('%s Falling back to the greedy clique partition.', e)
        return [mcp_greedy(graph)]


def fda_delta(R: Relation, Y: Iterable[str], Z: Optional[Iterable[str]] = None, *,
              mode: McpMode = McpMode.EXACT, limit: Optional[int] = None,
              encoding: Encoding = Encoding.SINGLE,
              w_name: Optional[str] = None) -> List[Decomposition]:
    """
    Decomposition of an incompletely specified table.

    Columns holding nothing but don't-cares are dropped, the remaining columns are grouped
    by a minimum clique partition of their compatible graph and every clique becomes one
    block of π_W. With ``mode=enumerate`` every minimum clique partition (up to ``limit``)
    gives its own decomposition.

    The table with W carries completed outputs: every tuple takes the value of its merged
    cell, so don't-cares remain only in cells that were don't-care in every merged column.

    :raises UnsupportedInput: if Y and Z overlap or the table has missing input vectors.
    :raises MergeConflict: if a clique can't be merged (never expected).
    """
    bound, free = _sets(R, Y, Z)
    if set(bound) & set(free):
        raise UnsupportedInput("bound and free set overlap, fda_delta needs disjoint sets")
    chart = build_chart(R, bound, free)
    reduced = drop_dontcare_columns(chart)
    if not reduced.columns:
        logger.warning("every column of M_ZY holds only don't-cares, the decomposition is degenerate")

    results = []
    for partition in _delta_partitions(reduced, mode, limit):
        merged = merge_column_groups(reduced, partition.cliques)
        pw = chart_partition(merged)
        outputs = _completed_outputs(merged, pw)
        output = R.outputs[0]
        filled = R.with_values(output, {t: v for t, v in outputs.items()
                                        if v != R.value(t, output)})
        stages = [('M_ZY', chart)]
        if reduced is not chart:
            stages.append(('M_ZY reduced', reduced))
        stages.append(('M_ZW', merged))
        results.append(_finish(Algorithm.DELTA, R, filled, bound, free, stages, encoding, w_name))
    return results

# endregion
