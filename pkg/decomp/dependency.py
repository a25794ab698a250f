"""
Decision procedures for functional and multi-valued dependencies.

Every check is computed twice (or three times) by independent means: straight from the
definition on tuples, from the shape of the bipartite graph of two partitions, and from
partition refinement or a lossless join. Disagreement raises :class:`InconsistentResult`.
"""
from typing import Dict, Iterable, List, Optional, Tuple

from .bigraph import build_graph, connected_components, is_fork, is_uniform
from .exceptions import InconsistentResult, UnsupportedInput
from .partition import induced_partition, refines
from .relation import DONT_CARE, Relation, Values, natural_join, project, relations_equal
from .types import DependencyReport


Witness = Optional[Tuple[int, int]]


def _specified(R: Relation, names: Iterable[str]) -> Relation:
    names = tuple(names)
    return R.subset(t for t, _ in R if DONT_CARE not in R.restrict(t, names))


def _fd_witness(R: Relation, lhs: Tuple[str, ...], rhs: Tuple[str, ...]) -> Witness:
    first: Dict[Values, Tuple[int, Values]] = {}
    for tid, _ in R:
        x, y = R.restrict(tid, lhs), R.restrict(tid, rhs)
        seen = first.setdefault(x, (tid, y))
        if seen[1] != y:
            return seen[0], tid
    return None


def holds_fd(R: Relation, X: Iterable[str], Y: Iterable[str]) -> DependencyReport:
    """
    Checks ``X -> Y``. Tuples with a don't-care in ``Y`` take no part in the check.

    :raises SchemaError: for unknown attributes.
    :raises InconsistentResult: if definition, fork test and refinement disagree.
    """
    lhs, rhs = R.ordered(X), R.ordered(Y)
    S = _specified(R, rhs)
    witness = _fd_witness(S, lhs, rhs)
    px, py = induced_partition(S, lhs), induced_partition(S, rhs)
    by_graph = is_fork(build_graph(px, py))
    by_lattice = refines(px, py)
    if not (witness is None) == by_graph == by_lattice:
        raise InconsistentResult(
            f"FD {lhs} -> {rhs}: definition={witness is None}, fork={by_graph}, "
            f"refinement={by_lattice}")
    return DependencyReport(kind='FD', lhs=list(lhs), rhs=list(rhs),
                            holds=witness is None, witness=witness)


def _split(R: Relation, X: Iterable[str], Y: Iterable[str]):
    lhs, rhs = R.ordered(X), R.ordered(Y)
    overlap = set(lhs) & set(rhs)
    if overlap:
        raise UnsupportedInput(
            f"the sides of a multi-valued dependency must be disjoint, both have "
            f"{', '.join(sorted(overlap))}")
    rest = tuple(n for n in R.names if n not in lhs and n not in rhs)
    return lhs, rhs, rest


def _mvd_witness(R: Relation, lhs, rhs, rest) -> Witness:
    present = {(R.restrict(t, lhs), R.restrict(t, rhs), R.restrict(t, rest)) for t, _ in R}
    groups: Dict[Values, List[int]] = {}
    for tid, _ in R:
        groups.setdefault(R.restrict(tid, lhs), []).append(tid)
    for t1, _ in R:
        x, y1 = R.restrict(t1, lhs), R.restrict(t1, rhs)
        for t2 in groups[x]:
            if (x, y1, R.restrict(t2, rest)) not in present:
                return t1, t2
    return None


def _mvd_by_graph(R: Relation, lhs, rhs, rest) -> bool:
    graph = build_graph(induced_partition(R, lhs + rhs), induced_partition(R, lhs + rest))
    components = connected_components(graph)
    if not is_uniform(graph, components):
        return False
    # every component has to stand for exactly one X value and vice versa
    x_values = set()
    for comp in components:
        values = {R.restrict(t, lhs) for t in comp.tids(graph)}
        if len(values) != 1 or values & x_values:
            return False
        x_values |= values
    return True


def _mvd_by_join(R: Relation, lhs, rhs, rest) -> bool:
    joined = natural_join(project(R, lhs + rhs), project(R, lhs + rest))
    return relations_equal(R, joined)


def holds_mvd(R: Relation, X: Iterable[str], Y: Iterable[str],
              skip_dont_care: bool = True) -> DependencyReport:
    """
    Checks ``X ->> Y`` against the complement Z of X and Y over the whole schema.

    :param skip_dont_care: leave out tuples holding a don't-care. With ``False`` the
        don't-care marker is compared like any other value.
    :raises UnsupportedInput: if X and Y overlap.
    :raises InconsistentResult: if the definition, the uniform graph test and the lossless
        join disagree.
    """
    lhs, rhs, rest = _split(R, X, Y)
    S = R.subset(t for t, _ in R if R.is_specified(t)) if skip_dont_care else R
    witness = _mvd_witness(S, lhs, rhs, rest)
    by_graph = _mvd_by_graph(S, lhs, rhs, rest)
    by_join = _mvd_by_join(S, lhs, rhs, rest)
    if not (witness is None) == by_graph == by_join:
        raise InconsistentResult(
            f"MVD {lhs} ->> {rhs}: definition={witness is None}, uniform={by_graph}, "
            f"lossless={by_join}")
    return DependencyReport(kind='MVD', lhs=list(lhs), rhs=list(rhs),
                            holds=witness is None, witness=witness)


def lossless_check(R: Relation, X: Iterable[str], Y: Iterable[str], Z: Iterable[str],
                   skip_dont_care: bool = True) -> bool:
    """
    ``R = R[XY] ⋈ R[XZ]``.

    :raises UnsupportedInput: if X, Y and Z overlap or don't cover the schema.
    :raises InconsistentResult: if the result differs from :func:`holds_mvd`.
    """
    lhs, rhs, rest = R.ordered(X), R.ordered(Y), R.ordered(Z)
    sides = [set(lhs), set(rhs), set(rest)]
    if sum(map(len, sides)) != len(R.names) or set().union(*sides) != set(R.names):
        raise UnsupportedInput("X, Y and Z have to be disjoint and cover the whole schema")
    S = R.subset(t for t, _ in R if R.is_specified(t)) if skip_dont_care else R
    result = _mvd_by_join(S, lhs, rhs, rest)
    expected = holds_mvd(R, lhs, rhs, skip_dont_care).holds
    if result != expected:
        raise InconsistentResult(
            f"lossless join of {lhs}|{rhs}|{rest} is {result} but the MVD check says {expected}")
    return result


def replay_witness(R: Relation, report: DependencyReport, skip_dont_care: bool = True) -> bool:
    """True if the report's witness pair really violates the dependency in ``R``."""
    if report.witness is None:
        return False
    t1, t2 = report.witness
    lhs, rhs = tuple(report.lhs), tuple(report.rhs)
    if report.kind == 'FD':
        S = _specified(R, rhs)
        return (t1 in S.tids and t2 in S.tids
                and S.restrict(t1, lhs) == S.restrict(t2, lhs)
                and S.restrict(t1, rhs) != S.restrict(t2, rhs))
    lhs, rhs, rest = _split(R, lhs, rhs)
    S = R.subset(t for t, _ in R if R.is_specified(t)) if skip_dont_care else R
    if t1 not in S.tids or t2 not in S.tids or S.restrict(t1, lhs) != S.restrict(t2, lhs):
        return False
    wanted = (S.restrict(t1, lhs), S.restrict(t1, rhs), S.restrict(t2, rest))
    return not any(
        (S.restrict(t, lhs), S.restrict(t, rhs), S.restrict(t, rest)) == wanted for t, _ in S)
