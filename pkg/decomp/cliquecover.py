"""
Compatible graphs of chart columns and their minimum clique partitions.

All searches walk the same restricted-growth tree: node ``i`` is tried in every existing
clique in creation order and then in a new clique. Leaves are therefore visited in
lexicographic order of their block assignment strings, and the first optimal leaf is the
canonical answer.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .chart import Chart, columns_compatible
from .conf import decomp_setting
from .exceptions import SearchBoundExceeded

logger = logging.getLogger('forge.decomp')

Assignment = Tuple[int, ...]


@dataclass(frozen=True)
class CompatGraph:
    labels: Tuple[str, ...]
    adjacency: Tuple[Tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.adjacency) != n or any(len(row) != n for row in self.adjacency):
            raise ValueError("adjacency must be a square matrix over the nodes")
        for i in range(n):
            if self.adjacency[i][i]:
                raise ValueError(f"self-loop on node {self.labels[i]}")
            for j in range(i):
                if self.adjacency[i][j] != self.adjacency[j][i]:
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> 'CompatGraph':
        matrix = [[False] * n for _ in range(n)]
        for i, j in edges:
            if i != j:
                matrix[i][j] = matrix[j][i] = True
        names = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        return cls(names, tuple(tuple(row) for row in matrix))

    @property
    def nodes(self) -> range:
        return range(len(self.labels))

    def adjacent(self, i: int, j: int) -> bool:
        return self.adjacency[i][j]

    def is_clique(self, nodes: Sequence[int]) -> bool:
        return all(self.adjacency[a][b] for pos, a in enumerate(nodes) for b in nodes[pos + 1:])

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class CliquePartition:
    cliques: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_assignment(cls, assignment: Assignment) -> 'CliquePartition':
        blocks: List[List[int]] = [[] for _ in range(max(assignment, default=-1) + 1)]
        for node, block in enumerate(assignment):
            blocks[block].append(node)
        return cls(tuple(tuple(b) for b in blocks))

    def validate(self, g: CompatGraph) -> None:
        """:raises ValueError: if the cliques don't cover the nodes exactly once or aren't cliques."""
        members = sorted(n for clique in self.cliques for n in clique)
        if members != list(g.nodes):
            raise ValueError("cliques must cover every node exactly once")
        for clique in self.cliques:
            if not clique or not g.is_clique(clique):
                raise ValueError(f"{[g.labels[n] for n in clique]} is not a clique")

    def describe(self, g: CompatGraph) -> str:
        return ' | '.join(' '.join(g.labels[n] for n in clique) for clique in self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)


def _grow(n: int, fits: Callable[[int, List[int]], bool],
          max_blocks: Optional[int]) -> Iterator[Assignment]:
    blocks: List[List[int]] = []
    assignment = [0] * n

    def visit(node: int) -> Iterator[Assignment]:
        if node == n:
            yield tuple(assignment)
            return
        for pos, members in enumerate(blocks):
            if fits(node, members):
                members.append(node)
                assignment[node] = pos
                yield from visit(node + 1)
                members.pop()
        if max_blocks is None or len(blocks) < max_blocks:
            blocks.append([node])
            assignment[node] = len(blocks) - 1
            yield from visit(node + 1)
            blocks.pop()

    return visit(0)


def set_partitions(n: int, max_blocks: Optional[int] = None) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Every partition of ``range(n)`` with at most ``max_blocks`` blocks."""
    for assignment in _grow(n, lambda node, members: True, max_blocks):
        yield CliquePartition.from_assignment(assignment).cliques


def build_compat_graph(ch: Chart) -> CompatGraph:
    """Nodes are the chart columns in chart order, edges join compatible columns."""
    n = ch.width
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if columns_compatible(ch, i, j)]
    return CompatGraph.from_edges(n, edges, [c.name for c in ch.columns])


def _search(g: CompatGraph, max_blocks: Optional[int]) -> Iterator[Assignment]:
    return _grow(len(g), lambda node, members: all(g.adjacent(node, m) for m in members),
                 max_blocks)


def _lower_bound(g: CompatGraph) -> int:
    # pairwise incompatible columns need a clique each
    independent: List[int] = []
    for node in g.nodes:
        if not any(g.adjacent(node, other) for other in independent):
            independent.append(node)
    return len(independent)


def _check_bound(g: CompatGraph, bound: Optional[int]) -> None:
    bound = bound if bound is not None else decomp_setting('MCP_EXACT_NODE_BOUND')
    if len(g) > bound:
        raise SearchBoundExceeded(
            f"compatible graph has {len(g)} nodes, exact search is limited to {bound}; "
            "use the greedy clique partition instead")


def mcp_greedy(g: CompatGraph) -> CliquePartition:
    """Puts every node into the first clique it fits, in node order."""
    return CliquePartition.from_assignment(next(_search(g, None)))


def _branch_and_bound(g: CompatGraph) -> Assignment:
    """
    Depth-first search of the restricted-growth tree starting from the greedy incumbent.
    A branch is cut once opening another clique would reach the incumbent's size, so only
    strictly smaller partitions are accepted and the first one of each size is the
    lexicographically smallest.
    """
    n = len(g)
    best = next(_search(g, None))
    best_size = max(best, default=-1) + 1
    lower = _lower_bound(g)
    logger.debug('clique partition of %d nodes: between %d and %d cliques', n, lower, best_size)
    blocks: List[List[int]] = []
    assignment = [0] * n

    def visit(node: int) -> bool:
        nonlocal best, best_size
        if node == n:
            best, best_size = tuple(assignment), len(blocks)
            return len(blocks) <= lower
        for pos, members in enumerate(blocks):
            if all(g.adjacent(node, m) for m in members):
                members.append(node)
                assignment[node] = pos
                done = visit(node + 1)
                members.pop()
                if done:
                    return True
        if len(blocks) + 1 < best_size:
            blocks.append([node])
            assignment[node] = len(blocks) - 1
            done = visit(node + 1)
            blocks.pop()
            if done:
                return True
        return False

    if best_size > lower:
        visit(0)
    return best


def _minimum_size(g: CompatGraph) -> int:
    return max(_branch_and_bound(g), default=-1) + 1


def mcp_exact(g: CompatGraph, bound: Optional[int] = None) -> CliquePartition:
    """
    A minimum clique partition. Among several optima the one whose block assignment string
    is lexicographically smallest is returned.

    :raises SearchBoundExceeded: if the graph has more nodes than the exact search accepts.
    """
    _check_bound(g, bound)
    return CliquePartition.from_assignment(_branch_and_bound(g))


def mcp_enumerate(g: CompatGraph, limit: Optional[int] = None,
                  bound: Optional[int] = None) -> List[CliquePartition]:
    """
    All minimum clique partitions in canonical order, at most ``limit`` of them. The first
    one is the result of :func:`mcp_exact`.

    :raises SearchBoundExceeded: as :func:`mcp_exact`.
    """
    _check_bound(g, bound)
    limit = limit if limit is not None else decomp_setting('MCP_ENUMERATE_LIMIT')
    found = []
    for assignment in _search(g, _minimum_size(g)):
        if len(found) == limit:
            logger.warning('more than %d minimum clique partitions, listing the first %d',
                           limit, limit)
            break
        found.append(CliquePartition.from_assignment(assignment))
    return found
