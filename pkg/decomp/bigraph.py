"""
The bipartite graph G(π1 × π2): blocks of two partitions as nodes, one edge per tuple.

``is_fork`` is the graph shape of a functional dependency, ``is_uniform`` the shape of a
multi-valued dependency.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from forge.utils import UnionFind

from .partition import Partition, check_universe


@dataclass(frozen=True)
class Edge:
    left: int
    right: int
    tid: int


@dataclass(frozen=True)
class BipartiteGraph:
    left: Partition
    right: Partition
    edges: Tuple[Edge, ...]


@dataclass(frozen=True)
class Component:
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    edges: Tuple[int, ...]  # positions in BipartiteGraph.edges

    def tids(self, graph: BipartiteGraph) -> Tuple[int, ...]:
        return tuple(sorted(graph.edges[e].tid for e in self.edges))


ComponentSet = Tuple[Component, ...]


def build_graph(p1: Partition, p2: Partition) -> BipartiteGraph:
    """
    :raises UniverseMismatch: if the partitions don't cover the same tuple ids.
    """
    check_universe(p1, p2)
    edges = tuple(Edge(p1.index_of(t), p2.index_of(t), t) for t in sorted(p1.universe))
    return BipartiteGraph(p1, p2, edges)


def connected_components(G: BipartiteGraph) -> ComponentSet:
    """Components ordered by their smallest tuple id. Edges are listed in tuple-id order."""
    uf: UnionFind[Tuple[str, int]] = UnionFind()
    for edge in G.edges:
        uf.union(('L', edge.left), ('R', edge.right))

    grouped: Dict[Tuple[str, int], List[int]] = {}
    for pos, edge in enumerate(G.edges):
        grouped.setdefault(uf.find(('L', edge.left)), []).append(pos)

    components = []
    for positions in grouped.values():
        components.append(Component(
            left=tuple(sorted({G.edges[p].left for p in positions})),
            right=tuple(sorted({G.edges[p].right for p in positions})),
            edges=tuple(positions),
        ))
    return tuple(sorted(components, key=lambda c: G.edges[c.edges[0]].tid))


def is_fork(G: BipartiteGraph) -> bool:
    """Every left block sends all of its edges into one right block."""
    targets: Dict[int, int] = {}
    for edge in G.edges:
        if targets.setdefault(edge.left, edge.right) != edge.right:
            return False
    return True


def is_uniform(G: BipartiteGraph, components: Optional[ComponentSet] = None) -> bool:
    """Every component is complete bipartite with exactly one edge per block pair."""
    multiplicity = Counter((e.left, e.right) for e in G.edges)
    for comp in components if components is not None else connected_components(G):
        if len(comp.edges) != len(comp.left) * len(comp.right):
            return False
        if any(multiplicity[(l, r)] != 1 for l in comp.left for r in comp.right):
            return False
    return True


def _node_label(partition: Partition, index: int, prefix: str) -> str:
    label = partition.label(index)
    if label is None:
        return f"{prefix}{index}"
    return prefix + ''.join(label) if all(len(v) == 1 for v in label) \
        else prefix + '{' + ','.join(label) + '}'


def to_dot(G: BipartiteGraph, name: str = 'G') -> str:
    """
    Graphviz source for ``G``. Left blocks are ``P`` nodes, right blocks ``Q`` nodes; every
    component is drawn as its own cluster.
    """
    lines = [f'graph "{name}" {{', '  rankdir=LR;', '  node [shape=box];']
    for number, comp in enumerate(connected_components(G)):
        lines.append(f'  subgraph cluster_{number} {{')
        for l in comp.left:
            lines.append(f'    L{l} [label="{_node_label(G.left, l, "P")}"];')
        for r in comp.right:
            lines.append(f'    R{r} [label="{_node_label(G.right, r, "Q")}"];')
        for pos in comp.edges:
            edge = G.edges[pos]
            lines.append(f'    L{edge.left} -- R{edge.right} [label="t{edge.tid}"];')
        lines.append('  }')
    lines.append('}')
    return '\n'.join(lines) + '\n'
