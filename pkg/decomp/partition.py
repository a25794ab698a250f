"""
Partitions of tuple-id sets and the lattice operations on them.

Bottom is the all-singletons partition, top the one-block partition. ``refines(p1, p2)``
(p1 ≤ p2) means p1 is finer.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

from forge.utils import UnionFind

from .exceptions import UniverseMismatch
from .relation import Relation, Values

Block = Tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """
    Disjoint, nonempty blocks of tuple ids.

    Always stored in canonical form: members ascending, blocks ordered by their smallest
    member. ``labels`` (the shared attribute values of each block) follow their blocks and
    are ignored by equality.
    """
    blocks: Tuple[Block, ...]
    labels: Optional[Tuple[Values, ...]] = field(default=None, compare=False)
    _where: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        blocks = [tuple(sorted(set(b))) for b in self.blocks]
        labels = list(self.labels) if self.labels is not None else None
        if labels is not None and len(labels) != len(blocks):
            raise ValueError("a partition needs exactly one label per block")
        if any(not b for b in blocks):
            raise ValueError("partition blocks must not be empty")

        order = sorted(range(len(blocks)), key=lambda i: blocks[i][0])
        where: Dict[int, int] = {}
        for new_pos, old_pos in enumerate(order):
            for tid in blocks[old_pos]:
                if tid in where:
                    raise ValueError(f"tuple id {tid} is in more than one block")
                where[tid] = new_pos

        object.__setattr__(self, 'blocks', tuple(blocks[i] for i in order))
        if labels is not None:
            object.__setattr__(self, 'labels', tuple(tuple(labels[i]) for i in order))
        object.__setattr__(self, '_where', where)

    @classmethod
    def top(cls, universe: Iterable[int]) -> 'Partition':
        members = tuple(universe)
        return cls((members,) if members else ())

    @classmethod
    def bottom(cls, universe: Iterable[int]) -> 'Partition':
        return cls(tuple((t,) for t in universe))

    @property
    def universe(self) -> FrozenSet[int]:
        return frozenset(self._where)

    def index_of(self, tid: int) -> int:
        return self._where[tid]

    def label(self, index: int) -> Optional[Values]:
        return self.labels[index] if self.labels is not None else None

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __str__(self) -> str:
        return '{' + ' | '.join(' '.join(f't{t}' for t in b) for b in self.blocks) + '}'


def canonicalize(blocks: Iterable[Iterable[int]]) -> Partition:
    return Partition(tuple(tuple(b) for b in blocks))


def check_universe(p1: Partition, p2: Partition) -> None:
    if p1.universe != p2.universe:
        raise UniverseMismatch(
            f"partitions cover different tuple ids ({len(p1.universe)} vs {len(p2.universe)})")


def induced_partition(R: Relation, attrs: Iterable[str]) -> Partition:
    """
    π_X: groups the tuples of ``R`` by their value on ``attrs``. Each block is labelled
    with that value (in schema order). The empty attribute set gives the top partition.

    :raises SchemaError: for unknown attributes.
    """
    names = R.ordered(attrs)
    groups: Dict[Values, list] = {}
    for tid, _ in R:
        groups.setdefault(R.restrict(tid, names), []).append(tid)
    labels = list(groups)
    return Partition(tuple(tuple(groups[k]) for k in labels), tuple(labels))


def meet(p1: Partition, p2: Partition) -> Partition:
    """p1 ∧ p2: the nonempty pairwise intersections of blocks."""
    check_universe(p1, p2)
    cells: Dict[Tuple[int, int], list] = {}
    for tid in sorted(p1.universe):
        cells.setdefault((p1.index_of(tid), p2.index_of(tid)), []).append(tid)
    labels = None
    if p1.labels is not None and p2.labels is not None:
        labels = tuple(p1.labels[i] + p2.labels[j] for i, j in cells)
    return Partition(tuple(tuple(c) for c in cells.values()), labels)


def join_partition(p1: Partition, p2: Partition) -> Partition:
    """p1 ∨ p2: tuples are chained together whenever they share a block of either partition."""
    check_universe(p1, p2)
    uf: UnionFind[int] = UnionFind(sorted(p1.universe))
    for partition in (p1, p2):
        for block in partition:
            for tid in block[1:]:
                uf.union(block[0], tid)
    return canonicalize(uf.groups())


def refines(p1: Partition, p2: Partition) -> bool:
    """p1 ≤ p2: every block of p1 lies inside a single block of p2."""
    check_universe(p1, p2)
    return all(len({p2.index_of(t) for t in block}) == 1 for block in p1)

