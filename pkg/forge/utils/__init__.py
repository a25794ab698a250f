"""
Helper functions and classes that don't need any configured state or django stuff loaded.
"""
import logging
from enum import Enum
from typing import Dict, Generic, Hashable, Iterable, List, Optional, TypeVar

from django.utils import log


class SeqMode(Enum):
    COMBINE = 1
    OVERRIDE = 2


def deepmerge(first, second, sequence_mode=SeqMode.COMBINE):
    """
    Deep merges dicts, lists, tuples and sets.

    Dicts are merged by keys. Lists and tuples are appended (or replaced, depending on
    ``sequence_mode``). Sets will be unionized. If types don't match, the value in the
    second structure wins.

    :param first: the data to be merged into
    :param second: the data to merge into ``first``
    :param sequence_mode: how lists and tuples are combined
    :raises TypeError: if the values are of an unsupported type.
    :returns: a new data structure of the same type as ``first`` and ``second``.
    """
    if type(first) is not type(second):
        return second

    if isinstance(first, dict):
        out = first.copy()
        for key, value in second.items():
            out[key] = deepmerge(out[key], value, sequence_mode) if key in out else value
        return out

    if isinstance(first, (list, tuple)):
        if sequence_mode == SeqMode.OVERRIDE:
            return second
        return first + second

    if isinstance(first, set):
        return first.union(second)

    if isinstance(first, (str, int, float, bool)) or first is None:
        return second

    raise TypeError(f"unsupported type: {type(first)}")


Item = TypeVar('Item', bound=Hashable)

class UnionFind(Generic[Item]):
    """
    Disjoint sets with path halving and union by size.

    Items are registered lazily on first use. ``groups`` returns the sets ordered by the
    first time one of their members was registered, which keeps callers deterministic.
    """
    def __init__(self, items: Iterable[Item] = ()) -> None:
        self._parent: Dict[Item, Item] = {}
        self._size: Dict[Item, int] = {}
        for item in items:
            self.add(item)

    def add(self, item: Item) -> None:
        if item not in self._parent:
            self._parent[item] = item
            self._size[item] = 1

    def find(self, item: Item) -> Item:
        self.add(item)
        parent = self._parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a: Item, b: Item) -> Item:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return root_a
        if self._size[root_a] < self._size[root_b]:
            root_a, root_b = root_b, root_a
        self._parent[root_b] = root_a
        self._size[root_a] += self._size[root_b]
        return root_a

    def connected(self, a: Item, b: Item) -> bool:
        return self.find(a) == self.find(b)

    def groups(self) -> List[List[Item]]:
        by_root: Dict[Item, List[Item]] = {}
        for item in self._parent:
            by_root.setdefault(self.find(item), []).append(item)
        return list(by_root.values())

    def __contains__(self, item: object) -> bool:
        return item in self._parent

    def __len__(self) -> int:
        return len(self._parent)


def ceil_log2(n: int) -> int:
    """Number of bits needed to tell ``n`` things apart (0 for n <= 1)."""
    return max(n - 1, 0).bit_length()


def split_names(value: Optional[str]) -> List[str]:
    """Turns ``"x1,x4"`` (or ``"x1 x4"``) into ``['x1', 'x4']``."""
    if not value:
        return []
    return [name for name in value.replace(',', ' ').split() if name]


class CommandFormatter(log.ServerFormatter):
    """
    Console formatter for the ``forge`` loggers. Colours the message by level the way
    ``runserver`` does, and provides ``server_time`` when the format asks for it.
    """
    def format(self, record: logging.LogRecord):
        msg = record.msg
        lvl = record.levelno
        if lvl >= logging.ERROR:
            msg = self.style.ERROR(msg)
        elif lvl >= logging.WARNING:
            msg = self.style.WARNING(msg)

        if self.uses_server_time() and not hasattr(record, 'server_time'):
            setattr(record, 'server_time', self.formatTime(record, self.datefmt))

        record.msg = msg
        return super().format(record)
