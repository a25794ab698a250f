"""
In-memory relations over finite symbolic domains.

A :class:`Relation` is a set of tuples over an ordered schema. Every tuple carries a stable
integer id and the set of ids of the tuples it was derived from, so partitions computed on a
projection can still be related to the original truth table.

Relations are immutable. All operations return new relations.
"""
import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import (Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple,
                    Optional, Sequence, Tuple)

from .exceptions import SchemaError

DONT_CARE = '-'

Values = Tuple[str, ...]


class Role(str, Enum):
    INPUT = 'input'
    OUTPUT = 'output'
    BRIDGE = 'bridge'


@dataclass(frozen=True)
class Domain:
    """
    The ordered value set of one attribute.

    The declaration order is the canonical order used for chart rows and columns, partition
    labels and the tuple ids of complete truth tables.
    """
    name: str
    values: Values
    _ranks: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        values = tuple(str(v) for v in self.values)
        object.__setattr__(self, 'values', values)
        if len(values) < 2:
            raise SchemaError(f"domain of '{self.name}' needs at least two values, got {values}")
        if len(set(values)) != len(values):
            raise SchemaError(f"domain of '{self.name}' has repeated values: {values}")
        if DONT_CARE in values:
            raise SchemaError(f"'{DONT_CARE}' is reserved for don't-care outputs")
        object.__setattr__(self, '_ranks', {v: i for i, v in enumerate(values)})

    @classmethod
    def binary(cls, name: str) -> 'Domain':
        return cls(name, ('0', '1'))

    def rank(self, value: str) -> int:
        """Position of ``value`` in declaration order. Don't-care sorts after every value."""
        if value == DONT_CARE:
            return len(self.values)
        try:
            return self._ranks[value]
        except KeyError:
            raise SchemaError(
                f"'{value}' is not in the domain of '{self.name}' {list(self.values)}") from None

    def __contains__(self, value: object) -> bool:
        return value in self._ranks

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Attribute:
    domain: Domain
    role: Role = Role.INPUT

    @property
    def name(self) -> str:
        return self.domain.name

    def accepts(self, value: str) -> bool:
        return value in self.domain or (value == DONT_CARE and self.role == Role.OUTPUT)


def attributes(*names: str, values: Sequence[str] = ('0', '1')) -> List[Attribute]:
    """Shorthand for a list of input attributes sharing one value set."""
    return [Attribute(Domain(name, tuple(values))) for name in names]


class Row(NamedTuple):
    tid: int
    values: Values


class Relation:
    """
    A set of tuples over ``schema``.

    :param schema: the attributes in column order
    :param rows: one value sequence per tuple, in schema order
    :param tids: tuple ids, defaults to the input position
    :param sources: for each row, the ids of the base tuples it stands for. Defaults to the
        row's own id.
    :raises SchemaError: for repeated attribute names, values outside their domain or
        don't-cares outside output attributes.
    """
    __slots__ = ('_schema', '_index', '_rows', '_sources')

    def __init__(self, schema: Iterable[Attribute], rows: Iterable[Sequence[str]] = (),
                 tids: Optional[Iterable[int]] = None,
                 sources: Optional[Iterable[Iterable[int]]] = None) -> None:
        self._schema: Tuple[Attribute, ...] = tuple(schema)
        self._index: Dict[str, int] = {}
        for pos, attr in enumerate(self._schema):
            if attr.name in self._index:
                raise SchemaError(f"attribute '{attr.name}' appears twice in the schema")
            self._index[attr.name] = pos

        row_list = [tuple(str(v) for v in row) for row in rows]
        tid_list = list(range(len(row_list))) if tids is None else list(tids)
        src_list = [frozenset((t,)) for t in tid_list] if sources is None \
            else [frozenset(s) for s in sources]
        if not len(row_list) == len(tid_list) == len(src_list):
            raise ValueError("rows, tids and sources must have the same length")

        by_values: Dict[Values, int] = {}
        values_of: Dict[int, Values] = {}
        sources_of: Dict[int, FrozenSet[int]] = {}
        for values, tid, src in zip(row_list, tid_list, src_list):
            self._validate(values)
            if values in by_values:
                # set semantics: an identical tuple is the same tuple
                first = by_values[values]
                sources_of[first] = sources_of[first] | src
                continue
            if tid in values_of:
                raise ValueError(f"tuple id {tid} is used for two different tuples")
            by_values[values] = tid
            values_of[tid] = values
            sources_of[tid] = src

        self._rows: Dict[int, Values] = dict(sorted(values_of.items()))
        self._sources: Dict[int, FrozenSet[int]] = sources_of

    def _validate(self, values: Values) -> None:
        if len(values) != len(self._schema):
            raise SchemaError(
                f"tuple {values} has {len(values)} values, schema has {len(self._schema)}")
        for attr, value in zip(self._schema, values):
            if not attr.accepts(value):
                raise SchemaError(
                    f"'{value}' is not a valid value for {attr.role.value} '{attr.name}'")

    # region schema

    @property
    def schema(self) -> Tuple[Attribute, ...]:
        return self._schema

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(a.name for a in self._schema)

    def attribute(self, name: str) -> Attribute:
        try:
            return self._schema[self._index[name]]
        except KeyError:
            raise SchemaError(f"unknown attribute '{name}'") from None

    def _names_with(self, role: Role) -> Tuple[str, ...]:
        return tuple(a.name for a in self._schema if a.role == role)

    @property
    def inputs(self) -> Tuple[str, ...]:
        return self._names_with(Role.INPUT)

    @property
    def outputs(self) -> Tuple[str, ...]:
        return self._names_with(Role.OUTPUT)

    @property
    def bridges(self) -> Tuple[str, ...]:
        return self._names_with(Role.BRIDGE)

    @property
    def arguments(self) -> Tuple[str, ...]:
        """Every attribute that is not an output."""
        return tuple(a.name for a in self._schema if a.role != Role.OUTPUT)

    def ordered(self, attrs: Iterable[str]) -> Tuple[str, ...]:
        """
        Returns ``attrs`` in schema order, without duplicates.

        :raises SchemaError: if one of the names is not part of the schema.
        """
        wanted = set(attrs)
        unknown = wanted.difference(self._index)
        if unknown:
            raise SchemaError(f"unknown attribute(s): {', '.join(sorted(unknown))}")
        return tuple(name for name in self.names if name in wanted)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    # endregion

    # region tuples

    @property
    def tids(self) -> Tuple[int, ...]:
        return tuple(self._rows)

    def rows(self) -> Iterator[Row]:
        for tid, values in self._rows.items():
            yield Row(tid, values)

    __iter__ = rows

    def __len__(self) -> int:
        return len(self._rows)

    def values(self, tid: int) -> Values:
        return self._rows[tid]

    def value(self, tid: int, name: str) -> str:
        return self._rows[tid][self._index[name]]

    def restrict(self, tid: int, names: Sequence[str]) -> Values:
        """``t[X]`` for the tuple ``tid``; ``names`` are expected in the wanted order."""
        row = self._rows[tid]
        return tuple(row[self._index[n]] for n in names)

    def as_dict(self, tid: int) -> Dict[str, str]:
        return dict(zip(self.names, self._rows[tid]))

    def sources(self, tid: int) -> FrozenSet[int]:
        return self._sources[tid]

    def is_specified(self, tid: int) -> bool:
        return DONT_CARE not in self._rows[tid]

    def has_dont_care(self) -> bool:
        return any(DONT_CARE in row for row in self._rows.values())

    def sort_key(self, names: Sequence[str]) -> Callable[[Values], Tuple[int, ...]]:
        """Key function ordering value vectors over ``names`` by declared domain order."""
        domains = [self.attribute(n).domain for n in names]
        return lambda values: tuple(d.rank(v) for d, v in zip(domains, values))

    # endregion

    # region derived relations

    def subset(self, tids: Iterable[int]) -> 'Relation':
        keep = sorted(set(tids))
        return Relation(self._schema, [self._rows[t] for t in keep], keep,
                        [self._sources[t] for t in keep])

    def with_columns(self, attrs: Sequence[Attribute],
                     values: Mapping[int, Sequence[str]]) -> 'Relation':
        """
        Appends attributes. ``values`` maps every tuple id to the new values in ``attrs`` order.

        :raises SchemaError: if a name is already taken or a tuple has no values.
        """
        for attr in attrs:
            if attr.name in self._index:
                raise SchemaError(f"attribute '{attr.name}' already exists")
        missing = set(self._rows).difference(values)
        if missing:
            raise SchemaError(f"no values for tuple ids {sorted(missing)}")
        tids = list(self._rows)
        return Relation(self._schema + tuple(attrs),
                        [self._rows[t] + tuple(values[t]) for t in tids], tids,
                        [self._sources[t] for t in tids])

    def with_values(self, name: str, values: Mapping[int, str]) -> 'Relation':
        """Replaces the value of attribute ``name`` for the tuple ids in ``values``."""
        self.attribute(name)
        pos = self._index[name]
        tids = list(self._rows)
        rows = []
        for tid in tids:
            row = self._rows[tid]
            if tid in values:
                row = row[:pos] + (values[tid],) + row[pos + 1:]
            rows.append(row)
        return Relation(self._schema, rows, tids, [self._sources[t] for t in tids])

    # endregion

    def __repr__(self) -> str:
        return f"<Relation [{' '.join(self.names)}] with {len(self)} tuples>"


def project(R: Relation, attrs: Iterable[str]) -> Relation:
    """
    ``R[X]``: the distinct restrictions of the tuples of ``R`` to ``attrs``.

    Tuples that collapse into one keep the smallest tuple id; their sources are merged.

    :raises SchemaError: for unknown attribute names.
    """
    names = R.ordered(attrs)
    schema = [R.attribute(n) for n in names]
    first: Dict[Values, int] = {}
    merged: Dict[Values, FrozenSet[int]] = {}
    for tid, _ in R:
        key = R.restrict(tid, names)
        if key not in first:
            first[key] = tid
            merged[key] = R.sources(tid)
        else:
            merged[key] = merged[key] | R.sources(tid)
    keys = list(first)
    return Relation(schema, keys, [first[k] for k in keys], [merged[k] for k in keys])


def select(R: Relation, cond: Mapping[str, str]) -> Relation:
    """
    The tuples of ``R`` matching every ``attribute = value`` pair of ``cond``.

    :raises SchemaError: for unknown attributes or values outside an attribute's domain.
    """
    names = R.ordered(cond)
    for name in names:
        if not R.attribute(name).accepts(cond[name]):
            raise SchemaError(f"'{cond[name]}' is not in the domain of '{name}'")
    wanted = tuple(cond[n] for n in names)
    return R.subset(tid for tid, _ in R if R.restrict(tid, names) == wanted)


def cond_project(R: Relation, attrs: Iterable[str], cond: Mapping[str, str]) -> Relation:
    """``R_y[X]``: project the tuples matching ``cond`` onto ``attrs``."""
    return project(select(R, cond), attrs)


def natural_join(S: Relation, T: Relation) -> Relation:
    """
    ``S ⋈ T``. The result schema is S's schema followed by T's remaining attributes.

    Relations without shared attributes join to their Cartesian product. Result tuples are
    numbered in the order they are produced (S's tuple order, then T's).

    :raises SchemaError: if a shared attribute has different domains on both sides.
    """
    shared = [n for n in S.names if n in T]
    for name in shared:
        if S.attribute(name).domain != T.attribute(name).domain:
            raise SchemaError(f"attribute '{name}' has different domains in the joined relations")
    shared_t = set(shared)
    rest = [a for a in T.schema if a.name not in shared_t]
    rest_names = [a.name for a in rest]

    index: Dict[Values, List[int]] = {}
    for tid, _ in T:
        index.setdefault(T.restrict(tid, shared), []).append(tid)

    rows: List[Values] = []
    sources: List[FrozenSet[int]] = []
    for s_tid, s_values in S:
        for t_tid in index.get(S.restrict(s_tid, shared), ()):
            rows.append(s_values + T.restrict(t_tid, rest_names))
            sources.append(S.sources(s_tid) | T.sources(t_tid))
    return Relation(S.schema + tuple(rest), rows, range(len(rows)), sources)


def relations_equal(A: Relation, B: Relation) -> bool:
    """
    Same attributes with the same domains and the same tuple set, regardless of column
    order and tuple ids.
    """
    a_attrs = {(a.name, a.domain) for a in A.schema}
    b_attrs = {(b.name, b.domain) for b in B.schema}
    if a_attrs != b_attrs:
        return False
    names = A.names
    return {values for _, values in A} == {B.restrict(tid, names) for tid, _ in B}


def tabulate(arguments: Sequence[Attribute], output: Attribute,
             fn: Callable[..., str]) -> Relation:
    """
    Builds the complete truth table of ``fn``.

    ``fn`` is called with one value per argument (in order) and returns the output value.
    Tuple ids are the mixed-radix rank of the input vector, first argument most significant,
    which gives binary tables the usual minterm numbering.
    """
    rows = []
    for values in itertools.product(*(a.domain.values for a in arguments)):
        rows.append(tuple(values) + (str(fn(*values)),))
    return Relation(tuple(arguments) + (output,), rows)
