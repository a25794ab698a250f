"""
The truth table text format.

::

    # comment
    var x1
    var x2 { lo med hi }
    output f
    0 lo | 1
    0 med | -

``var``, ``output`` and ``bridge`` lines declare the attributes in column order; without
braces the domain is ``{0, 1}``. Each following line is one tuple. A lone ``|`` is only a
separator.
"""
import itertools
import re
from typing import Dict, List, Optional, Tuple

from .exceptions import SchemaError, TruthTableError
from .relation import DONT_CARE, Attribute, Domain, Relation, Role, Values

HEADER_RE = re.compile(r'^(var|output|bridge)\s+([^\s{}]+)\s*(?:\{([^{}]*)\})?\s*$')

ROLES = {'var': Role.INPUT, 'output': Role.OUTPUT, 'bridge': Role.BRIDGE}
KEYWORDS = {role: keyword for keyword, role in ROLES.items()}


def _strip(line: str) -> str:
    return line.split('#', 1)[0].strip()


def _header(match: 're.Match', lineno: int) -> Attribute:
    keyword, name, body = match.groups()
    values = tuple(body.split()) if body is not None else ('0', '1')
    try:
        return Attribute(Domain(name, values), ROLES[keyword])
    except SchemaError as e:
        raise TruthTableError(str(e), lineno) from None


def parse_truth_table(text: str, extend_missing: bool = False) -> Relation:
    """
    Reads a table in the text format.

    A table with an output and no bridge attributes is a truth table: every input vector
    may appear once (identical repeats are dropped) and all of them have to be present,
    unless ``extend_missing`` adds the absent ones with a don't-care output. Tuple ids of
    truth tables are the rank of the input vector in declared domain order, first input
    most significant. Other tables number their tuples in file order.

    :raises TruthTableError: for malformed headers, rows of the wrong width, values outside
        their domain, conflicting rows or missing input vectors.
    """
    schema: List[Attribute] = []
    rows: List[Tuple[int, Values]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        match = HEADER_RE.match(line)
        if match:
            if rows:
                raise TruthTableError("attribute declared after the first row", lineno)
            attr = _header(match, lineno)
            if any(a.name == attr.name for a in schema):
                raise TruthTableError(f"attribute '{attr.name}' declared twice", lineno)
            schema.append(attr)
            continue
        if line.split()[0] in ROLES:
            raise TruthTableError(f"malformed declaration '{line}'", lineno)
        if not schema:
            raise TruthTableError("row before any attribute declaration", lineno)

        values = tuple(v for v in line.split() if v != '|')
        if len(values) != len(schema):
            raise TruthTableError(
                f"row has {len(values)} values, {len(schema)} attributes are declared", lineno)
        for attr, value in zip(schema, values):
            if not attr.accepts(value):
                raise TruthTableError(
                    f"'{value}' is not a valid value for {KEYWORDS[attr.role]} '{attr.name}'",
                    lineno)
        rows.append((lineno, values))

    if not schema:
        raise TruthTableError("no attributes declared")
    outputs = [a for a in schema if a.role == Role.OUTPUT]
    if len(outputs) > 1:
        raise TruthTableError(
            f"only one output is supported, found {', '.join(a.name for a in outputs)}")
    if not outputs or any(a.role == Role.BRIDGE for a in schema):
        return Relation(schema, [values for _, values in rows])
    return _truth_table(schema, rows, extend_missing)


def _truth_table(schema: List[Attribute], rows: List[Tuple[int, Values]],
                 extend_missing: bool) -> Relation:
    inputs = [pos for pos, a in enumerate(schema) if a.role == Role.INPUT]
    out = next(pos for pos, a in enumerate(schema) if a.role == Role.OUTPUT)

    seen: Dict[Values, Tuple[int, str]] = {}
    for lineno, values in rows:
        key = tuple(values[p] for p in inputs)
        if key in seen and seen[key][1] != values[out]:
            raise TruthTableError(
                f"input {' '.join(key)} already has output {seen[key][1]} (line {seen[key][0]})",
                lineno)
        seen.setdefault(key, (lineno, values[out]))

    domains = [schema[p].domain.values for p in inputs]
    full: List[Values] = []
    tids: List[int] = []
    missing = 0
    for rank, key in enumerate(itertools.product(*domains)):
        if key in seen:
            output = seen[key][1]
        elif extend_missing:
            output = DONT_CARE
        else:
            missing += 1
            continue
        row = list(key)
        row.insert(out, output)
        full.append(tuple(row))
        tids.append(rank)
    if missing:
        raise TruthTableError(
            f"{missing} input vector(s) have no row; complete the table or extend it "
            "with don't-cares")
    return Relation(schema, full, tids)


def serialize(R: Relation, header: Optional[str] = None) -> str:
    """
    Writes ``R`` in the text format with explicit domains and rows in tuple id order,
    arguments separated from the output by ``|``.
    """
    lines = [f"# {header}"] if header else []
    for attr in R.schema:
        lines.append(f"{KEYWORDS[attr.role]} {attr.name} {{ {' '.join(attr.domain.values)} }}")

    split = len(R.arguments) if R.outputs and R.names[-1] in R.outputs else None
    widths = [max([len(a.name)] + [len(v) for v in a.domain.values]) for a in R.schema]
    for _, values in R:
        cells = [v.ljust(w) for v, w in zip(values, widths)]
        if split is not None:
            cells.insert(split, '|')
        lines.append(' '.join(cells).rstrip())
    return '\n'.join(lines) + '\n'
