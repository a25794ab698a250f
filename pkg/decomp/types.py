from enum import Enum
from typing import List, Literal, Optional, Tuple

from ninja import Schema
from pydantic import validator


class Algorithm(str, Enum):
    AUTO = 'auto'
    ALPHA = 'alpha'
    BETA = 'beta'
    GAMMA = 'gamma'
    DELTA = 'delta'


class McpMode(str, Enum):
    EXACT = 'exact'
    GREEDY = 'greedy'
    ENUMERATE = 'enumerate'


class Encoding(str, Enum):
    SINGLE = 'single'
    BINARY = 'binary'


class DependencyReport(Schema):
    kind: Literal['FD', 'MVD']
    lhs: List[str]
    rhs: List[str]
    holds: bool
    # the violating tuple pair, by tuple id
    witness: Optional[Tuple[int, int]] = None

    @validator('witness', always=True)
    def witness_iff_violation(cls, value, values):
        if 'holds' in values and (value is None) != values['holds']:
            raise ValueError('a witness is required exactly when the dependency fails')
        return value

    def describe(self) -> str:
        arrow = '->' if self.kind == 'FD' else '->>'
        head = f"{self.kind} {','.join(self.lhs) or '{}'} {arrow} {','.join(self.rhs) or '{}'}"
        if self.holds:
            return f"{head}: holds"
        t1, t2 = self.witness  # type: ignore
        return f"{head}: fails (witness t{t1}, t{t2})"


class VerificationReport(Schema):
    fd_y_w: DependencyReport
    fd_wz_f: DependencyReport
    mvd_ok: bool
    join_roundtrip: bool
    recomposition: bool
    # brute-force optimality checks, None when skipped
    maximal: Optional[bool] = None
    minimal: Optional[bool] = None

    def flags(self) -> List[Tuple[str, Optional[bool]]]:
        return [
            ('fd Y->W', self.fd_y_w.holds),
            ('fd WZ->F', self.fd_wz_f.holds),
            ('mvd', self.mvd_ok),
            ('join roundtrip', self.join_roundtrip),
            ('recomposition', self.recomposition),
            ('maximal', self.maximal),
            ('minimal', self.minimal),
        ]

    @property
    def ok(self) -> bool:
        return all(flag is not False for _, flag in self.flags())


class MultiVerificationReport(Schema):
    fd_parts: List[DependencyReport]
    mvd_parts: List[bool]
    fd_wz_f: DependencyReport
    join_roundtrip: bool
    recomposition: bool

    def flags(self) -> List[Tuple[str, Optional[bool]]]:
        out: List[Tuple[str, Optional[bool]]] = []
        for number, (fd, mvd) in enumerate(zip(self.fd_parts, self.mvd_parts), start=1):
            out.append((f'fd Y{number}->W{number}', fd.holds))
            out.append((f'mvd W{number}->>Y{number}', mvd))
        out += [
            ('fd W..Z->F', self.fd_wz_f.holds),
            ('join roundtrip', self.join_roundtrip),
            ('recomposition', self.recomposition),
        ]
        return out

    @property
    def ok(self) -> bool:
        return all(flag is not False for _, flag in self.flags())


Command = Literal['decompose', 'chart', 'check-fd', 'check-mvd', 'verify']


class RunConfig(Schema):
    command: Command
    input_path: Optional[str] = None
    bound: List[List[str]] = []
    free: Optional[List[str]] = None
    algorithm: Algorithm = Algorithm.AUTO
    mcp: McpMode = McpMode.EXACT
    encoding: Encoding = Encoding.SINGLE
    extend_missing: bool = False
    enumerate_gamma: bool = False
    limit: Optional[int] = None
    output_path: Optional[str] = None
    seed: Optional[int] = None
    lhs: List[str] = []
    rhs: List[str] = []
    dot: bool = False
    g_paths: List[str] = []
    h_path: Optional[str] = None

    @validator('bound', each_item=True)
    def bound_sets_not_empty(cls, value):
        if not value:
            raise ValueError('a bound set needs at least one attribute')
        return value

    @validator('limit')
    def limit_positive(cls, value):
        if value is not None and value < 1:
            raise ValueError('limit has to be at least 1')
        return value

    @validator('rhs', always=True)
    def dependency_needs_rhs(cls, value, values):
        if values.get('command') in ('check-fd', 'check-mvd') and not value:
            raise ValueError(f"{values['command']} needs --rhs")
        return value


class RunRequest(Schema):
    config: RunConfig
    table: str
    # only used by verify
    g_tables: List[str] = []
    h_table: Optional[str] = None


class RunResponse(Schema):
    exit_code: int
    report: str
