"""
Orchestration behind the ``decomp`` management command and the HTTP API.

:func:`run` takes a :class:`RunConfig`, does the work and renders the report. Exit codes:
0 success, 1 unusable input or options, 2 a result that failed verification.
"""
import logging
import random
from pathlib import Path
from typing import List, NamedTuple, Optional, Sequence, Union

from forge import REPORT_HEADER

from .bigraph import build_graph, to_dot
from .chart import build_chart, render_chart
from .decompose import (Decomposition, MultiDecomposition, enumerate_gamma, fda_alpha,
                        fda_beta, fda_delta, fda_gamma, verify_tables)
from .dependency import holds_fd, holds_mvd, lossless_check
from .exceptions import DecompError, InconsistentResult, TruthTableError, VerificationFailed
from .partition import induced_partition
from .relation import Relation
from .textformat import parse_truth_table, serialize
from .types import Algorithm, MultiVerificationReport, RunConfig, VerificationReport

logger = logging.getLogger('forge.decomp.cli')

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


class RunResult(NamedTuple):
    exit_code: int
    report: str


def parse_input(text: str, extend_missing: bool = False) -> Relation:
    return parse_truth_table(text, extend_missing=extend_missing)


def _read(path: Optional[str], what: str) -> str:
    if not path:
        raise DecompError(f"no {what} given")
    return Path(path).read_text(encoding='utf-8')


def _flag(value: Optional[bool]) -> str:
    return 'skipped' if value is None else str(value).lower()


def select_algorithm(cfg: RunConfig, R: Relation) -> Algorithm:
    if cfg.algorithm != Algorithm.AUTO:
        return cfg.algorithm
    bound = {n for names in cfg.bound for n in names}
    if R.has_dont_care():
        return Algorithm.DELTA
    if cfg.free is not None and bound & set(cfg.free):
        return Algorithm.GAMMA
    if len(cfg.bound) > 1:
        return Algorithm.BETA
    return Algorithm.ALPHA


class Report:
    def __init__(self, cfg: RunConfig) -> None:
        self.lines: List[str] = [REPORT_HEADER, f"command: {cfg.command}"]

    def add(self, *lines: str) -> None:
        self.lines.extend(lines)

    def section(self, title: str, body: str = '') -> None:
        self.lines += ['', f"## {title}"]
        if body:
            self.lines.append(body.rstrip('\n'))

    def verification(self, report: Union[VerificationReport, MultiVerificationReport]) -> None:
        self.section('verification')
        for name, value in report.flags():
            self.add(f"{name}: {_flag(value)}")
        self.add(f"result: {'ok' if report.ok else 'FAILED'}")

    def decomposition(self, d: Decomposition, title: Optional[str] = None) -> None:
        prefix = f"{title}: " if title else ''
        for name, chart in d.stages:
            self.section(f"{prefix}chart {name}", render_chart(chart))
        self.section(f"{prefix}bridge partition")
        self.add(f"k: {d.k}", f"bits: {d.bits}", f"nontrivial: {str(d.nontrivial).lower()}")
        if d.degenerate:
            self.add("degenerate: true")
        names = d.block_names()
        for block, name in zip(d.bridge_partition, names):
            code = ''.join(d.w_assignment[block[0]])
            self.add(f"{','.join(d.w_names)}={code}: {name or '-'} "
                     f"{{{' '.join(f't{t}' for t in block)}}}")
        for column in d.chart.dropped:
            self.add(f"dropped: {column.name}")
        self.section(f"{prefix}T_g", serialize(d.table_g))
        self.section(f"{prefix}T_h", serialize(d.table_h))
        self.verification(d.verification)

    def render(self) -> str:
        return '\n'.join(self.lines) + '\n'


def _decompose(cfg: RunConfig, R: Relation, report: Report) -> int:
    if not cfg.bound:
        raise DecompError("decompose needs at least one --bound")
    algorithm = select_algorithm(cfg, R)
    logger.info('running %s', algorithm.value)
    report.add(f"algorithm: {algorithm.value}")
    rng = random.Random(cfg.seed) if cfg.seed is not None else None
    options = {'encoding': cfg.encoding}

    if algorithm == Algorithm.BETA:
        md: MultiDecomposition = fda_beta(R, cfg.bound, cfg.free, rng=rng, **options)
        report.add(f"bound: {' / '.join(','.join(p.bound) for p in md.parts)}",
                   f"free: {','.join(md.free)}")
        for number, part in enumerate(md.parts, start=1):
            report.decomposition(part, f"part {number}")
        report.section('T_h', serialize(md.table_h))
        report.verification(md.verification)
        return EXIT_OK if md.verification.ok else EXIT_VERIFICATION

    if len(cfg.bound) > 1:
        raise DecompError(f"{algorithm.value} takes a single --bound")
    bound = cfg.bound[0]
    if algorithm == Algorithm.ALPHA:
        results = [fda_alpha(R, bound, cfg.free, rng=rng, **options)]
    elif algorithm == Algorithm.GAMMA:
        if cfg.free is None:
            raise DecompError("gamma needs --free")
        if cfg.enumerate_gamma:
            results = enumerate_gamma(R, bound, cfg.free, cfg.limit, **options)
        else:
            results = [fda_gamma(R, bound, cfg.free, rng=rng, **options)]
    else:
        results = fda_delta(R, bound, cfg.free, mode=cfg.mcp, limit=cfg.limit, **options)

    report.add(f"bound: {','.join(results[0].bound)}", f"free: {','.join(results[0].free)}",
               f"solutions: {len(results)}")
    for number, d in enumerate(results, start=1):
        report.decomposition(d, f"solution {number}" if len(results) > 1 else None)
    return EXIT_OK if all(d.verification.ok for d in results) else EXIT_VERIFICATION


def _chart(cfg: RunConfig, R: Relation, report: Report) -> int:
    if len(cfg.bound) != 1:
        raise DecompError("chart needs exactly one --bound")
    bound = R.ordered(cfg.bound[0])
    free = cfg.free if cfg.free is not None else [n for n in R.inputs if n not in bound]
    report.section('chart M_ZY', render_chart(build_chart(R, bound, free)))
    return EXIT_OK


def _check(cfg: RunConfig, R: Relation, report: Report) -> int:
    if cfg.command == 'check-fd':
        result = holds_fd(R, cfg.lhs, cfg.rhs)
        report.section('dependency', result.describe())
        return EXIT_OK
    result = holds_mvd(R, cfg.lhs, cfg.rhs)
    lhs, rhs = R.ordered(cfg.lhs), R.ordered(cfg.rhs)
    rest = [n for n in R.names if n not in lhs and n not in rhs]
    report.section('dependency', result.describe())
    report.add(f"lossless join: {str(lossless_check(R, lhs, rhs, rest)).lower()}")
    if cfg.dot:
        graph = build_graph(induced_partition(R, lhs + rhs), induced_partition(R, list(lhs) + rest))
        report.section('graph', to_dot(graph))
    return EXIT_OK


def _verify(cfg: RunConfig, R: Relation, report: Report,
            g_texts: Optional[Sequence[str]], h_text: Optional[str]) -> int:
    if g_texts is None:
        g_texts = [_read(path, 'g table') for path in cfg.g_paths]
    if h_text is None:
        h_text = _read(cfg.h_path, 'h table (--h)')
    g_tables = [parse_truth_table(text) for text in g_texts]
    result = verify_tables(R, g_tables, parse_truth_table(h_text))
    report.verification(result)
    return EXIT_OK if result.ok else EXIT_VERIFICATION


def run(cfg: RunConfig, text: Optional[str] = None, g_texts: Optional[Sequence[str]] = None,
        h_text: Optional[str] = None) -> RunResult:
    """
    Executes one command. ``text`` (and ``g_texts`` / ``h_text`` for ``verify``) replace
    reading the files named in ``cfg``.
    """
    report = Report(cfg)
    try:
        R = parse_input(text if text is not None else _read(cfg.input_path, 'input table'),
                        cfg.extend_missing)
        if cfg.command == 'decompose':
            code = _decompose(cfg, R, report)
        elif cfg.command == 'chart':
            code = _chart(cfg, R, report)
        elif cfg.command == 'verify':
            code = _verify(cfg, R, report, g_texts, h_text)
        else:
            code = _check(cfg, R, report)
    except (VerificationFailed, InconsistentResult) as e:
        logger.error('verification failed: %s', e)
        report.section('verification', f"error: {e}")
        report.add('result: FAILED')
        return RunResult(EXIT_VERIFICATION, report.render())
    except (DecompError, TruthTableError, OSError) as e:
        logger.error('%s', e)
        return RunResult(EXIT_USAGE, f"{REPORT_HEADER}\nerror: {e}\n")
    return RunResult(code, report.render())
