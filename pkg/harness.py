'''
Description:
    Command line entry point and sweep engine. Instances are generated (or loaded from .ecg files), solved
    exactly by the oracle and heuristically by the local search, and checked against every lower bound.
    Sweeps write one JSON line per instance and stop at the first confirmed counterexample, which is saved
    as an .ecg file next to the records.

    Subcommands:
        gen rainbow-k --n N | gen extremal --s S | gen random --n N --p P --c C --seed SEED
        solve <file>             exact longest heterochromatic path
        extend <file>            local search (from --start, or from every vertex)
        verify <file>            full bound report as JSON
        sweep                    randomized (or extremal) sweep writing a .jsonl records file
        stats <file>             k, s and c of a graph

    Exit status: 0 success, 1 usage error, 2 bound violation (counterexample), 3 I/O or parse error.

    NOTE: The worker count for sweeps comes from --threads, else from the RAINBOW_PATH_THREADS environment
    variable, else 1. With one worker the records file is byte-identical between runs of the same config;
    with more workers records may come out in a different order (each carries its trial index).
    NOTE: Flagged instances (counterexamples, oracle disagreements) are also written as "trial,digest,reason"
    lines to <output>.flagged.csv.
'''

#import modules
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional, Sequence

import numpy as np
import pandas as pd

from bounds import BoundReport, check_instance
from generators import GenKind, GenSpec
from graph_core import EcgParseError, EdgeColoredGraph, GraphDomainError, graph_stats, read_ecg, serialize_ecg, write_ecg
from lemmas import check_lemmas
from oracle import DEFAULT_BUDGET, EXHAUSTIVE_MAX_VERTICES, exhaustive_longest, longest_hetero_path
from path_engine import best_local_search, local_search

logger = logging.getLogger(__name__)

#flagged instances go through their own logger so the cli can copy them into a csv file
flagged_logger = logging.getLogger('harness.flagged')

THREADS_ENV = 'RAINBOW_PATH_THREADS'

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_IO = 3

DEFAULT_N_MAX = 12
DEFAULT_C_MAX = 40
LEMMA_MAX_VERTICES = 9
MIN_GAP_INSTANCES = 5


class SweepIOError(OSError):
    '''Raised when the sweep output cannot be written; always raised before any instance is run.'''


def graph_digest(g: EdgeColoredGraph) -> str:
    '''Lowercase hex SHA-256 of the comment-free .ecg serialization.'''
    return hashlib.sha256(serialize_ecg(g).encode('utf-8')).hexdigest()


@dataclass(frozen=True)
class SweepRecord:
    trial: Optional[int]
    source: str  #the generating "gen ..." command or the .ecg file path
    spec: Optional[GenSpec]
    digest: str
    report: BoundReport
    exact: bool
    nodes: int
    runtime_ms: float
    lemma_violations: Optional[dict[str, int]] = None  #violations per exchange check
    recheck: Optional[str] = None  #'confirmed', 'disagreement' or 'unverified' after a violation

    @property
    def violates(self) -> bool:
        '''True when an exact result contradicts a proven bound or an exchange lemma.'''
        return self.exact and (not self.report.all_ok or self.lemma_total > 0)

    @property
    def lemma_total(self) -> int:
        return sum(self.lemma_violations.values()) if self.lemma_violations else 0

    def to_dict(self, timings: bool = False) -> dict:
        data = {'trial': self.trial, 'source': self.source}
        if self.spec is not None:
            data['spec'] = self.spec.to_dict()
        data.update({'digest': self.digest, 'exact': self.exact, 'nodes': self.nodes, 'report': self.report.to_dict()})
        if self.lemma_violations is not None:
            data['lemma_violations'] = dict(self.lemma_violations)
        if self.recheck is not None:
            data['recheck'] = self.recheck
        if timings:
            data['runtime_ms'] = round(self.runtime_ms, 3)
        return data

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings))

    @classmethod
    def from_json(cls, line: str) -> SweepRecord:
        data = json.loads(line)
        spec = None
        if 'spec' in data:
            fields = dict(data['spec'])
            spec = GenSpec(GenKind(fields.pop('kind')), **fields)
        return cls(
            trial=data['trial'],
            source=data['source'],
            spec=spec,
            digest=data['digest'],
            report=BoundReport.from_dict(data['report']),
            exact=data['exact'],
            nodes=data['nodes'],
            runtime_ms=data.get('runtime_ms', 0.0),
            lemma_violations=data.get('lemma_violations'),
            recheck=data.get('recheck'),
        )


def run_instance(g: EdgeColoredGraph, budget: int = DEFAULT_BUDGET, trial: Optional[int] = None,
                 source: str = '', spec: Optional[GenSpec] = None, lemmas: bool = False) -> SweepRecord:
    '''
    Description:
        Runs the local search from every vertex, the exact oracle and the bound check on one graph.
    Input:
        g - the edge-colored graph
        budget - oracle node budget; an exhausted budget gives an inexact record
        trial - trial index within a sweep (None for single files)
        source - the file path or generating command, for the record
        spec - the generator recipe, if the graph was generated
        lemmas - also run the exchange lemma checks (only for graphs with at most 9 vertices)
    Output:
        the SweepRecord for this graph
    '''
    start_time = time.time()

    heuristic = best_local_search(g)
    result = longest_hetero_path(g, budget)
    report = check_instance(g, result.path, heuristic)

    if not result.exact:
        logger.warning(f"trial {trial}: oracle budget exhausted, record is inexact and excluded from verdicts")
    elif heuristic.length > result.length:
        logger.error(f"trial {trial}: local search found length {heuristic.length} above the exact {result.length}")

    lemma_violations = None
    if lemmas and result.exact and g.n <= LEMMA_MAX_VERTICES:
        lemma_violations = check_lemmas(g, optimum=result.length).counts()

    return SweepRecord(
        trial=trial,
        source=source,
        spec=spec,
        digest=graph_digest(g),
        report=report,
        exact=result.exact,
        nodes=result.explored,
        runtime_ms=(time.time() - start_time) * 1000,
        lemma_violations=lemma_violations,
    )


def recheck_violation(g: EdgeColoredGraph, record: SweepRecord) -> str:
    '''
    Description:
        Re-solves a suspected counterexample with the pruning-free enumeration so that solver bugs are not
        reported as mathematical events.
    Output:
        'confirmed' if the enumeration agrees with the recorded length, 'disagreement' if it does not,
        'unverified' if the graph is too large to enumerate
    '''
    if g.n > EXHAUSTIVE_MAX_VERTICES:
        return 'unverified'
    length = exhaustive_longest(g).length
    if length == record.report.exact_length:
        return 'confirmed'
    logger.error(f"trial {record.trial}: oracle length {record.report.exact_length} but enumeration gives {length}")
    return 'disagreement'


@dataclass
class SweepConfig:
    trials: int = 100
    n_min: int = 2
    n_max: int = DEFAULT_N_MAX
    p_min: float = 0.2
    p_max: float = 0.9
    c_min: int = 1
    c_max: int = DEFAULT_C_MAX
    seed: int = 0
    threads: int = 1
    output: str = 'sweep.jsonl'
    budget: int = DEFAULT_BUDGET
    extremal: Optional[tuple[int, int]] = None  #s range replacing the random stream
    timings: bool = False
    check_lemmas: bool = False
    n_cap: int = DEFAULT_N_MAX

    def validate(self) -> None:
        if self.extremal is None:
            if self.trials < 1:
                raise GraphDomainError(f"trials must be at least 1, got {self.trials}")
            if not 1 <= self.n_min <= self.n_max:
                raise GraphDomainError(f"vertex range {self.n_min}..{self.n_max} is empty or starts below 1")
            if self.n_max > self.n_cap:
                raise GraphDomainError(f"n max {self.n_max} is above the exact oracle cap {self.n_cap}")
            if not 0.0 <= self.p_min <= self.p_max <= 1.0:
                raise GraphDomainError(f"edge probability range {self.p_min}..{self.p_max} is not inside [0, 1]")
            if not 1 <= self.c_min <= self.c_max:
                raise GraphDomainError(f"color range {self.c_min}..{self.c_max} is empty or starts below 1")
            if self.seed < 0:
                raise GraphDomainError(f"seed must be nonnegative, got {self.seed}")
        else:
            s_min, s_max = self.extremal
            if not 1 <= s_min <= s_max:
                raise GraphDomainError(f"extremal range {s_min}..{s_max} is empty or starts below 1")
            if (s_max + 4) // 2 > self.n_cap:
                raise GraphDomainError(f"extremal graph for s={s_max} has more than {self.n_cap} vertices")
        if self.threads < 1:
            raise GraphDomainError(f"threads must be at least 1, got {self.threads}")
        if self.budget <= 0:
            raise GraphDomainError(f"oracle budget must be positive, got {self.budget}")

    def specs(self) -> Iterator[tuple[int, GenSpec]]:
        '''The deterministic instance stream: trial t draws its parameters from SeedSequence(seed, spawn_key=(t,)).'''
        if self.extremal is not None:
            s_min, s_max = self.extremal
            for trial, s in enumerate(range(s_min, s_max + 1)):
                yield trial, GenSpec.extremal_union(s)
            return

        for trial in range(self.trials):
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=(trial,))))
            n = int(rng.integers(self.n_min, self.n_max + 1))
            p = round(float(rng.uniform(self.p_min, self.p_max)), 4)
            c = int(rng.integers(self.c_min, self.c_max + 1))
            graph_seed = int(rng.integers(0, 2**63 - 1))
            yield trial, GenSpec.random(n, p, c, graph_seed)


@dataclass
class SweepSummary:
    records: int = 0
    exact: int = 0
    inexact: int = 0
    degree_violations: int = 0
    union_violations: int = 0
    lemma_violations: int = 0
    tight: int = 0
    disagreements: int = 0
    degree_gap_histogram: dict[int, int] = field(default_factory=dict)
    union_gap_histogram: dict[int, int] = field(default_factory=dict)
    min_gap_instances: list[dict] = field(default_factory=list)
    attainment_rate: Optional[float] = None
    counterexample: Optional[str] = None

    def to_dict(self) -> dict:
        data = dict(self.__dict__)
        #json object keys must be strings
        data['degree_gap_histogram'] = {str(gap): count for gap, count in self.degree_gap_histogram.items()}
        data['union_gap_histogram'] = {str(gap): count for gap, count in self.union_gap_histogram.items()}
        return data


def summarize(records: Sequence[SweepRecord]) -> SweepSummary:
    '''
    Description:
        Aggregates sweep records: verdict counts, histograms of exact length minus bound, the instances
        closest to a bound and the fraction of instances where the local search reached the optimum.
        Inexact records are counted but left out of every verdict statistic.
    '''
    summary = SweepSummary(records=len(records))
    if not records:
        return summary

    frame = pd.DataFrame([{
        'trial': record.trial,
        'source': record.source,
        'digest': record.digest,
        'exact': record.exact,
        'lemma_violations': record.lemma_total,
        'recheck': record.recheck,
        **record.report.to_dict(),
    } for record in records])
    frame['union_bound'] = frame['union_bound'].astype('float')

    summary.inexact = int((~frame['exact']).sum())
    frame = frame[frame['exact']].copy()
    summary.exact = len(frame)
    if frame.empty:
        return summary

    summary.degree_violations = int((~frame['degree_ok']).sum())
    summary.union_violations = int((~frame['union_ok']).sum())
    summary.lemma_violations = int(frame['lemma_violations'].sum())
    summary.tight = int(frame['tight'].sum())
    summary.disagreements = int((frame['recheck'] == 'disagreement').sum())

    frame['degree_gap'] = frame['exact_length'] - frame['degree_bound']
    frame['union_gap'] = frame['exact_length'] - frame['union_bound']
    frame['gap'] = frame['exact_length'] - frame[['degree_bound', 'union_bound']].max(axis=1)

    summary.degree_gap_histogram = {int(gap): int(count) for gap, count in frame['degree_gap'].value_counts().sort_index().items()}
    summary.union_gap_histogram = {int(gap): int(count) for gap, count in frame['union_gap'].dropna().value_counts().sort_index().items()}

    closest = frame.sort_values(['gap', 'trial'], kind='mergesort').head(MIN_GAP_INSTANCES)
    summary.min_gap_instances = [
        {'trial': None if pd.isna(row.trial) else int(row.trial), 'source': row.source, 'digest': row.digest, 'gap': int(row.gap)}
        for row in closest.itertuples()
    ]
    summary.attainment_rate = float((frame['heuristic_length'] == frame['exact_length']).mean())

    return summary


def _counterexample_path(output: str, trial: Optional[int]) -> str:
    stem, _ = os.path.splitext(output)
    return f"{stem}.counterexample-{trial}.ecg"


def sweep(config: SweepConfig) -> SweepSummary:
    '''
    Description:
        Runs every instance of the configured stream, writes one JSON line per record to config.output
        and stops at the first confirmed bound or lemma violation.
    Input:
        config - the sweep configuration
    Output:
        the SweepSummary; summary.counterexample holds the path of the saved .ecg if the sweep stopped
        on a violation
    Raises:
        GraphDomainError for an invalid configuration, SweepIOError if the output cannot be written
    '''
    config.validate()

    try:
        directory = os.path.dirname(config.output)
        if directory:
            os.makedirs(directory, exist_ok=True)
        output_file = open(config.output, mode='w', encoding='utf-8', newline='\n')
    except OSError as error:
        raise SweepIOError(f"unable to write sweep records to {config.output}: {error}") from error

    start_time = time.time()
    logger.info(f"sweep started: {config}")

    records: list[SweepRecord] = []
    stop = threading.Event()
    counterexample = None

    def work(trial: int, spec: GenSpec) -> Optional[tuple[SweepRecord, EdgeColoredGraph]]:
        if stop.is_set():
            return None
        g = spec.build()
        return run_instance(g, config.budget, trial=trial, source=spec.describe(), spec=spec, lemmas=config.check_lemmas), g

    def handle(record: SweepRecord, g: EdgeColoredGraph) -> bool:
        #returns True when the sweep has to stop
        nonlocal counterexample

        if record.violates:
            record = replace(record, recheck=recheck_violation(g, record))
            if record.recheck == 'disagreement':
                flagged_logger.error(f"{record.trial},{record.digest},oracle disagreement")
            else:
                counterexample = _counterexample_path(config.output, record.trial)
                write_ecg(counterexample, g, comments=[record.source, f"sha256 {record.digest}"])
                flagged_logger.error(f"{record.trial},{record.digest},bound or lemma violation ({record.recheck}) saved to {counterexample}")

        output_file.write(record.to_json(config.timings) + '\n')
        output_file.flush()
        records.append(record)
        logger.info(f"trial {record.trial}: {record.source} exact {record.report.exact_length} heuristic {record.report.heuristic_length}")
        return counterexample is not None

    with output_file:
        if config.threads == 1:
            for trial, spec in config.specs():
                if handle(*work(trial, spec)):
                    break
        else:
            with ThreadPoolExecutor(max_workers=config.threads) as executor:
                futures = [executor.submit(work, trial, spec) for trial, spec in config.specs()]
                for future in as_completed(futures):
                    outcome = future.result()
                    if outcome is None or stop.is_set():
                        continue
                    if handle(*outcome):
                        stop.set()
                        for pending in futures:
                            pending.cancel()

    summary = summarize(records)
    summary.counterexample = counterexample
    logger.info("The sweep took --- %s seconds ---" % (time.time() - start_time))
    return summary


class _ArgumentParser(argparse.ArgumentParser):
    '''argparse exits with status 2 on bad arguments; usage errors here exit with 1.'''

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='harness.py', description='Heterochromatic path toolkit for edge-colored graphs')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='Enable verbose mode (-v for progress information, -vv for debug output)')
    parser.add_argument('-l', '--log-path', type=str, required=False, help='Path of the log file (if not provided, log messages are printed to stderr)')

    commands = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    gen = commands.add_parser('gen', help='Generate an .ecg graph')
    families = gen.add_subparsers(dest='family', required=True, parser_class=_ArgumentParser)
    gen_output = argparse.ArgumentParser(add_help=False)
    gen_output.add_argument('-o', '--output', type=str, required=False, help='Path of the .ecg file to write (default: stdout)')
    rainbow = families.add_parser('rainbow-k', parents=[gen_output], help='Rainbow complete graph K_n')
    rainbow.add_argument('--n', type=int, required=True, help='Number of vertices')
    extremal = families.add_parser('extremal', parents=[gen_output], help='Rainbow extremal graph for the color neighborhood union condition')
    extremal.add_argument('--s', type=int, required=True, help='Color neighborhood union parameter')
    random_family = families.add_parser('random', parents=[gen_output], help='Seeded random edge-colored graph')
    random_family.add_argument('--n', type=int, required=True, help='Number of vertices')
    random_family.add_argument('--p', type=float, required=True, help='Edge probability')
    random_family.add_argument('--c', type=int, required=True, help='Number of available colors')
    random_family.add_argument('--seed', type=int, required=True, help='Seed of the PCG64 generator')

    solve = commands.add_parser('solve', help='Exact longest heterochromatic path')
    solve.add_argument('file', type=str, help='Path of the .ecg file')
    solve.add_argument('-b', '--budget', type=int, default=DEFAULT_BUDGET, help=f'Oracle node budget (Default: {DEFAULT_BUDGET})')
    solve.add_argument('-t', '--threads', type=int, default=1, help='Threads searching start vertices concurrently (Default: 1)')

    extend = commands.add_parser('extend', help='Local search with the move catalog')
    extend.add_argument('file', type=str, help='Path of the .ecg file')
    extend.add_argument('-s', '--start', type=int, required=False, help='Start vertex (if not provided, every vertex is tried)')

    verify = commands.add_parser('verify', help='Bound report of one graph as JSON')
    verify.add_argument('file', type=str, help='Path of the .ecg file')
    verify.add_argument('-b', '--budget', type=int, default=DEFAULT_BUDGET, help=f'Oracle node budget (Default: {DEFAULT_BUDGET})')

    stats = commands.add_parser('stats', help='Minimum color degree k, minimum color neighborhood union s, color count c')
    stats.add_argument('file', type=str, help='Path of the .ecg file')

    sweep_parser = commands.add_parser('sweep', help='Randomized counterexample search writing JSON lines')
    defaults = SweepConfig()
    sweep_parser.add_argument('--trials', type=int, default=defaults.trials, help=f'Number of random instances (Default: {defaults.trials})')
    sweep_parser.add_argument('--n-min', type=int, default=defaults.n_min, help=f'Smallest vertex count (Default: {defaults.n_min})')
    sweep_parser.add_argument('--n-max', type=int, default=defaults.n_max, help=f'Largest vertex count (Default: {defaults.n_max})')
    sweep_parser.add_argument('--p-min', type=float, default=defaults.p_min, help=f'Smallest edge probability (Default: {defaults.p_min})')
    sweep_parser.add_argument('--p-max', type=float, default=defaults.p_max, help=f'Largest edge probability (Default: {defaults.p_max})')
    sweep_parser.add_argument('--c-min', type=int, default=defaults.c_min, help=f'Smallest color count (Default: {defaults.c_min})')
    sweep_parser.add_argument('--c-max', type=int, default=defaults.c_max, help=f'Largest color count (Default: {defaults.c_max})')
    sweep_parser.add_argument('--seed', type=int, default=defaults.seed, help=f'Base seed of the instance stream (Default: {defaults.seed})')
    sweep_parser.add_argument('-t', '--threads', type=int, required=False, help=f'Worker threads (Default: ${THREADS_ENV} or 1)')
    sweep_parser.add_argument('-o', '--output', type=str, default=defaults.output, help=f'Path of the .jsonl records file (Default: {defaults.output})')
    sweep_parser.add_argument('-b', '--budget', type=int, default=defaults.budget, help=f'Oracle node budget per instance (Default: {defaults.budget})')
    sweep_parser.add_argument('--extremal', type=int, nargs=2, metavar=('S_MIN', 'S_MAX'), required=False, help='Sweep the extremal graphs for S_MIN..S_MAX instead of random graphs')
    sweep_parser.add_argument('--timings', action='store_true', help='Store the runtime of every instance (records are then no longer byte-identical between runs)')
    sweep_parser.add_argument('--check-lemmas', action='store_true', help=f'Also check the exchange lemmas on instances with at most {LEMMA_MAX_VERTICES} vertices')

    return parser


#handlers installed by previous cli calls in the same process
_installed_handlers: list[logging.Handler] = []


def configure_logging(verbose: int, log_path: Optional[str]) -> None:
    logger_root = logging.getLogger()
    for handler in _installed_handlers:
        logger_root.removeHandler(handler)
        flagged_logger.removeHandler(handler)
        handler.close()
    _installed_handlers.clear()

    #if verbose is set, allow more information to be logged, otherwise only display errors/warnings
    if verbose >= 2:
        logger_root.setLevel(logging.DEBUG)
    elif verbose == 1:
        logger_root.setLevel(logging.INFO)
    else:
        logger_root.setLevel(logging.WARNING)

    #log to the file if one is provided, otherwise to stderr
    handler = logging.FileHandler(log_path) if log_path else logging.StreamHandler()
    handler.setLevel(logger_root.level)
    handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)-8s: %(message)s"))
    logger_root.addHandler(handler)
    _installed_handlers.append(handler)


def _attach_flagged_file(output: str) -> None:
    stem, _ = os.path.splitext(output)
    handler = logging.FileHandler(f"{stem}.flagged.csv", mode='w', delay=True)
    handler.setLevel(logging.ERROR)
    handler.setFormatter(logging.Formatter('%(message)s'))
    flagged_logger.addHandler(handler)
    _installed_handlers.append(handler)


def resolve_threads(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    value = os.environ.get(THREADS_ENV)
    if not value:
        return 1
    try:
        return int(value)
    except ValueError:
        raise GraphDomainError(f"{THREADS_ENV} must be an integer, got {value!r}") from None


def _gen_spec(args: argparse.Namespace) -> GenSpec:
    if args.family == 'rainbow-k':
        return GenSpec.rainbow_complete(args.n)
    if args.family == 'extremal':
        return GenSpec.extremal_union(args.s)
    return GenSpec.random(args.n, args.p, args.c, args.seed)


def _run_command(args: argparse.Namespace) -> int:
    if args.command == 'gen':
        spec = _gen_spec(args)
        text = serialize_ecg(spec.build(), comments=[spec.describe()])
        if args.output:
            with open(args.output, mode='w', encoding='utf-8', newline='\n') as file:
                file.write(text)
            logger.info(f"Wrote {spec.describe()} to {args.output}")
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if args.command == 'sweep':
        config = SweepConfig(
            trials=args.trials, n_min=args.n_min, n_max=args.n_max, p_min=args.p_min, p_max=args.p_max,
            c_min=args.c_min, c_max=args.c_max, seed=args.seed, threads=resolve_threads(args.threads),
            output=args.output, budget=args.budget,
            extremal=tuple(args.extremal) if args.extremal else None,
            timings=args.timings, check_lemmas=args.check_lemmas,
        )
        config.validate()
        _attach_flagged_file(config.output)
        summary = sweep(config)
        print(json.dumps(summary.to_dict(), indent=2))
        if summary.counterexample is not None:
            print(f"Error: bound violation, instance saved to {summary.counterexample}", file=sys.stderr)
            return EXIT_COUNTEREXAMPLE
        return EXIT_OK

    g = read_ecg(args.file)

    if args.command == 'stats':
        stats = graph_stats(g)
        print(json.dumps({'k': stats.k, 's': stats.s, 'c': stats.c}))
        return EXIT_OK

    if args.command == 'solve':
        result = longest_hetero_path(g, args.budget, threads=args.threads)
        print(result.path.render(g))
        logger.info(f"explored {result.explored} nodes, pruned {result.pruned}")
        if not result.exact:
            print(f"Warning: node budget of {args.budget} exhausted, the path may not be the longest", file=sys.stderr)
        return EXIT_OK

    if args.command == 'extend':
        path = best_local_search(g) if args.start is None else local_search(g, args.start)
        print(path.render(g))
        return EXIT_OK

    #verify
    record = run_instance(g, args.budget, source=args.file)
    print(json.dumps(record.report.to_dict()))
    if record.violates and recheck_violation(g, record) != 'disagreement':
        print(f"Error: {args.file} violates a proven lower bound", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cli(argv: Optional[Sequence[str]] = None) -> int:
    '''
    Description:
        Parses the command line, configures logging and runs one subcommand.
    Input:
        argv - the arguments without the program name (default: sys.argv[1:])
    Output:
        the exit status
    '''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return exit_request.code if isinstance(exit_request.code, int) else EXIT_USAGE

    configure_logging(args.verbose, args.log_path)

    try:
        return _run_command(args)
    except EcgParseError as error:
        print(f"Error: {getattr(args, 'file', '')}: {error}", file=sys.stderr)
        return EXIT_IO
    except OSError as error:
        print(f"Error: {error}", file=sys.stderr)
        return EXIT_IO
    except GraphDomainError as error:
        print(f"Error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(cli())
