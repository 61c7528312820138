"""
metrofan - Main Orchestrator

Exact analysis of finite metric spaces through their KRW polytopes, the
Wasserstein arrangement, split decompositions and tight spans.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from .analyzers.arrangement import arrangement, characteristic_polynomial, chamber_count, poset_and_charpoly
from .analyzers.classes import classify
from .analyzers.krw import build_krw, facet_graph_check, is_generic
from .analyzers.metrics import validate
from .analyzers.polytope import is_simplicial
from .analyzers.reproduction import TARGETS, reproduce
from .analyzers.tightspan import hypersimplex_type, same_tight_span_type
from .clients.fixture_client import FixtureClient
from .clients.metric_reader import MetricReader
from .config import Config
from .errors import (
    InternalDisagreementError,
    InvalidMetricError,
    MetricParseError,
    MetrofanError,
    ReproductionMismatch,
    TooLargeError,
)
from .formatters.csv_formatter import CsvFormatter
from .formatters.dot_formatter import DotFormatter
from .formatters.json_formatter import JsonFormatter
from .formatters.markdown_formatter import MarkdownFormatter
from .models.graph import DirectedGraph
from .models.metric import Metric, MetricClass
from .models.report import AnalysisReport, ComparisonReport, ReproductionResult

MAX_LISTING_POINTS = 6


def _same_f_vector(m1: Metric, m2: Metric) -> Optional[bool]:
    if any(v == 0 for v in m1.values + m2.values):
        return None
    return build_krw(m1).f_vector == build_krw(m2).f_vector


class AnalysisOrchestrator:
    """Runs the command workflows and reports progress on stderr."""

    def __init__(self, config: Config, err: Optional[TextIO] = None):
        """Initialize orchestrator with configuration."""
        self.config = config
        self.err = err or sys.stderr
        self.reader = MetricReader()
        self.fixtures = FixtureClient(config.data_dir)

    def _say(self, text: str = ""):
        if not self.config.quiet:
            print(text, file=self.err)

    def load(self, path: str) -> Metric:
        """Read a metric file and reject anything that is not a pseudometric."""
        self._say(f"Reading metric from {path}...")
        m = self.reader.read(path)
        validity = validate(m)
        self._say(f"  Points: {m.n}")
        self._say(f"  Class: {validity.value}")
        if validity is MetricClass.NOT_PSEUDOMETRIC:
            raise InvalidMetricError(f"{path} violates a triangle inequality or has a negative distance")
        return m

    def analyze(self, path: str, facets: bool = False, dot_dir: Optional[str] = None) -> AnalysisReport:
        """
        Execute the full analysis of one metric file.

        Returns:
            AnalysisReport with every computed invariant
        """
        m = self.load(path)
        validity = validate(m)
        strict = validity is MetricClass.STRICT
        self._say()

        krw = None
        if validity is MetricClass.PSEUDOMETRIC:
            self._say("Skipping KRW polytope: some distance is zero")
        else:
            self._say("Computing KRW polytope...")
            krw = build_krw(m)
            self._say(f"  f-vector: {krw.f_vector}")
            self._say(f"  Simplicial: {is_simplicial(krw.lattice)}")
        generic = is_generic(m) if strict else None
        self._say()

        self._say("Locating the Wasserstein cone...")
        space = arrangement(m.n)
        sv = space.sign_vector(m)
        stabilizer = space.stabilizer(sv)
        self._say(f"  Hyperplanes: {len(space)}")
        self._say(f"  Stabilizer order: {stabilizer.order}")
        self._say()

        self._say("Classifying metric...")
        classes = classify(m)
        self._say(f"  Tree-like: {classes.tree_like}")
        self._say(f"  Totally split-decomposable: {classes.totally_split_decomposable}")
        self._say()

        cells = hypersimplex_type(m).cell_count if m.n >= 3 else 1
        graphs = None
        if krw is not None and (facets or dot_dir):
            if strict and m.n <= 6 and not facet_graph_check(m, krw):
                raise InternalDisagreementError("maximal admissible graphs differ from the KRW facets")
            graphs = sorted(
                (DirectedGraph.from_edges(m.n, labels) for labels in krw.facet_labels()),
                key=lambda g: g.sorted_edges(),
            )
        if dot_dir and graphs is not None:
            written = DotFormatter().write_all(graphs, dot_dir)
            self._say(f"  Wrote {len(written)} DOT files to {dot_dir}")

        return AnalysisReport(
            metric=m,
            validity=validity.value,
            generic=generic,
            f_vector=krw.f_vector if krw is not None else None,
            simplicial=is_simplicial(krw.lattice) if krw is not None else None,
            sign_vector=str(sv),
            sign_vector_digest=sv.digest,
            classes=classes,
            tight_span_cells=cells,
            stabilizer_order=stabilizer.order,
            stabilizer_generators=stabilizer.cycle_notation,
            facets=[g.label() for g in graphs] if graphs is not None and facets else None,
        )

    def arrangement_stats(self, n: int, count: bool = False, listing: bool = False) -> dict:
        """Hyperplane and lineality statistics of W_n, with chamber counting on request."""
        if n < 4:
            raise ValueError("n must be at least 4")
        if n > MAX_LISTING_POINTS:
            raise TooLargeError(f"W_{n} is not listed (n must be at most {MAX_LISTING_POINTS})")
        self._say(f"Generating W_{n}...")
        space = arrangement(n)
        dimension, spanned = space.lineality()
        self._say(f"  Hyperplanes: {len(space)}")
        self._say(f"  Lineality dimension: {dimension}")
        stats = {
            'n': n,
            'hyperplanes': len(space),
            'lineality_dim': dimension,
            'lineality_spanned_by_elementary_splits': spanned,
        }
        if count:
            self._say("Counting chambers...")
            poset, coefficients = poset_and_charpoly(n)
            chambers = chamber_count(poset)
            self._say(f"  Flats: {len(poset.flats)}")
            self._say(f"  Chambers: {chambers}")
            stats['charpoly'] = {
                'coefficients': coefficients,
                'polynomial': str(characteristic_polynomial(poset).as_expr()),
            }
            stats['chambers'] = chambers
        if listing:
            stats['list'] = [h.to_dict() for h in space.hyperplanes]
        return stats

    def compare(self, first: str, second: str) -> ComparisonReport:
        """Compare two metrics by Wasserstein cone, tight-span type and f-vector."""
        m1 = self.load(first)
        m2 = self.load(second)
        if m1.n != m2.n:
            raise MetricParseError(f"metrics have {m1.n} and {m2.n} points")
        self._say()
        self._say("Comparing...")
        space = arrangement(m1.n)
        report = ComparisonReport(
            same_wasserstein_cone=space.sign_vector(m1) == space.sign_vector(m2),
            same_tight_span_type=same_tight_span_type(m1, m2),
            same_f_vector=_same_f_vector(m1, m2),
        )
        for key, value in report.to_dict().items():
            self._say(f"  {key}: {value}")
        return report

    def reproduce(self, targets: List[str]) -> List[ReproductionResult]:
        """Recompute the requested tables."""
        results = []
        for target in targets:
            self._say(f"Reproducing {target}...")
            result = reproduce(target, self.fixtures, self.config.threads)
            self._say(f"  Checks: {len(result.checks)}")
            self._say(f"  Mismatches: {len(result.mismatches)}")
            self._say(f"  Time: {result.seconds:.1f}s")
            results.append(result)
        self._say("=" * 80)
        verdict = "PASS" if all(r.passed for r in results) else "FAIL"
        self._say(f"{verdict}: {', '.join(r.target for r in results)}")
        self._say("=" * 80)
        return results


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='metrofan',
        description='Exact analysis of finite metrics via KRW polytopes and the Wasserstein arrangement.',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', help='full report for one metric file')
    analyze.add_argument('file')
    analyze.add_argument('--facets', action='store_true', help='include facet graphs')
    analyze.add_argument('--dot', metavar='DIR', help='write one DOT file per facet graph')

    arrange = commands.add_parser('arrangement', help='statistics of the Wasserstein arrangement')
    arrange.add_argument('--n', type=int, required=True)
    arrange.add_argument('--count', action='store_true', help='characteristic polynomial and chambers')
    arrange.add_argument('--list', action='store_true', help='dump every hyperplane')

    compare = commands.add_parser('compare', help='compare two metric files')
    compare.add_argument('file1')
    compare.add_argument('file2')

    repro = commands.add_parser('reproduce', help='recompute a published table')
    repro.add_argument('target', choices=sorted(TARGETS) + ['all'])
    repro.add_argument('--summary', metavar='FILE', help='also write a markdown summary')
    return parser


def run(args: argparse.Namespace, config: Config, out: TextIO) -> int:
    orchestrator = AnalysisOrchestrator(config)
    json_out = JsonFormatter()

    if args.command == 'analyze':
        report = orchestrator.analyze(args.file, facets=args.facets, dot_dir=args.dot)
        print(json_out.format(report.to_dict()), file=out)
        return 0

    if args.command == 'arrangement':
        stats = orchestrator.arrangement_stats(args.n, count=args.count, listing=args.list)
        print(json_out.format(stats), file=out)
        return 0

    if args.command == 'compare':
        report = orchestrator.compare(args.file1, args.file2)
        print(json_out.format(report.to_dict()), file=out)
        return 0

    targets = list(TARGETS) if args.target == 'all' else [args.target]
    results = orchestrator.reproduce(targets)
    out.write(CsvFormatter().format(c for r in results for c in r.checks))
    if args.summary:
        Path(args.summary).write_text(MarkdownFormatter().format(results))
    mismatches = [c for r in results for c in r.mismatches]
    if mismatches:
        details = "; ".join(
            f"{c.target} row {c.row} {c.quantity}: expected {c.expected}, got {c.actual}" for c in mismatches
        )
        raise ReproductionMismatch(f"{len(mismatches)} mismatched cells: {details}")
    return 0


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    try:
        config = Config.from_env()
        logging.basicConfig(
            level=logging.DEBUG if config.debug else logging.WARNING,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
        return run(args, config, out or sys.stdout)

    except MetrofanError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code

    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
