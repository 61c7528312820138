#!/usr/bin/env python3
"""
metrofan - table reproduction runner

Recomputes every bundled table, writes the per-cell CSV and a markdown
summary, and exits non-zero when any published value is not reproduced.
"""
import os
import sys
from datetime import datetime
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.analyzers.reproduction import TARGETS
from src.config import Config
from src.formatters.csv_formatter import CsvFormatter
from src.formatters.markdown_formatter import MarkdownFormatter
from src.main import AnalysisOrchestrator


def main():
    """Run every reproduction target."""
    output_dir = Path(os.getenv('METROFAN_OUTPUT_DIR', 'reproduction'))
    targets = sys.argv[1:] or list(TARGETS)

    unknown = [t for t in targets if t not in TARGETS]
    if unknown:
        print(f"Error: unknown targets {', '.join(unknown)}")
        return 1

    try:
        config = Config.from_env()
        orchestrator = AnalysisOrchestrator(config)
        results = orchestrator.reproduce(targets)

        output_dir.mkdir(parents=True, exist_ok=True)
        checks = [c for r in results for c in r.checks]
        (output_dir / "checks.csv").write_text(CsvFormatter().format(checks))
        summary = MarkdownFormatter(run_date=datetime.now()).format(results)
        (output_dir / "summary.md").write_text(summary)

        print("=" * 80)
        print("REPORT")
        print("=" * 80)
        print()
        print(summary)

        return 0 if all(r.passed for r in results) else 5

    except Exception as e:
        print(f"Error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
