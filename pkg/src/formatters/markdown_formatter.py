"""Markdown summary of reproduction runs."""
from datetime import datetime
from typing import List, Optional

from ..models.report import MISMATCH, OK, OUT_OF_SCOPE, ReproductionResult


class MarkdownFormatter:
    """Formats reproduction results as a markdown report."""

    def __init__(self, run_date: Optional[datetime] = None):
        # without a run date the report depends on the results only
        self.run_date = run_date

    def format(self, results: List[ReproductionResult]) -> str:
        """
        Generate a complete markdown report.

        Args:
            results: one ReproductionResult per target

        Returns:
            Formatted markdown string
        """
        sections = [
            self._format_header(results),
            self._format_summary(results),
            self._format_verdict(results),
        ]
        sections.extend(self._format_mismatches(r) for r in results if r.mismatches)
        sections.append(self._format_footer())
        return "\n\n".join(sections)

    def _format_header(self, results: List[ReproductionResult]) -> str:
        checks = sum(len(r.checks) for r in results)
        lines = ["# Table Reproduction Report", ""]
        if self.run_date is not None:
            lines.append(f"**Run Date:** {self.run_date.strftime('%B %d, %Y at %H:%M')}")
        lines.append(f"**Targets:** {', '.join(r.target for r in results)}")
        lines.append(f"**Cells Checked:** {checks:,}")
        return "\n".join(lines)

    def _format_summary(self, results: List[ReproductionResult]) -> str:
        lines = [
            "## Summary",
            "",
            "| Target | Matching | Mismatched | Out of scope | Time |",
            "|--------|----------|------------|--------------|------|",
        ]
        for r in results:
            lines.append(
                f"| **{r.target}** | {r.count(OK)} | {r.count(MISMATCH)} | "
                f"{r.count(OUT_OF_SCOPE)} | {r.seconds:.1f}s |"
            )
        return "\n".join(lines)

    def _format_verdict(self, results: List[ReproductionResult]) -> str:
        failed = [r.target for r in results if not r.passed]
        if failed:
            return f"""## Verdict

> ### MISMATCHES FOUND
>
> Recomputed values differ from the published ones in: **{", ".join(failed)}**."""
        return """## Verdict

> ### ALL TABLES REPRODUCED
>
> Every recomputed value equals the published one."""

    def _format_mismatches(self, result: ReproductionResult) -> str:
        lines = [
            f"## Mismatches in {result.target}",
            "",
            "| Row | Quantity | Expected | Actual |",
            "|-----|----------|----------|--------|",
        ]
        for check in result.mismatches:
            lines.append(f"| {check.row} | {check.quantity} | {check.expected} | {check.actual} |")
        return "\n".join(lines)

    def _format_footer(self) -> str:
        return """---

*This report was automatically generated by **metrofan***"""
