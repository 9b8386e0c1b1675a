"""
Console output for the workbench.
"""
import sys

from colorama import Fore, Style

from .report import Report, ReportFormat


class DisplayManager:
    """Handles all console formatting; reports go to stdout, everything else to stderr"""

    @staticmethod
    def display_banner(title: str):
        """Display a banner above human-readable output"""
        print(f"\n{Fore.WHITE}{Style.BRIGHT}{'=' * 60}{Style.RESET_ALL}", file=sys.stderr)
        print(f"{Fore.WHITE}{Style.BRIGHT}   {title}{Style.RESET_ALL}", file=sys.stderr)
        print(f"{Fore.WHITE}{Style.BRIGHT}{'=' * 60}{Style.RESET_ALL}\n", file=sys.stderr)

    @staticmethod
    def display_report(report: Report):
        """Print the rendered report; only markdown gets a banner"""
        if report.format is ReportFormat.MARKDOWN and sys.stdout.isatty():
            DisplayManager.display_banner(f"sepax {report.command}")
        sys.stdout.write(report.render())
        sys.stdout.flush()

    @staticmethod
    def display_verdict(passed: bool, summary: str):
        colour = Fore.GREEN if passed else Fore.RED
        mark = "✓" if passed else "✗"
        print(f"{colour}{Style.BRIGHT}{mark} {summary}{Style.RESET_ALL}", file=sys.stderr)

    @staticmethod
    def display_error(message: str):
        """One red line on stderr"""
        print(f"{Fore.RED}Error: {message}{Style.RESET_ALL}", file=sys.stderr)
