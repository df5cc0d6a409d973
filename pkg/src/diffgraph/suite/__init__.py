from diffgraph.suite.catalog import Entry, catalog, group_count, order_class
from diffgraph.suite.checks import CHECKS, CheckResult, Context
from diffgraph.suite.runner import exit_code, render_report, report_dict, run_suite, summary

__all__ = [
    "CHECKS",
    "CheckResult",
    "Context",
    "Entry",
    "catalog",
    "exit_code",
    "group_count",
    "order_class",
    "render_report",
    "report_dict",
    "run_suite",
    "summary",
]
