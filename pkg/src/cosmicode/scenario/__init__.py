"""Scenario documents, runs and reports."""

from cosmicode.scenario.models import Scenario, parse_scenario
from cosmicode.scenario.runner import Report, ReportFormat, emit_report, run_scenario

__all__ = ["Report", "ReportFormat", "Scenario", "emit_report", "parse_scenario", "run_scenario"]
