import json
import math
from typing import Iterable
import pandas
from osn_cherednik.types import (
	CheckEntry,
	Report,
	RunConfig
)


TOOL_NAME = "osn-cherednik"
TOOL_VERSION = "1.0.0"


def serialize_config(config: RunConfig) -> dict:
	"""
	Makes a run configuration JSON-safe: unlimited workers become "unlimited", mutations a list.
	"""

	serialized = dict(config)
	serialized["workers"] = "unlimited" if math.isinf(config["workers"]) else config["workers"]
	serialized["mutations"] = list(config["mutations"])

	return serialized


def build_report(config: RunConfig, checks: Iterable[CheckEntry]) -> Report:
	"""
	Assembles a report.

	Args:
		config (RunConfig): The run configuration, serialized with `serialize_config`.
		checks (Iterable[CheckEntry]): The entries, already ordered.

	Returns:
		Report: The report with keys tool, version, config and checks.
	"""

	return {
		"tool": TOOL_NAME,
		"version": TOOL_VERSION,
		"config": serialize_config(config),
		"checks": list(checks),
	}


def render_json(report: Report) -> str:
	return json.dumps(report, indent=2, ensure_ascii=False)


def summary_line(checks: list[CheckEntry]) -> str:
	"""Returns "N checks: a pass, b fail, c vacuous"."""

	counts = {status: sum(1 for check in checks if check["status"] == status) for status in ("pass", "fail", "vacuous")}

	return f"{len(checks)} checks: {counts['pass']} pass, {counts['fail']} fail, {counts['vacuous']} vacuous"


def checks_frame(checks: list[CheckEntry]) -> pandas.DataFrame:
	"""
	Tabulates report entries.

	Args:
		checks (list[CheckEntry]): The entries.

	Returns:
		pandas.DataFrame: Columns id, status, detail, elapsed_ms and counterexample, with missing values as empty strings.
	"""

	rows = [
		{
			"id": check["id"],
			"status": check["status"],
			"detail": check["detail"] or "",
			"elapsed_ms": check["elapsed_ms"],
			"counterexample": (
				f"{check['counterexample']['input']}: {check['counterexample']['lhs']} != {check['counterexample']['rhs']}"
				if check["counterexample"]
				else ""
			),
		}
		for check in checks
	]

	return pandas.DataFrame(rows, columns=["id", "status", "detail", "elapsed_ms", "counterexample"])


def render_text(report: Report) -> str:
	"""
	Renders a report as a header line, a table of entries and a summary line.

	Args:
		report (Report): The report.

	Returns:
		str: The text.
	"""

	checks = report["checks"]
	header = f"{report['tool']} {report['version']}: l={report['config']['l']}, p={report['config']['p']}, n={report['config']['n']}"

	if not checks:
		return "\n".join([header, summary_line(checks)])

	return "\n".join([header, checks_frame(checks).to_string(index=False), summary_line(checks)])


def render_report(report: Report, output_format: str) -> str:
	"""Renders a report as JSON or as text."""

	return render_json(report) if output_format == "json" else render_text(report)


def exit_code(checks: Iterable[CheckEntry]) -> int:
	"""0 if every check passes or is vacuous, 1 otherwise."""

	return 1 if any(check["status"] == "fail" for check in checks) else 0
