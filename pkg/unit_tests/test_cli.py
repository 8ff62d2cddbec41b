import json
import math
import pytest
from osn_cherednik.exact_arith import ParameterContext
from osn_cherednik.cherednik_rep import (
	SIGMA,
	Swap,
	T,
	TAU,
	U,
	format_element
)
from osn_cherednik.cli.commands import (
	build_run_config,
	cmd_eval,
	cmd_verify,
	main
)
from osn_cherednik.cli.errors import (
	InvalidRunConfigError,
	ParsingError
)
from osn_cherednik.cli.parser import (
	parse_poly,
	parse_word
)
from osn_cherednik.cli.report import (
	exit_code,
	render_text,
	serialize_config
)


def test_parse_word():
	assert parse_word("s1*s1", 2) == (Swap(1), Swap(1))
	assert parse_word("1", 2) == ()
	assert parse_word("tau^2", 3) == (TAU, TAU)
	assert parse_word("sig (t1 u2)^2", 2) == (SIGMA, T(1), U(2), T(1), U(2))
	assert parse_word("x1", 2) == (SIGMA, Swap(1))


def test_parse_word_errors_carry_positions():
	with pytest.raises(ParsingError) as error:
		parse_word("s2", 2)

	assert (error.value.line, error.value.column) == (1, 1)

	with pytest.raises(ParsingError) as error:
		parse_word("s1 *\n  q1", 2)

	assert (error.value.line, error.value.column) == (2, 3)
	assert str(error.value).startswith("2:3: ")

	with pytest.raises(ParsingError):
		parse_word("tau^-1", 2)

	with pytest.raises(ParsingError):
		parse_word("s1 $", 2)


def test_parse_poly():
	context = ParameterContext(4, 2, 2)

	assert format_element(parse_poly("U1^2 - 2*h", context)) == "U1^2 - 2*h"
	assert parse_poly("T1^-1", context) == parse_poly("T1^3", context)
	assert parse_poly("z^2", context) == parse_poly("-1", context)
	assert format_element(parse_poly("(U1 + U2)/2", context)) == "1/2*U1 + 1/2*U2"

	with pytest.raises(ParsingError):
		parse_poly("U1^-1", context)

	with pytest.raises(ParsingError):
		parse_poly("U3", context)

	with pytest.raises(ParsingError):
		parse_poly("U1/0", context)


def test_cmd_eval():
	config = build_run_config(l=2, p=1, n=2)

	assert cmd_eval("tau", "U1", config) == "U2 - h"
	assert cmd_eval("u1*u2", "1", config) == "U1*U2"
	assert cmd_eval("1", "U1 + U2", config) == "U1 + U2"


def test_build_run_config_validates():
	with pytest.raises(InvalidRunConfigError):
		build_run_config(l=4, p=3)

	with pytest.raises(InvalidRunConfigError):
		build_run_config(n=0)

	with pytest.raises(InvalidRunConfigError):
		build_run_config(degree_bound=-1)

	with pytest.raises(InvalidRunConfigError):
		build_run_config(mutations=["no_such_rule"])


def test_large_runs_warn():
	with pytest.warns(UserWarning):
		build_run_config(n=5, degree_bound=1)


def test_unlimited_workers_serialize():
	assert serialize_config(build_run_config(workers=math.inf))["workers"] == "unlimited"
	assert serialize_config(build_run_config(workers=3))["workers"] == 3


def test_pcyclic_report():
	report = cmd_verify("pcyclic", build_run_config(l=4, p=2))

	assert [check["id"] for check in report["checks"]] == ["pcyclic:equivalence", "pcyclic:examples", "pcyclic:structural"]
	assert exit_code(report["checks"]) == 0
	assert render_text(report).splitlines()[-1] == "3 checks: 3 pass, 0 fail, 0 vacuous"


def test_generic_mode_relations_hold():
	config = build_run_config(l=2, p=2, n=2, degree_bound=1, parameter_mode="generic")
	report = cmd_verify("relations", config)

	assert exit_code(report["checks"]) == 0
	assert report["config"]["parameter_mode"] == "generic"


def test_generic_mode_breaks_partially_spherical_closed_forms():
	config = build_run_config(l=3, p=3, n=2, parameter_mode="generic")

	with pytest.warns(UserWarning, match="p-cyclic"):
		report = cmd_verify("psph", config)

	failures = {check["id"] for check in report["checks"] if check["status"] == "fail"}

	assert {"psph:XSigma", "psph:SigmaPower"} <= failures
	assert exit_code(report["checks"]) == 1


def test_exit_code():
	entry = {"id": "a", "status": "vacuous", "counterexample": None, "detail": None, "elapsed_ms": 0}

	assert exit_code([entry]) == 0
	assert exit_code([entry, dict(entry, status="fail")]) == 1


def test_main_eval(capsys):
	assert main(["eval", "tau", "U1", "--l", "2", "--p", "1", "--n", "2"]) == 0
	assert capsys.readouterr().out.strip() == "U2 - h"


def test_main_json_report(capsys):
	assert main(["verify", "pcyclic", "--l", "6", "--p", "3", "--format", "json", "--workers", "inf"]) == 0

	report = json.loads(capsys.readouterr().out)

	assert list(report) == ["tool", "version", "config", "checks"]
	assert report["config"]["workers"] == "unlimited"
	assert all(list(check) == ["id", "status", "counterexample", "detail", "elapsed_ms"] for check in report["checks"])


@pytest.mark.parametrize(
		"argv",
		[
			["verify", "pcyclic", "--l", "4", "--p", "3"],
			["verify", "nothing"],
			["eval", "s3", "1", "--n", "2"],
			["eval", "1", "T1", "--l", "2", "--p", "2"],
			["eval", "y3", "1", "--n", "2"],
		]
)
def test_main_usage_errors(argv, capsys):
	assert main(argv) == 2


def test_mutation_suite_detects_every_rule():
	config = build_run_config(l=2, p=1, n=2, degree_bound=1, samples=2)
	report = cmd_verify("mutations", config)

	assert len(report["checks"]) == 6
	assert all(check["status"] == "pass" for check in report["checks"]), report["checks"]
	assert all(check["detail"].startswith("detected by ") for check in report["checks"])
