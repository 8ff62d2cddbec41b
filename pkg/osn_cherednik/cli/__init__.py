from osn_cherednik.cli.commands import (
	build_run_config,
	cmd_eval,
	cmd_verify,
	main
)
from osn_cherednik.cli.parser import (
	parse_poly,
	parse_word
)
from osn_cherednik.cli.suites import (
	mutation_suite,
	run_suite
)
