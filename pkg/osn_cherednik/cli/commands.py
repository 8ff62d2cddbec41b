import sys
import math
import logging
import argparse
import warnings
from typing import (
	Iterable,
	Literal,
	Optional,
	Sequence,
	Union
)
from osn_cherednik.types import (
	RULE_MUTATIONS,
	Report,
	RuleMutation,
	RunConfig
)
from osn_cherednik.cherednik_rep.action import get_representation
from osn_cherednik.cherednik_rep.element import format_element
from osn_cherednik.cherednik_rep.errors import (
	GeneratorIndexError,
	SubringViolationError
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
	build_report,
	exit_code,
	render_report
)
from osn_cherednik.cli.suites import (
	SUITE_KINDS,
	SuiteKind,
	config_context,
	run_suite
)


# Identities that only hold once the s-parameters are p-cyclic.
PCYCLIC_SUITES: tuple[SuiteKind, ...] = ("psph", "galois", "principal", "mutations")


def build_run_config(
		l: int = 2,
		p: int = 1,
		n: int = 2,
		degree_bound: int = 2,
		samples: int = 20,
		seed: int = 0,
		output_format: Literal["text", "json"] = "text",
		workers: Union[int, float] = 8,
		parameter_mode: Literal["structural", "generic"] = "structural",
		mutations: Iterable[RuleMutation] = ()
) -> RunConfig:
	"""
	Builds and validates a run configuration.

	Args:
		l (int): The order ℓ. Defaults to 2.
		p (int): A divisor of ℓ. Defaults to 1.
		n (int): The rank. Defaults to 2.
		degree_bound (int): Maximal U-degree of tested monomials. Defaults to 2.
		samples (int): Random rational functions per generator. Defaults to 20.
		seed (int): Seed of the sample generator. Defaults to 0.
		output_format (Literal["text", "json"]): Report format. Defaults to "text".
		workers (Union[int, float]): Trio capacity-limiter tokens, `math.inf` for unlimited. Defaults to 8.
		parameter_mode (Literal["structural", "generic"]): How s-parameters are resolved. Defaults to "structural".
		mutations (Iterable[RuleMutation]): Rule perturbations to enable. Defaults to none.

	Returns:
		RunConfig: The configuration.

	Raises:
		InvalidRunConfigError: If a size is not positive, p does not divide ℓ, a count is negative or a mutation is unknown.
	"""

	if min(l, p, n) < 1:
		raise InvalidRunConfigError(f"l, p and n must be positive, got l={l}, p={p}, n={n}")

	if l % p != 0:
		raise InvalidRunConfigError(f"p={p} does not divide l={l}")

	if degree_bound < 0:
		raise InvalidRunConfigError(f"degree bound must be non-negative, got {degree_bound}")

	if samples < 0:
		raise InvalidRunConfigError(f"samples must be non-negative, got {samples}")

	if workers < 1:
		raise InvalidRunConfigError(f"workers must be at least 1, got {workers}")

	mutations = tuple(mutations)
	unknown = [mutation for mutation in mutations if mutation not in RULE_MUTATIONS]

	if unknown:
		raise InvalidRunConfigError(f"unknown mutations {unknown}")

	if n * degree_bound > 12 or n > 4:
		warnings.warn(
				message=f"n={n} with degree bound {degree_bound} enumerates many monomials; the run may be slow."
		)

	return {
		"l": l,
		"p": p,
		"n": n,
		"degree_bound": degree_bound,
		"samples": samples,
		"seed": seed,
		"output_format": output_format,
		"workers": workers,
		"parameter_mode": parameter_mode,
		"mutations": mutations,
	}


def cmd_verify(kind: SuiteKind, config: RunConfig) -> Report:
	"""
	Runs a verification suite and assembles its report.

	Args:
		kind (SuiteKind): One of relations, psph, galois, principal, pcyclic, clifford and mutations.
		config (RunConfig): The run configuration.

	Returns:
		Report: The report with checks ordered by id.

	Warns:
		UserWarning: If generic parameters are combined with a suite whose identities need p-cyclic parameters.
	"""

	if config["parameter_mode"] == "generic" and config["p"] > 1 and kind in PCYCLIC_SUITES:
		warnings.warn(
				message=f"The {kind} suite relies on p-cyclic parameters; with --generic and p={config['p']} its checks are expected to fail."
		)

	logging.log(logging.INFO, f"Verifying {kind} for G({config['l']},{config['p']},{config['n']})")

	return build_report(config, run_suite(kind, config))


def cmd_eval(expr: str, poly: str, config: RunConfig) -> str:
	"""
	Applies a word to an element of the polynomial representation.

	Args:
		expr (str): The word, e.g. "sig*tau".
		poly (str): The element, e.g. "U1 + T1*T2".
		config (RunConfig): The run configuration.

	Returns:
		str: The image in canonical term order.

	Raises:
		ParsingError: If either expression does not parse.
		SubringViolationError: If the element leaves the p-subring.
	"""

	context = config_context(config)
	word = parse_word(expr, context.n)
	element = parse_poly(poly, context)
	element.check_subring()

	return format_element(get_representation(context).act_word(word, element))


def _workers(value: str) -> Union[int, float]:
	if value.lower() in ("inf", "unlimited"):
		return math.inf

	try:
		return int(value)
	except ValueError:
		raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {value!r}")


def build_parser() -> argparse.ArgumentParser:
	"""
	Builds the command-line parser with the verify and eval subcommands.

	Both subcommands share the algebra and run options.

	Returns:
		argparse.ArgumentParser: The parser.
	"""

	options = argparse.ArgumentParser(add_help=False)
	options.add_argument("--l", type=int, default=2, help="order of the roots of unity")
	options.add_argument("--p", type=int, default=1, help="divisor p of l")
	options.add_argument("--n", type=int, default=2, help="rank")
	options.add_argument("--degree", type=int, default=2, help="maximal U-degree of tested monomials")
	options.add_argument("--samples", type=int, default=20, help="random rational functions per generator")
	options.add_argument("--seed", type=int, default=0, help="seed of the sample generator")
	options.add_argument("--format", choices=("text", "json"), default="text", help="report format")
	options.add_argument("--workers", type=_workers, default=8, help="parallel checks, or 'inf'")
	options.add_argument("--generic", action="store_true", help="use l independent s-parameters")
	options.add_argument("--mutate", action="append", choices=RULE_MUTATIONS, default=[], help="enable a rule mutation")
	options.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

	parser = argparse.ArgumentParser(prog="osn-cherednik", description="Exact checks for rational Cherednik algebras of G(l,p,n).")
	commands = parser.add_subparsers(dest="command", required=True)

	verify = commands.add_parser("verify", parents=[options], help="run a verification suite")
	verify.add_argument("kind", choices=SUITE_KINDS)

	evaluate = commands.add_parser("eval", parents=[options], help="apply a word to a polynomial")
	evaluate.add_argument("expr")
	evaluate.add_argument("poly")

	return parser


def _configure_logging(verbosity: int):
	level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
	logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""
	Runs the command line.

	Args:
		argv (Optional[Sequence[str]]): Arguments without the program name. Defaults to `sys.argv[1:]`.

	Returns:
		int: 0 when every check passes or is vacuous, 1 when a check fails, 2 on a usage, configuration, parse or subring error.
	"""

	try:
		arguments = build_parser().parse_args(argv)
	except SystemExit as exit_request:
		return 2 if exit_request.code else 0

	_configure_logging(arguments.verbose)

	try:
		config = build_run_config(
				l=arguments.l,
				p=arguments.p,
				n=arguments.n,
				degree_bound=arguments.degree,
				samples=arguments.samples,
				seed=arguments.seed,
				output_format=arguments.format,
				workers=arguments.workers,
				parameter_mode="generic" if arguments.generic else "structural",
				mutations=arguments.mutate
		)

		if arguments.command == "eval":
			print(cmd_eval(arguments.expr, arguments.poly, config))

			return 0

		report = cmd_verify(arguments.kind, config)
	except (InvalidRunConfigError, ParsingError, SubringViolationError, GeneratorIndexError) as error:
		print(f"error: {error}", file=sys.stderr)

		return 2

	print(render_report(report, config["output_format"]))

	return exit_code(report["checks"])
