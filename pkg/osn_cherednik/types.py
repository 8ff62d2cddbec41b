from typing import (
	Literal,
	Optional,
	TypedDict,
	Union
)


RuleMutation = Literal[
	"sigma_without_hbar",
	"tau_wrong_sign",
	"swap_without_pi",
	"xsigma_missing_factor",
	"swap_dictionary_without_correction",
	"skew_xsigma_missing_factor"
]
RULE_MUTATIONS: tuple[RuleMutation, ...] = (
	"sigma_without_hbar",
	"tau_wrong_sign",
	"swap_without_pi",
	"xsigma_missing_factor",
	"swap_dictionary_without_correction",
	"skew_xsigma_missing_factor",
)

CheckStatus = Literal["pass", "fail", "vacuous"]


class RunConfig(TypedDict):
	"""
	Configuration of one verification or evaluation run.

	Attributes:
		l (int): The order ℓ of the roots of unity.
		p (int): A positive divisor of ℓ.
		n (int): The rank.
		degree_bound (int): Maximal U-degree of tested monomials.
		samples (int): Number of random rational functions per generator.
		seed (int): Seed of the sample generator.
		output_format (Literal["text", "json"]): Report format.
		workers (Union[int, float]): Trio capacity-limiter tokens. `math.inf` means unlimited.
		parameter_mode (Literal["structural", "generic"]): How the s-parameters are resolved.
		mutations (tuple[RuleMutation, ...]): Rule perturbations to enable.
	"""

	l: int
	p: int
	n: int
	degree_bound: int
	samples: int
	seed: int
	output_format: Literal["text", "json"]
	workers: Union[int, float]
	parameter_mode: Literal["structural", "generic"]
	mutations: tuple[RuleMutation, ...]


class Counterexample(TypedDict):
	"""
	A replayable failure of an operator identity.

	Attributes:
		input (str): The tested input, printed in the polynomial grammar.
		lhs (str): Output of the left-hand side.
		rhs (str): Output of the right-hand side.
	"""

	input: str
	lhs: str
	rhs: str


class CheckEntry(TypedDict):
	"""
	One line of a report.

	Attributes:
		id (str): Check identifier, e.g. "relation:sigma-tau".
		status (CheckStatus): "pass", "fail" or "vacuous".
		counterexample (Optional[Counterexample]): The first failing input, if any.
		detail (Optional[str]): Extra information such as counts.
		elapsed_ms (int): Wall time of the check.
	"""

	id: str
	status: CheckStatus
	counterexample: Optional[Counterexample]
	detail: Optional[str]
	elapsed_ms: int


class Report(TypedDict):
	"""
	A complete verification report.

	Attributes:
		tool (str): The tool name.
		version (str): The tool version.
		config (dict): The run configuration.
		checks (list[CheckEntry]): Checks ordered by id.
	"""

	tool: str
	version: str
	config: dict
	checks: list[CheckEntry]


class CheckOutcome(TypedDict):
	"""
	The result a check body hands back to the runner, before timing is attached.

	Attributes:
		status (CheckStatus): "pass", "fail" or "vacuous".
		counterexample (Optional[Counterexample]): The first failing input, if any.
		detail (Optional[str]): Extra information such as counts.
	"""

	status: CheckStatus
	counterexample: Optional[Counterexample]
	detail: Optional[str]
