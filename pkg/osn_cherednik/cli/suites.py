import logging
from typing import (
	Literal,
	Optional
)
from osn_cherednik._runner import (
	Check,
	_exception_outcome,
	failed,
	passed,
	run_checks
)
from osn_cherednik._utils import log_on_error
from osn_cherednik.exact_arith.cyclotomic import get_cyclotomic_field
from osn_cherednik.exact_arith.parameters import (
	ParameterContext,
	p_cyclic_check,
	p_cyclic_equivalence
)
from osn_cherednik.exact_arith.polynomials import PolynomialRing
from osn_cherednik.cherednik_rep.relations import relation_checks
from osn_cherednik.psph.functions import psph_checks
from osn_cherednik.galois.functions import (
	galois_checks,
	principality_checks
)
from osn_cherednik.clifford_index.functions import clifford_checks
from osn_cherednik.types import (
	CheckEntry,
	CheckOutcome,
	RULE_MUTATIONS,
	RuleMutation,
	RunConfig
)


SuiteKind = Literal["relations", "psph", "galois", "principal", "pcyclic", "clifford", "mutations"]
SUITE_KINDS: tuple[SuiteKind, ...] = ("relations", "psph", "galois", "principal", "pcyclic", "clifford", "mutations")

MUTATION_TARGETS: dict[RuleMutation, SuiteKind] = {
	"sigma_without_hbar": "relations",
	"tau_wrong_sign": "relations",
	"swap_without_pi": "relations",
	"xsigma_missing_factor": "psph",
	"swap_dictionary_without_correction": "galois",
	"skew_xsigma_missing_factor": "galois",
}


def config_context(config: RunConfig, mutations: Optional[tuple[RuleMutation, ...]] = None) -> ParameterContext:
	"""
	Builds the algebra context a run configuration describes.

	Args:
		config (RunConfig): The run configuration.
		mutations (Optional[tuple[RuleMutation, ...]]): Overrides the configured mutations. Defaults to None.

	Returns:
		ParameterContext: The context for G(ℓ,p,n) in the configured parameter mode.
	"""

	return ParameterContext(
			config["l"],
			config["p"],
			config["n"],
			config["parameter_mode"],
			config["mutations"] if mutations is None else mutations
	)


def _pcyclic_equivalence_check(l: int, p: int) -> CheckOutcome:
	if p_cyclic_equivalence(l, p):
		return passed("the three conditions have equal rank and equal pairwise unions")

	return failed({"input": f"l={l}, p={p}", "lhs": "False", "rhs": "True"}, "conditions are not equivalent")


def _pcyclic_structural_check(l: int, p: int) -> CheckOutcome:
	context = ParameterContext(l, p, 1, "structural")
	conditions = p_cyclic_check(l, p, s=[context.s(m) for m in range(l)], hbar=context.hbar)

	if conditions != (True, True, True):
		return failed({"input": "structural s-vector", "lhs": str(conditions), "rhs": "(True, True, True)"})

	return passed()


def _pcyclic_examples_check(l: int, p: int) -> CheckOutcome:
	ring = PolynomialRing(["g", "h"], get_cyclotomic_field(l))
	gamma = ring.variable_by_name("g")
	cases = [([gamma if k == p else ring.zero() for k in range(1, l)], True)] if p < l else []

	if p > 1:
		cases.append(([gamma if k == 1 else ring.zero() for k in range(1, l)], False))

	for c, expected in cases:
		conditions = p_cyclic_check(l, p, c=c)

		if conditions != (expected,) * 3:
			return failed(
					{"input": "c = (" + ", ".join(str(entry) for entry in c) + ")", "lhs": str(conditions), "rhs": str((expected,) * 3)},
					"conditions disagree on a c-vector"
			)

	return passed(f"{len(cases)} c-vectors")


def pcyclic_checks(l: int, p: int) -> list[Check]:
	"""
	Builds the p-cyclicity checks.

	Args:
		l (int): The order ℓ.
		p (int): A divisor of ℓ.

	Returns:
		list[Check]: The equivalence of the three conditions, their truth on the structural
			s-vector, and their agreement on sample c-vectors.
	"""

	return [
		("pcyclic:equivalence", lambda: _pcyclic_equivalence_check(l, p)),
		("pcyclic:structural", lambda: _pcyclic_structural_check(l, p)),
		("pcyclic:examples", lambda: _pcyclic_examples_check(l, p)),
	]


def suite_checks(kind: SuiteKind, config: RunConfig, context: ParameterContext) -> list[Check]:
	"""
	Builds the checks of one suite.

	Args:
		kind (SuiteKind): The suite, except "mutations".
		config (RunConfig): The run configuration.
		context (ParameterContext): The algebra context, possibly with mutations.

	Returns:
		list[Check]: The checks.
	"""

	if kind == "relations":
		return relation_checks(context, config["degree_bound"])

	if kind == "psph":
		return psph_checks(context, config["degree_bound"])

	if kind == "galois":
		return galois_checks(context, config["samples"], config["seed"])

	if kind == "principal":
		return principality_checks(context, config["degree_bound"])

	if kind == "pcyclic":
		return pcyclic_checks(config["l"], config["p"])

	if kind == "clifford":
		return clifford_checks(config["l"], config["p"], config["n"])

	raise ValueError(f"Unknown suite {kind}.")


def _detect_mutation(mutation: RuleMutation, config: RunConfig) -> CheckOutcome:
	kind = MUTATION_TARGETS[mutation]
	checks = sorted(suite_checks(kind, config, config_context(config, (mutation,))), key=lambda check: check[0])

	for check_id, body in checks:
		outcome = log_on_error(body, fallback=_exception_outcome)()

		if outcome["status"] == "fail":
			counterexample = outcome["counterexample"]
			where = f" on {counterexample['input']}" if counterexample else ""

			return passed(f"detected by {check_id}{where}")

	return failed(None, f"no {kind} check detects {mutation}")


def mutation_checks(config: RunConfig) -> list[Check]:
	"""
	Builds one check per rule mutation.

	Each check runs the suite the mutation targets and passes when that suite reports a failure.

	Args:
		config (RunConfig): The run configuration; its own mutations are ignored.

	Returns:
		list[Check]: Checks with ids "mutation:<name>".
	"""

	return [
		(f"mutation:{mutation}", lambda mutation=mutation: _detect_mutation(mutation, config))
		for mutation in RULE_MUTATIONS
	]


def mutation_suite(config: RunConfig) -> list[CheckEntry]:
	"""
	Runs every single-rule mutation against the suite it should break.

	Args:
		config (RunConfig): The run configuration; its own mutations are ignored.

	Returns:
		list[CheckEntry]: One entry "mutation:<name>" per mutation, passing iff the suite reports a failure.
	"""

	logging.log(logging.INFO, f"Running {len(RULE_MUTATIONS)} mutations")

	return run_checks(mutation_checks(config), config["workers"])


def run_suite(kind: SuiteKind, config: RunConfig) -> list[CheckEntry]:
	"""
	Runs one verification suite.

	Args:
		kind (SuiteKind): The suite.
		config (RunConfig): The run configuration.

	Returns:
		list[CheckEntry]: The report entries, ordered by id.
	"""

	if kind == "mutations":
		return mutation_suite(config)

	return run_checks(suite_checks(kind, config, config_context(config)), config["workers"])
