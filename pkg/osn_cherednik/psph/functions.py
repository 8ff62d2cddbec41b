from typing import (
	Iterable,
	Union
)
from osn_cherednik.exact_arith.parameters import (
	ParameterContext,
	ParameterMode
)
from osn_cherednik.exact_arith.polynomials import ParamPoly
from osn_cherednik._runner import (
	Check,
	compare_on_inputs,
	failed,
	passed,
	run_checks,
	vacuous
)
from osn_cherednik.types import (
	CheckEntry,
	CheckOutcome,
	RuleMutation
)
from osn_cherednik.cherednik_rep.action import get_representation
from osn_cherednik.cherednik_rep.element import (
	PolyRepElement,
	u_exponents
)
from osn_cherednik.cherednik_rep.projectors import (
	embed,
	project_e_prime
)
from osn_cherednik.cherednik_rep.types import (
	SIGMA,
	Swap,
	TAU,
	U,
	Word
)
from osn_cherednik.cherednik_rep.words import (
	ascending_cycle,
	standard_gen_word,
	word_power,
	word_winding_degree
)
from osn_cherednik.psph.closed_forms import (
	closed_form_action,
	closed_form_data
)
from osn_cherednik.psph.types import (
	PsphGenerator,
	SIGMA_POWER,
	TAU_POWER,
	all_generators
)


def word_for(g: PsphGenerator, l: int, p: int, n: int) -> Word:
	"""
	Returns the defining word of a distinguished generator.

	XSigma = x_1^{ℓ-1}σ, YTau = y_n^{ℓ-1}τ, SigmaPower = σ^{nℓ/p}, TauPower = τ^{nℓ/p} and
	Mixed(i, k) = (x_1^{kℓ/p-1}σ)^i (y_{n-i}^{ℓ-kℓ/p-1}(n-i, …, n)τ)^{n-i}.

	Args:
		g (PsphGenerator): The generator.
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Returns:
		Word: The word in the alternate generators, with x and y expanded.
	"""

	g.validate(l, p, n)

	if g.kind == "UGen":
		return (U(g.i),)

	if g.kind == "SwapGen":
		return (Swap(g.i),)

	if g.kind == "XSigma":
		return word_power(standard_gen_word("x", 1, n), l - 1) + (SIGMA,)

	if g.kind == "YTau":
		return word_power(standard_gen_word("y", n, n), l - 1) + (TAU,)

	if g.kind == "SigmaPower":
		return (SIGMA,) * (n * l // p)

	if g.kind == "TauPower":
		return (TAU,) * (n * l // p)

	winding = g.k * l // p
	x_block = word_power(standard_gen_word("x", 1, n), winding - 1) + (SIGMA,)
	y_block = (
			word_power(standard_gen_word("y", n - g.i, n), l - winding - 1)
			+ ascending_cycle(n - g.i, n)
			+ (TAU,)
	)

	return word_power(x_block, g.i) + word_power(y_block, n - g.i)


def zp_degree(g: PsphGenerator, p: int) -> int:
	"""
	Returns the Z/p-degree of a generator.

	UGen, SwapGen, XSigma and YTau have degree 0, SigmaPower 1, TauPower -1 and Mixed(i, k) degree k.

	Args:
		g (PsphGenerator): The generator.
		p (int): The divisor p.

	Returns:
		int: The degree in 0..p-1.
	"""

	if g.kind == "SigmaPower":
		return 1 % p

	if g.kind == "TauPower":
		return -1 % p

	if g.kind == "Mixed":
		return g.k % p

	return 0


def u_monomials(context: ParameterContext, degree_bound: int) -> list[ParamPoly]:
	"""Lists the U-monomials of degree at most `degree_bound` in the context ring."""

	padding = (0,) * (context.ring.nvars - context.n)

	return [context.ring.monomial(uexp + padding) for uexp in u_exponents(context.n, degree_bound)]


def oracle_sides(g: PsphGenerator, f: ParamPoly, context: ParameterContext) -> tuple[PolyRepElement, PolyRepElement]:
	"""
	Computes both sides of the oracle identity e'·word(g)·(f E') = closed_form(g, f)·E'.

	Args:
		g (PsphGenerator): The generator.
		f (ParamPoly): A T-free polynomial.
		context (ParameterContext): The algebra context.

	Returns:
		tuple[PolyRepElement, PolyRepElement]: The word side and the closed-form side.
	"""

	word = word_for(g, context.l, context.p, context.n)
	lhs = project_e_prime(get_representation(context).act_word(word, embed(f, context)))
	rhs = embed(closed_form_action(g, f, context), context)

	return lhs, rhs


def oracle_compare(g: PsphGenerator, f: ParamPoly, context: ParameterContext) -> bool:
	"""
	Decides whether the closed form of g agrees with its defining word on f.

	Args:
		g (PsphGenerator): The generator.
		f (ParamPoly): A T-free polynomial.
		context (ParameterContext): The algebra context.

	Returns:
		bool: True iff e'·word(g)·embed(f) = embed(closed_form_action(g, f)).
	"""

	lhs, rhs = oracle_sides(g, f, context)

	return lhs == rhs


def _oracle_check(g: PsphGenerator, context: ParameterContext, degree_bound: int) -> CheckOutcome:
	inputs = u_monomials(context, degree_bound)
	counterexample = compare_on_inputs(
			inputs,
			lambda f: oracle_sides(g, f, context)[0],
			lambda f: oracle_sides(g, f, context)[1],
			label=str(g)
	)

	if counterexample is not None:
		return failed(counterexample, f"{g} disagrees with its word")

	return passed(f"{len(inputs)} monomials")


def _degree_check(context: ParameterContext) -> CheckOutcome:
	for g in all_generators(context.l, context.p, context.n):
		word = word_for(g, context.l, context.p, context.n)
		winding = word_winding_degree(word, context.l, context.p, context.n)

		if winding != zp_degree(g, context.p):
			return failed(
					{"input": str(g), "lhs": str(zp_degree(g, context.p)), "rhs": str(winding)},
					"table degree differs from the winding degree of the word"
			)

	return passed()


def _composition_check(context: ParameterContext, degree_bound: int) -> CheckOutcome:
	prefactor, _ = closed_form_data(SIGMA_POWER, context)
	inputs = u_monomials(context, degree_bound)
	counterexample = compare_on_inputs(
			inputs,
			lambda f: closed_form_action(SIGMA_POWER, closed_form_action(TAU_POWER, f, context), context),
			lambda f: f * prefactor
	)

	if counterexample is not None:
		return failed(counterexample, "SigmaPower after TauPower is not multiplication by its prefactor")

	return passed(f"{len(inputs)} monomials")


def psph_checks(context: ParameterContext, degree_bound: int) -> list[Check]:
	"""
	Builds the oracle check of every generator plus the degree and composition checks.

	Args:
		context (ParameterContext): The algebra context.
		degree_bound (int): Maximal U-degree of tested monomials.

	Returns:
		list[Check]: Checks with ids "psph:<generator>", "psph-degree" and "psph-composition".
	"""

	checks: list[Check] = [
		(f"psph:{g}", lambda g=g: _oracle_check(g, context, degree_bound))
		for g in all_generators(context.l, context.p, context.n)
	]

	checks.append(("psph-degree", lambda: _degree_check(context)))
	checks.append(("psph-composition", lambda: _composition_check(context, degree_bound)))

	if context.n == 1:
		checks.append(("psph:SwapGen", lambda: vacuous("no transpositions for n=1")))

	if context.n == 1 or context.p == 1:
		checks.append(("psph:Mixed", lambda: vacuous("no mixed generators")))

	return checks


def verify_psph(
		l: int,
		p: int,
		n: int,
		degree_bound: int,
		mode: ParameterMode = "structural",
		mutations: Iterable[RuleMutation] = (),
		workers: Union[int, float] = 8
) -> list[CheckEntry]:
	"""
	Runs the closed-form oracle for every generator on all U-monomials up to a degree.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		degree_bound (int): Maximal U-degree.
		mode (ParameterMode): Parameter mode. Defaults to "structural".
		mutations (Iterable[RuleMutation]): Rule perturbations to enable. Defaults to none.
		workers (Union[int, float]): Trio capacity-limiter tokens. Defaults to 8.

	Returns:
		list[CheckEntry]: The report entries, ordered by id.
	"""

	context = ParameterContext(l, p, n, mode, mutations)

	return run_checks(psph_checks(context, degree_bound), workers)
