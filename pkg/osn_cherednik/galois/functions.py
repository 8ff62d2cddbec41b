import math
import random
import itertools
from fractions import Fraction
from typing import (
	Iterable,
	Union
)
from osn_cherednik.exact_arith.parameters import (
	ParameterContext,
	ParameterMode
)
from osn_cherednik.exact_arith.polynomials import ParamPoly
from osn_cherednik.exact_arith.rational import RatFunc
from osn_cherednik.groups.affine import (
	AffineElement,
	affine_act,
	lattice_degree,
	lattice_member
)
from osn_cherednik.groups.gpn import adjacent_word
from osn_cherednik.cherednik_rep.element import u_exponents
from osn_cherednik.psph.closed_forms import closed_form_action
from osn_cherednik.psph.functions import (
	u_monomials,
	zp_degree
)
from osn_cherednik.psph.types import (
	PsphGenerator,
	SwapGen,
	all_generators
)
from osn_cherednik._runner import (
	Check,
	compare_on_inputs,
	failed,
	passed,
	run_checks
)
from osn_cherednik.types import (
	CheckEntry,
	CheckOutcome,
	RuleMutation
)
from osn_cherednik.galois.skew import (
	SkewElement,
	skew_act,
	skew_mul
)
from osn_cherednik.galois.types import (
	AffineGenerator,
	all_affine_generators
)
from osn_cherednik.galois.dictionary import (
	expression_to_skew,
	from_skew,
	to_skew
)


def random_ratfunc(context: ParameterContext, rng: random.Random, degree: int = 2) -> RatFunc:
	"""
	Draws a rational function with small integer coefficients.

	The numerator is Σ c_a U^a over |a| ≤ degree with c_a uniform in [-3, 3]. The denominator is
	d_0 + Σ d_j U_j + d_κ κ with d_0 uniform in [1, 3], d_j in [-2, 2] and d_κ in [-1, 1]. A zero
	numerator is replaced by 1. Draws happen in exactly this order, so a seed fixes the sample.

	Args:
		context (ParameterContext): The algebra context.
		rng (random.Random): The seeded generator.
		degree (int): Maximal numerator degree. Defaults to 2.

	Returns:
		RatFunc: The sample.
	"""

	ring = context.ring
	padding = (0,) * (ring.nvars - context.n)
	numerator = ring.zero()

	for uexp in u_exponents(context.n, degree):
		numerator = numerator + ring.monomial(uexp + padding, rng.randint(-3, 3))

	if numerator.is_zero():
		numerator = ring.one()

	denominator = ring.constant(rng.randint(1, 3))

	for i in range(1, context.n + 1):
		denominator = denominator + context.U(i).scale(rng.randint(-2, 2))

	denominator = denominator + context.kappa.scale(rng.randint(-1, 1))

	return RatFunc(numerator, denominator)


def sample_functions(context: ParameterContext, samples: int, seed: int) -> list[RatFunc]:
	"""Returns 1 followed by `samples` seeded random rational functions."""

	rng = random.Random(seed)

	return [RatFunc.from_poly(context.ring.one())] + [random_ratfunc(context, rng) for _ in range(samples)]


def random_affine_element(context: ParameterContext, rng: random.Random) -> AffineElement:
	"""Draws a permutation and a lattice vector a·ℓ·e_i + b·(ℓ/p)(1, …, 1) with |a|, |b| ≤ 1."""

	perm = list(range(1, context.n + 1))
	rng.shuffle(perm)

	shift = [rng.randint(-1, 1) * context.l for _ in range(context.n)]
	diagonal = rng.randint(-1, 1) * (context.l // context.p)

	return AffineElement([entry + diagonal for entry in shift], perm)


def random_skew_element(context: ParameterContext, rng: random.Random, terms: int = 2) -> SkewElement:
	"""Draws a sum of `terms` random group elements with degree-1 rational coefficients."""

	element = SkewElement.zero(context)

	for _ in range(terms):
		coefficient = random_ratfunc(context, rng, degree=1)
		element = element + SkewElement.group(context, random_affine_element(context, rng), coefficient)

	return element


def _describe(value) -> str:
	if isinstance(value, tuple):
		return " ; ".join(str(part) for part in value)

	return str(value)


def _to_skew_check(g: PsphGenerator, context: ParameterContext, samples: int, seed: int) -> CheckOutcome:
	skew = to_skew(g, context)
	inputs = sample_functions(context, samples, seed)
	counterexample = compare_on_inputs(
			inputs,
			lambda f: skew_act(skew, f),
			lambda f: closed_form_action(g, f, context),
			label=str(g)
	)

	if counterexample is not None:
		return failed(counterexample, f"to_skew({g}) does not reproduce the closed form")

	return passed(f"{len(inputs)} functions")


def _from_skew_check(a: AffineGenerator, context: ParameterContext, samples: int, seed: int) -> CheckOutcome:
	expression = from_skew(a, context)
	element = a.to_affine(context.l, context.p, context.n)
	inputs = sample_functions(context, samples, seed)
	counterexample = compare_on_inputs(
			inputs,
			lambda f: expression.evaluate(f, context),
			lambda f: affine_act(element, f, context),
			label=str(a)
	)

	if counterexample is not None:
		return failed(counterexample, f"from_skew({a}) does not reproduce the group action")

	return passed(f"{len(inputs)} functions")


def _round_trip_check(a: AffineGenerator, context: ParameterContext) -> CheckOutcome:
	expanded = expression_to_skew(from_skew(a, context), context)
	expected = SkewElement.group(context, a.to_affine(context.l, context.p, context.n))

	if expanded != expected:
		return failed(
				{"input": str(a), "lhs": str(expanded), "rhs": str(expected)},
				"to_skew after from_skew is not the group element"
		)

	return passed()


def _skew_degree_check(context: ParameterContext) -> CheckOutcome:
	for g in all_generators(context.l, context.p, context.n):
		for element in to_skew(g, context).terms:
			member = lattice_member(element.shift, context.l, context.p, context.n)

			if not member or lattice_degree(element.shift, context.l, context.p) != zp_degree(g, context.p):
				return failed(
						{"input": str(g), "lhs": str(element), "rhs": f"degree {zp_degree(g, context.p)}"},
						"translation part does not match the Z/p-degree"
				)

	return passed()


def _associativity_check(context: ParameterContext, samples: int, seed: int) -> CheckOutcome:
	rng = random.Random(seed)
	triples = [
		tuple(random_skew_element(context, rng) for _ in range(3))
		for _ in range(samples)
	]
	counterexample = compare_on_inputs(
			triples,
			lambda t: skew_mul(skew_mul(t[0], t[1]), t[2]),
			lambda t: skew_mul(t[0], skew_mul(t[1], t[2])),
			describe=_describe
	)

	if counterexample is not None:
		return failed(counterexample, "skew multiplication is not associative")

	return passed(f"{samples} triples")


def _module_action_check(context: ParameterContext, samples: int, seed: int) -> CheckOutcome:
	rng = random.Random(seed)
	inputs = [
		(random_skew_element(context, rng), random_skew_element(context, rng), random_ratfunc(context, rng))
		for _ in range(samples)
	]
	counterexample = compare_on_inputs(
			inputs,
			lambda t: skew_act(skew_mul(t[0], t[1]), t[2]),
			lambda t: skew_act(t[0], skew_act(t[1], t[2])),
			describe=_describe
	)

	if counterexample is not None:
		return failed(counterexample, "skew_act is not a module action")

	return passed(f"{samples} triples")


def galois_checks(context: ParameterContext, samples: int, seed: int) -> list[Check]:
	"""
	Builds the dictionary and skew-ring checks.

	Args:
		context (ParameterContext): The algebra context.
		samples (int): Random rational functions (or triples) per check.
		seed (int): Seed of the sample generator.

	Returns:
		list[Check]: Checks with ids "galois:to-skew:<g>", "galois:from-skew:<a>", "galois:round-trip:<a>",
			"galois:degrees", "galois:associativity" and "galois:module-action".
	"""

	checks: list[Check] = [
		(f"galois:to-skew:{g}", lambda g=g: _to_skew_check(g, context, samples, seed))
		for g in all_generators(context.l, context.p, context.n)
	]

	for a in all_affine_generators(context.n):
		checks.append((f"galois:from-skew:{a}", lambda a=a: _from_skew_check(a, context, samples, seed)))
		checks.append((f"galois:round-trip:{a}", lambda a=a: _round_trip_check(a, context)))

	checks.append(("galois:degrees", lambda: _skew_degree_check(context)))
	checks.append(("galois:associativity", lambda: _associativity_check(context, samples, seed)))
	checks.append(("galois:module-action", lambda: _module_action_check(context, samples, seed)))

	return checks


def galois_ring_check(
		l: int,
		p: int,
		n: int,
		samples: int,
		seed: int = 0,
		mode: ParameterMode = "structural",
		mutations: Iterable[RuleMutation] = (),
		workers: Union[int, float] = 8
) -> list[CheckEntry]:
	"""
	Checks both dictionaries between e'He' and the skew monoid ring on seeded random rational functions.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		samples (int): Random functions per generator.
		seed (int): Seed of the sample generator. Defaults to 0.
		mode (ParameterMode): Parameter mode. Defaults to "structural".
		mutations (Iterable[RuleMutation]): Rule perturbations to enable. Defaults to none.
		workers (Union[int, float]): Trio capacity-limiter tokens. Defaults to 8.

	Returns:
		list[CheckEntry]: The report entries, ordered by id.
	"""

	context = ParameterContext(l, p, n, mode, mutations)

	return run_checks(galois_checks(context, samples, seed), workers)


def _polynomial_check(g: PsphGenerator, context: ParameterContext, degree_bound: int) -> CheckOutcome:
	monomials = u_monomials(context, degree_bound)

	for monomial in monomials:
		image = closed_form_action(g, RatFunc.from_poly(monomial), context)

		if not image.is_polynomial():
			return failed(
					{"input": f"{g}: {monomial}", "lhs": str(image), "rhs": "a polynomial"},
					f"{g} leaves the polynomial ring"
			)

	return passed(f"{len(monomials)} monomials")


def elementary_symmetric(context: ParameterContext, k: int) -> ParamPoly:
	"""Returns e_k(U_1, …, U_n)."""

	total = context.ring.zero()

	for subset in itertools.combinations(range(1, context.n + 1), k):
		product = context.ring.one()

		for i in subset:
			product = product * context.U(i)

		total = total + product

	return total


def symmetric_inputs(context: ParameterContext, degree_bound: int) -> list[ParamPoly]:
	"""Lists the products e_1^{a_1}⋯e_n^{a_n} with Σ k·a_k ≤ degree_bound."""

	elementary = [elementary_symmetric(context, k) for k in range(1, context.n + 1)]
	inputs = []

	for powers in itertools.product(range(degree_bound + 1), repeat=context.n):
		if sum(k * a for k, a in enumerate(powers, start=1)) > degree_bound:
			continue

		product = context.ring.one()

		for e, a in zip(elementary, powers):
			product = product * e ** a

		inputs.append(product)

	return inputs


def dunkl_symmetrize_function(f: RatFunc, context: ParameterContext) -> RatFunc:
	"""
	Averages a rational function over S_n acting through the SwapGen closed forms.

	Args:
		f (RatFunc): The input.
		context (ParameterContext): The algebra context.

	Returns:
		RatFunc: (1/n!) Σ_w D_w(f).
	"""

	total = RatFunc.from_poly(context.ring.zero())

	for perm in itertools.permutations(range(1, context.n + 1)):
		image = f

		for i in reversed(adjacent_word(perm)):
			image = closed_form_action(SwapGen(i), image, context)

		total = total + image

	return total * Fraction(1, math.factorial(context.n))


def is_symmetric(f: RatFunc, context: ParameterContext) -> bool:
	"""Whether f is invariant under every transposition of adjacent U-variables."""

	for i in range(1, context.n):
		images = {context.u_position(i): context.U(i + 1), context.u_position(i + 1): context.U(i)}

		if f.apply_automorphism(images) != f:
			return False

	return True


def _spherical_check(g: PsphGenerator, context: ParameterContext, degree_bound: int) -> CheckOutcome:
	inputs = symmetric_inputs(context, degree_bound)

	for f in inputs:
		image = dunkl_symmetrize_function(closed_form_action(g, RatFunc.from_poly(f), context), context)

		if not image.is_polynomial() or not is_symmetric(image, context):
			return failed(
					{"input": f"{g}: {f}", "lhs": str(image), "rhs": "a symmetric polynomial"},
					f"the symmetrization of {g} leaves the symmetric polynomials"
			)

	return passed(f"{len(inputs)} symmetric inputs")


def spherical_principality_check(context: ParameterContext, degree_bound: int) -> list[Check]:
	"""
	Builds the spherical variant: e·g·e applied to products of elementary symmetric polynomials.

	Args:
		context (ParameterContext): The algebra context.
		degree_bound (int): Maximal degree of the symmetric inputs.

	Returns:
		list[Check]: One check "principal-spherical:<g>" per generator.
	"""

	return [
		(f"principal-spherical:{g}", lambda g=g: _spherical_check(g, context, degree_bound))
		for g in all_generators(context.l, context.p, context.n)
	]


def principality_checks(context: ParameterContext, degree_bound: int) -> list[Check]:
	"""Builds "principal:<g>" for every generator plus the spherical variant."""

	checks: list[Check] = [
		(f"principal:{g}", lambda g=g: _polynomial_check(g, context, degree_bound))
		for g in all_generators(context.l, context.p, context.n)
	]

	return checks + spherical_principality_check(context, degree_bound)


def principality_check(
		l: int,
		p: int,
		n: int,
		degree_bound: int,
		mode: ParameterMode = "structural",
		mutations: Iterable[RuleMutation] = (),
		workers: Union[int, float] = 8
) -> list[CheckEntry]:
	"""
	Checks that every generator maps polynomials to polynomials, and that the symmetrized generators map
	symmetric polynomials to symmetric polynomials.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		degree_bound (int): Maximal U-degree of the inputs.
		mode (ParameterMode): Parameter mode. Defaults to "structural".
		mutations (Iterable[RuleMutation]): Rule perturbations to enable. Defaults to none.
		workers (Union[int, float]): Trio capacity-limiter tokens. Defaults to 8.

	Returns:
		list[CheckEntry]: The report entries, ordered by id.
	"""

	context = ParameterContext(l, p, n, mode, mutations)

	return run_checks(principality_checks(context, degree_bound), workers)
