import random
import pytest
from osn_cherednik.exact_arith import (
	ParameterContext,
	RatFunc
)
from osn_cherednik.groups import AffineElement
from osn_cherednik.psph import (
	SwapGen,
	TAU_POWER,
	XSIGMA,
	YTAU,
	closed_form_action
)
from osn_cherednik.galois import (
	AffineGenerator,
	Compose,
	GeneratorNode,
	Identity,
	OperatorExpression,
	Scale,
	SkewElement,
	Sum,
	all_affine_generators,
	expression_to_skew,
	from_skew,
	galois_ring_check,
	principality_check,
	random_ratfunc,
	skew_act,
	skew_mul,
	to_skew
)
from osn_cherednik.galois.errors import UnknownAffineGeneratorError
from osn_cherednik.galois.functions import (
	dunkl_symmetrize_function,
	is_symmetric
)


@pytest.fixture
def context() -> ParameterContext:
	return ParameterContext(2, 1, 2)


def ratfunc(poly) -> RatFunc:
	return RatFunc.from_poly(poly)


def test_affine_generator_names():
	names = [str(a) for a in all_affine_generators(2)]

	assert names == ["s1", "mu1^l", "mu2^l", "mu1^-l", "mu2^-l", "mu_all^(l/p)", "mu_all^-(l/p)"]

	with pytest.raises(UnknownAffineGeneratorError):
		AffineGenerator("rotation")


def test_skew_mul_moves_coefficients_through_group_elements(context):
	swap = AffineElement.swap(1, 2)
	product = skew_mul(SkewElement.group(context, swap), SkewElement.scalar(context, context.U(1)))

	assert product == SkewElement.group(context, swap, context.U(2))
	assert SkewElement.group(context, swap) * SkewElement.group(context, swap) == SkewElement.one(context)


def test_skew_act_on_translation(context):
	mu = AffineElement.mu(1, 2, 2)
	f = ratfunc(context.U(1) * context.U(2))

	assert skew_act(SkewElement.group(context, mu), f) == ratfunc((context.U(1) + context.hbar.scale(2)) * context.U(2))


def test_skew_act_keeps_cyclotomic_coefficients():
	context = ParameterContext(3, 1, 2)
	zeta = context.ring.constant(context.ring.field.zeta())
	f = RatFunc(zeta * context.U(1), context.U(2))
	mu = AffineElement.mu(1, 3, 2)

	assert skew_act(SkewElement.group(context, mu), f) == RatFunc(zeta * (context.U(1) + context.hbar.scale(3)), context.U(2))


def test_ytau_is_a_single_group_element(context):
	assert to_skew(YTAU, context) == SkewElement.group(context, AffineElement([0, -2], [2, 1]))


def test_swap_dictionary_matches_closed_form(context):
	skew = to_skew(SwapGen(1), context)
	f = ratfunc(context.U(1))

	assert len(skew.terms) == 2
	assert skew.act(f) == ratfunc(context.U(2) + context.kappa.scale(2))
	assert skew.act(f) == closed_form_action(SwapGen(1), f, context)


def test_xsigma_dictionary_matches_closed_form(context):
	skew = to_skew(XSIGMA, context)
	rng = random.Random(3)

	for _ in range(3):
		f = random_ratfunc(context, rng)

		assert skew.act(f) == closed_form_action(XSIGMA, f, context)


def test_from_skew_swap_recovers_the_transposition(context):
	expression = from_skew(AffineGenerator("swap", 1), context)

	assert expression.evaluate(ratfunc(context.U(1)), context) == ratfunc(context.U(2))


def test_from_skew_round_trip(context):
	for a in all_affine_generators(context.n):
		expanded = expression_to_skew(from_skew(a, context), context)

		assert expanded == SkewElement.group(context, a.to_affine(context.l, context.p, context.n))


def test_operator_expression_is_abstract():
	with pytest.raises(TypeError):
		OperatorExpression()


def test_operator_expressions(context):
	f = ratfunc(context.U(1))
	double = Scale(ratfunc(context.ring.constant(2)), Identity())
	expression = Compose([Sum([double, GeneratorNode(TAU_POWER)]), GeneratorNode(SwapGen(1))])
	swapped = closed_form_action(SwapGen(1), f, context)

	assert expression.evaluate(f, context) == swapped * 2 + closed_form_action(TAU_POWER, swapped, context)
	assert str(Compose([])) == "1"


@pytest.mark.parametrize("l,p,n", [(2, 1, 2), (2, 2, 2)])
def test_galois_checks_pass(l, p, n):
	entries = galois_ring_check(l, p, n, samples=3, seed=1)

	assert all(entry["status"] == "pass" for entry in entries), entries
	assert "galois:round-trip:s1" in {entry["id"] for entry in entries}


@pytest.mark.parametrize("mutation", ["swap_dictionary_without_correction", "skew_xsigma_missing_factor"])
def test_dictionary_mutations_are_detected(mutation):
	entries = galois_ring_check(2, 1, 2, samples=3, seed=1, mutations=(mutation,))

	assert any(entry["status"] == "fail" for entry in entries)


def test_tau_power_keeps_polynomials():
	context = ParameterContext(2, 2, 2)
	image = closed_form_action(TAU_POWER, ratfunc(context.U(1) * context.U(2)), context)

	assert image.is_polynomial()
	assert image == ratfunc((context.U(1) - context.hbar) * (context.U(2) - context.hbar))


def test_symmetrization_is_symmetric(context):
	image = dunkl_symmetrize_function(ratfunc(context.U(1)), context)

	assert is_symmetric(image, context)
	assert not is_symmetric(ratfunc(context.U(1)), context)


@pytest.mark.parametrize("l,p,n", [(2, 1, 2), (2, 2, 2)])
def test_principality(l, p, n):
	entries = principality_check(l, p, n, degree_bound=2)

	assert all(entry["status"] == "pass" for entry in entries), entries
