from fractions import Fraction
import pytest
from hypothesis import (
	given,
	settings,
	strategies as st
)
from osn_cherednik.exact_arith import (
	ParameterContext,
	PolynomialRing,
	RatFunc,
	cyclo_mul,
	exact_divide,
	fourier_c_to_h,
	fourier_h_to_c,
	get_cyclotomic_field,
	p_cyclic_check,
	p_cyclic_equivalence
)
from osn_cherednik.exact_arith.errors import (
	MismatchedRingError,
	NonDivisibleError,
	ZeroDenominatorError
)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def cyclo_scalars(l: int):
	field = get_cyclotomic_field(l)

	return st.lists(fractions, min_size=field.degree, max_size=field.degree).map(field.element)


def test_zeta_squared_is_minus_one_for_order_four():
	field = get_cyclotomic_field(4)

	assert field.degree == 2
	assert cyclo_mul(field.zeta(), field.zeta()) == -1


def test_order_three_unit():
	field = get_cyclotomic_field(3)
	one_plus_zeta = field.one() + field.zeta()
	one_plus_zeta_squared = field.one() + field.zeta(2)

	assert cyclo_mul(one_plus_zeta, one_plus_zeta_squared) == 1


def test_zeta_powers_wrap_around():
	field = get_cyclotomic_field(6)

	assert field.zeta(6) == 1
	assert field.zeta(-1) == field.zeta(5)
	assert field.zeta(3) == -1


def test_mixed_fields_are_rejected():
	with pytest.raises(MismatchedRingError):
		cyclo_mul(get_cyclotomic_field(3).zeta(), get_cyclotomic_field(4).zeta())


def test_zero_has_no_inverse():
	with pytest.raises(ZeroDenominatorError):
		get_cyclotomic_field(5).zero().inverse()


@settings(max_examples=50, deadline=None)
@given(cyclo_scalars(5), cyclo_scalars(5), cyclo_scalars(5))
def test_cyclotomic_field_axioms(a, b, c):
	assert a * b == b * a
	assert (a * b) * c == a * (b * c)
	assert a * (b + c) == a * b + a * c
	assert (a + b) - b == a


@settings(max_examples=50, deadline=None)
@given(cyclo_scalars(8))
def test_cyclotomic_inverse(a):
	if a.is_zero():
		return

	assert a * a.inverse() == 1


def test_fourier_round_trip():
	l = 4
	ring = PolynomialRing(["g", "h"], get_cyclotomic_field(l))
	gamma = ring.variable_by_name("g")
	hbar = ring.variable_by_name("h")
	c = [gamma, hbar, gamma + hbar.scale(2)]

	assert fourier_h_to_c(fourier_c_to_h(c, l), l) == [ring.zero()] + c


@pytest.mark.parametrize(
		"l,p,nonzero,expected",
		[
			(2, 2, None, True),
			(2, 2, 1, False),
			(4, 2, 2, True),
			(4, 2, 1, False),
			(6, 3, 3, True),
			(6, 3, 2, False),
			(6, 1, 5, True),
		]
)
def test_p_cyclic_conditions_agree_on_c_vectors(l, p, nonzero, expected):
	ring = PolynomialRing(["g", "h"], get_cyclotomic_field(l))
	gamma = ring.variable_by_name("g")
	c = [gamma if k == nonzero else ring.zero() for k in range(1, l)]

	assert p_cyclic_check(l, p, c=c) == (expected,) * 3


def test_p_cyclic_check_needs_exactly_one_vector():
	ring = PolynomialRing(["h"], get_cyclotomic_field(2))

	with pytest.raises(ValueError):
		p_cyclic_check(2, 2)

	with pytest.raises(ValueError):
		p_cyclic_check(2, 2, c=[ring.zero()], h=[ring.zero(), ring.zero()])


@pytest.mark.parametrize("l,p", [(1, 1), (2, 1), (2, 2), (4, 2), (6, 3), (6, 2)])
def test_p_cyclic_conditions_are_equivalent(l, p):
	assert p_cyclic_equivalence(l, p)


@pytest.mark.parametrize("l,p", [(2, 2), (4, 2), (6, 3)])
def test_structural_parameters_are_p_cyclic(l, p):
	context = ParameterContext(l, p, 1)

	assert p_cyclic_check(l, p, s=[context.s(m) for m in range(l)], hbar=context.hbar) == (True, True, True)


def test_structural_s_resolution():
	context = ParameterContext(4, 2, 2)

	assert context.period == 2
	assert context.s(2) == context.s(0) + context.hbar.scale(2)
	assert context.s(-1) == context.s(1) - context.hbar.scale(2)


def test_generic_s_resolution():
	context = ParameterContext(4, 2, 2, "generic")

	assert context.period == 4
	assert context.s(2) != context.s(0) + context.hbar.scale(2)
	assert context.s(6) == context.s(2) + context.hbar.scale(4)
	assert p_cyclic_check(4, 2, s=[context.s(m) for m in range(4)], hbar=context.hbar) == (False, False, False)


def test_u_index_wraps_with_hbar():
	context = ParameterContext(2, 1, 3)

	assert context.U(4) == context.U(1) + context.hbar
	assert context.U(0) == context.U(3) - context.hbar


def test_exact_divide():
	ring = PolynomialRing(["U1", "U2"], get_cyclotomic_field(1))
	u1, u2 = ring.variable(0), ring.variable(1)

	assert exact_divide((u1 + u2) * (u1 - u2), u1 - u2) == u1 + u2
	assert exact_divide(u1 * u2 * u2, u2) == u1 * u2

	with pytest.raises(NonDivisibleError):
		exact_divide(u1 * u1 + 1, u1)

	with pytest.raises(NonDivisibleError):
		exact_divide(u1 * u1 + u2, u1 + u2)


def test_rational_functions_cancel():
	ring = PolynomialRing(["U1", "U2"], get_cyclotomic_field(1))
	u1, u2 = ring.variable(0), ring.variable(1)
	quotient = RatFunc(u1 * u1 - 1, u1 - 1)

	assert quotient.is_polynomial()
	assert quotient == u1 + 1
	assert RatFunc(u1, u2) * RatFunc(u2, u1) == 1
	assert RatFunc(u1, u2.scale(2)) == RatFunc(u1.scale(Fraction(1, 2)), u2)


def test_rational_functions_over_cyclotomic_coefficients():
	context = ParameterContext(3, 1, 2)
	zeta = context.ring.constant(get_cyclotomic_field(3).zeta())
	u1, u2 = context.U(1), context.U(2)

	assert RatFunc(zeta * u1 * u2, zeta * u2) == u1
	assert RatFunc(zeta * u1 * u1 - zeta, u1 - 1) == zeta * u1 + zeta
	assert RatFunc(u1, zeta * u2) * RatFunc(zeta * u2, u1) == 1
	assert RatFunc(u1, zeta * u2).den == u2

	gaussian = ParameterContext(4, 1, 2)
	i = gaussian.ring.constant(get_cyclotomic_field(4).zeta())
	v = gaussian.U(1)

	assert RatFunc(v * v + 1, v - i) == v + i


def test_rational_zero_denominator():
	ring = PolynomialRing(["U1"], get_cyclotomic_field(1))

	with pytest.raises(ZeroDenominatorError):
		RatFunc(ring.one(), ring.zero())


def test_automorphism_of_fraction():
	context = ParameterContext(2, 1, 2)
	f = RatFunc(context.U(1), context.U(2))
	images = {0: context.U(2), 1: context.U(1) + context.hbar}

	assert f.apply_automorphism(images) == RatFunc(context.U(2), context.U(1) + context.hbar)
