from fractions import Fraction
from typing import Union
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.exact_arith.polynomials import ParamPoly
from osn_cherednik.exact_arith.rational import RatFunc
from osn_cherednik.psph.types import PsphGenerator


Function = Union[ParamPoly, RatFunc]


def shift_factor(context: ParameterContext, i: int, shift: Fraction, count: int, skip_first: bool = False) -> ParamPoly:
	"""
	Returns Π_{m=0}^{count-1} (U_i + shift·ħ - s_m), optionally without the m = 0 factor.
	"""

	product = context.ring.one()
	base = context.U(i) + context.hbar.scale(shift)

	for m in range(1 if skip_first else 0, count):
		product = product * (base - context.s(m))

	return product


def closed_form_data(g: PsphGenerator, context: ParameterContext) -> tuple[ParamPoly, dict[int, ParamPoly]]:
	"""
	Splits a shift-type closed form into a polynomial prefactor and a change of variables.

	The closed form of g is then f ↦ prefactor · f(images). Valid for XSigma, YTau,
	SigmaPower, TauPower and Mixed.

	Args:
		g (PsphGenerator): The generator.
		context (ParameterContext): The algebra context.

	Returns:
		tuple[ParamPoly, dict[int, ParamPoly]]: The prefactor and the images of U_1, …, U_n keyed by position.

	Raises:
		ValueError: For UGen and SwapGen, which are not of shift type.
	"""

	l, p, n = context.l, context.p, context.n
	hbar = context.hbar
	position = context.u_position

	if g.kind == "XSigma":
		prefactor = shift_factor(context, 1, Fraction(l), l, context.has_mutation("xsigma_missing_factor"))
		images = {position(j): context.U(j + 1) for j in range(1, n)}
		images[position(n)] = context.U(1) + hbar.scale(l)

		return prefactor, images

	if g.kind == "YTau":
		images = {position(j): context.U(j - 1) for j in range(2, n + 1)}
		images[position(1)] = context.U(n) - hbar.scale(l)

		return context.ring.one(), images

	if g.kind in ("SigmaPower", "TauPower"):
		shift = Fraction(l, p)
		sign = 1 if g.kind == "SigmaPower" else -1
		images = {position(j): context.U(j) + hbar.scale(sign * shift) for j in range(1, n + 1)}

		if sign < 0:
			return context.ring.one(), images

		prefactor = context.ring.one()
		for j in range(1, n + 1):
			prefactor = prefactor * shift_factor(context, j, shift, l // p)

		return prefactor, images

	if g.kind == "Mixed":
		winding = g.k * l // p
		prefactor = context.ring.one()

		for j in range(1, g.i + 1):
			prefactor = prefactor * shift_factor(context, j, Fraction(winding), winding)

		images = {}
		for a in range(1, n + 1):
			if a <= n - g.i:
				images[position(a)] = context.U(g.i + a) + hbar.scale(winding - l)
			else:
				images[position(a)] = context.U(a - (n - g.i)) + hbar.scale(winding)

		return prefactor, images

	raise ValueError(f"{g} is not a shift-type generator.")


def _swap_images(context: ParameterContext, i: int) -> dict[int, ParamPoly]:
	return {
		context.u_position(i): context.U(i + 1),
		context.u_position(i + 1): context.U(i),
	}


def closed_form_action(g: PsphGenerator, f: Function, context: ParameterContext) -> Function:
	"""
	Applies the closed-form action of a partially spherical generator to a T-free function.

	- UGen(i): U_i·f.
	- SwapGen(i): f^s + κℓ(f^s - f)/(U_{i+1} - U_i), exact on polynomials.
	- XSigma: Π_{m<ℓ}(U_1 + ℓħ - s_m) · f(U_2, …, U_n, U_1 + ℓħ).
	- YTau: f(U_n - ℓħ, U_1, …, U_{n-1}).
	- SigmaPower: Π_i Π_{m<ℓ/p}(U_i + ℓħ/p - s_m) · f(U + ℓħ/p).
	- TauPower: f(U - ℓħ/p).
	- Mixed(i, k): Π_{j≤i} Π_{m<kℓ/p}(U_j + kℓħ/p - s_m) · f(U_{i+1} + kℓħ/p - ℓħ, …, U_n + kℓħ/p - ℓħ, U_1 + kℓħ/p, …, U_i + kℓħ/p).

	Args:
		g (PsphGenerator): The generator.
		f (Function): A polynomial or rational function in U_1, …, U_n and the parameters.
		context (ParameterContext): The algebra context.

	Returns:
		Function: The image, of the same type as `f`.

	Raises:
		NonDivisibleError: If a polynomial divided difference is not exact.
	"""

	g.validate(context.l, context.p, context.n)
	is_rational = isinstance(f, RatFunc)

	if g.kind == "UGen":
		return f * context.U(g.i)

	if g.kind == "SwapGen":
		images = _swap_images(context, g.i)
		delta = context.U(g.i + 1) - context.U(g.i)
		kappa_l = context.kappa.scale(context.l)

		if is_rational:
			swapped = f.apply_automorphism(images)

			return swapped + (swapped - f) * kappa_l / delta

		first, second = context.u_position(g.i), context.u_position(g.i + 1)
		swapped = f.rename_variables({first: second, second: first})

		return swapped + (swapped - f).exact_divide(delta) * kappa_l

	prefactor, images = closed_form_data(g, context)

	if is_rational:
		return f.apply_automorphism(images) * prefactor

	return f.substitute(images) * prefactor
