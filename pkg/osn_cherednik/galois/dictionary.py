from fractions import Fraction
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.exact_arith.rational import RatFunc
from osn_cherednik.groups.affine import AffineElement
from osn_cherednik.psph.closed_forms import (
	closed_form_data,
	shift_factor
)
from osn_cherednik.psph.types import (
	PsphGenerator,
	SwapGen,
	XSIGMA,
	YTAU,
	SIGMA_POWER,
	TAU_POWER
)
from osn_cherednik.galois.skew import SkewElement
from osn_cherednik.galois.types import (
	AffineGenerator,
	Compose,
	GeneratorNode,
	Identity,
	OperatorExpression,
	Scale,
	Sum
)


def _shift_element(context: ParameterContext, g: PsphGenerator) -> AffineElement:
	"""
	The group part of a shift-type generator, read off from U_a ↦ U_{w(a)} + shift_{w(a)}·ħ.
	"""

	l, p, n = context.l, context.p, context.n

	if g.kind == "XSigma":
		return AffineElement([l] + [0] * (n - 1), list(range(2, n + 1)) + [1])

	if g.kind == "YTau":
		return AffineElement([0] * (n - 1) + [-l], [n] + list(range(1, n)))

	if g.kind == "SigmaPower":
		return AffineElement.mu_all(l // p, n)

	if g.kind == "TauPower":
		return AffineElement.mu_all(-(l // p), n)

	winding = g.k * l // p
	rest = n - g.i
	perm = [g.i + a if a <= rest else a - rest for a in range(1, n + 1)]
	shift = [winding if target <= g.i else winding - l for target in range(1, n + 1)]

	return AffineElement(shift, perm)


def _swap_correction(context: ParameterContext, i: int) -> RatFunc:
	"""κℓ/(U_{i+1} - U_i)."""

	return RatFunc(context.kappa.scale(context.l), context.U(i + 1) - context.U(i))


def to_skew(g: PsphGenerator, context: ParameterContext) -> SkewElement:
	"""
	Writes a partially spherical generator as an element of the skew monoid ring.

	- UGen(i) ↦ U_i·id.
	- SwapGen(i) ↦ (1 + κℓ/(U_{i+1} - U_i))·s_{i,i+1} - κℓ/(U_{i+1} - U_i).
	- Every other generator ↦ prefactor·g, with the prefactor and the group element g of its closed form.

	Args:
		g (PsphGenerator): The generator.
		context (ParameterContext): The algebra context.

	Returns:
		SkewElement: An element whose action agrees with `closed_form_action(g, ·)`.
	"""

	g.validate(context.l, context.p, context.n)

	if g.kind == "UGen":
		return SkewElement.scalar(context, context.U(g.i))

	if g.kind == "SwapGen":
		correction = _swap_correction(context, g.i)

		return SkewElement(
				context,
				{
					AffineElement.swap(g.i, context.n): correction + 1,
					AffineElement.identity(context.n): -correction,
				}
		)

	if g.kind == "XSigma":
		prefactor = shift_factor(
				context,
				1,
				Fraction(context.l),
				context.l,
				context.has_mutation("skew_xsigma_missing_factor")
		)
	else:
		prefactor, _ = closed_form_data(g, context)

	return SkewElement.group(context, _shift_element(context, g), prefactor)


def _swap_expression(context: ParameterContext, i: int) -> OperatorExpression:
	delta = context.U(i + 1) - context.U(i)
	ratio = RatFunc(delta, delta + context.kappa.scale(context.l))

	if context.has_mutation("swap_dictionary_without_correction"):
		return Scale(ratio, GeneratorNode(SwapGen(i)))

	return Scale(ratio, Sum([GeneratorNode(SwapGen(i)), Scale(_swap_correction(context, i), Identity())]))


def from_skew(a: AffineGenerator, context: ParameterContext) -> OperatorExpression:
	"""
	Writes a generator of T ⋊ S_n through closed-form operators of partially spherical generators.

	- s_{i,i+1} = (U_{i+1} - U_i)/(U_{i+1} - U_i + κℓ)·(SwapGen(i) + κℓ/(U_{i+1} - U_i)).
	- μ_i^ℓ = Π_m(U_i + ℓħ - s_m)^{-1}·s_{i-1}⋯s_1∘XSigma∘s_{n-1}⋯s_i.
	- μ_i^{-ℓ} = s_i⋯s_{n-1}∘YTau∘s_1⋯s_{i-1}.
	- (μ_1⋯μ_n)^{ℓ/p} = Π_{j,m}(U_j + ℓħ/p - s_m)^{-1}·SigmaPower.
	- (μ_1⋯μ_n)^{-ℓ/p} = TauPower.

	Args:
		a (AffineGenerator): The group generator.
		context (ParameterContext): The algebra context.

	Returns:
		OperatorExpression: An expression whose action equals `affine_act(a.to_affine(...), ·)`.
	"""

	l, n = context.l, context.n
	a.validate(n)

	if a.kind == "swap":
		return _swap_expression(context, a.i)

	if a.kind == "mu":
		factors = [_swap_expression(context, j) for j in range(a.i - 1, 0, -1)]
		factors.append(GeneratorNode(XSIGMA))
		factors += [_swap_expression(context, j) for j in range(n - 1, a.i - 1, -1)]

		normalizer = RatFunc(context.ring.one(), shift_factor(context, a.i, Fraction(l), l))

		return Scale(normalizer, Compose(factors))

	if a.kind == "mu_inverse":
		factors = [_swap_expression(context, j) for j in range(a.i, n)]
		factors.append(GeneratorNode(YTAU))
		factors += [_swap_expression(context, j) for j in range(1, a.i)]

		return Compose(factors)

	if a.kind == "mu_all":
		prefactor, _ = closed_form_data(SIGMA_POWER, context)

		return Scale(RatFunc(context.ring.one(), prefactor), GeneratorNode(SIGMA_POWER))

	return GeneratorNode(TAU_POWER)


def expression_to_skew(expression: OperatorExpression, context: ParameterContext) -> SkewElement:
	"""
	Expands an operator expression into the skew monoid ring through `to_skew`.

	Args:
		expression (OperatorExpression): The expression.
		context (ParameterContext): The algebra context.

	Returns:
		SkewElement: The skew element with the same action.
	"""

	if isinstance(expression, Identity):
		return SkewElement.one(context)

	if isinstance(expression, GeneratorNode):
		return to_skew(expression.generator, context)

	if isinstance(expression, Scale):
		return SkewElement.scalar(context, expression.coefficient) * expression_to_skew(expression.operand, context)

	if isinstance(expression, Sum):
		total = SkewElement.zero(context)

		for operand in expression.operands:
			total = total + expression_to_skew(operand, context)

		return total

	if isinstance(expression, Compose):
		product = SkewElement.one(context)

		for operand in expression.operands:
			product = product * expression_to_skew(operand, context)

		return product

	raise TypeError(f"Unsupported operator expression: {expression!r}.")
