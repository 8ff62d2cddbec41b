import functools
from fractions import Fraction
from typing import Iterable
from osn_cherednik.exact_arith.cyclotomic import CycloScalar
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.exact_arith.polynomials import ParamPoly
from osn_cherednik.cherednik_rep.errors import GeneratorIndexError
from osn_cherednik.cherednik_rep.element import (
	PolyRepElement,
	TExponent
)
from osn_cherednik.cherednik_rep.types import (
	Generator,
	OperatorSum
)


class PolynomialRepresentation:
	"""
	The action of the alternate generators on the polynomial representation for one context.

	Per-context data is computed once: the σ prefactor U_1 + ħ - p(ζ^{-1}T_1), the elements
	π_{j,j+1} and the images of the cyclic shift and its inverse.

	Attributes:
		context (ParameterContext): The algebra context, including enabled rule mutations.
	"""

	def __init__(self, context: ParameterContext):
		self.context = context

	def p_element(self, zeta_power: int, i: int) -> PolyRepElement:
		"""
		Expands p(ζ^a·T_i) = Σ_k c_k ζ^{ak} T_i^k.

		Args:
			zeta_power (int): The exponent a.
			i (int): The T-variable index, 1 ≤ i ≤ n.

		Returns:
			PolyRepElement: The expansion.
		"""

		context = self.context
		terms = {}

		for k, c_k in enumerate(context.c_vector):
			texp = [0] * context.n
			texp[i - 1] = k
			terms[tuple(texp)] = c_k.scale(context.zeta(zeta_power * k))

		return PolyRepElement(context, terms)

	@functools.cached_property
	def sigma_factor(self) -> PolyRepElement:
		"""U_1 + ħ - p(ζ^{-1}T_1), the prefactor of σ."""

		context = self.context
		factor = PolyRepElement.from_poly(context, context.U(1)) - self.p_element(-1, 1)

		if not context.has_mutation("sigma_without_hbar"):
			factor = factor + context.hbar

		return factor

	@functools.cached_property
	def pi_elements(self) -> dict[int, PolyRepElement]:
		"""π_{j,j+1} = (1/ℓ) Σ_k T_j^k T_{j+1}^{-k} for 1 ≤ j < n."""

		context = self.context
		pis = {}

		for j in range(1, context.n):
			terms = {}

			for k in range(context.l):
				texp = [0] * context.n
				texp[j - 1] = k
				texp[j] = -k
				terms[tuple(texp)] = context.ring.constant(Fraction(1, context.l))

			pis[j] = PolyRepElement(context, terms)

		return pis

	@functools.cached_property
	def _shift_images(self) -> dict[int, ParamPoly]:
		context = self.context
		images = {context.u_position(j): context.U(j + 1) for j in range(1, context.n)}
		images[context.u_position(context.n)] = context.U(1) + context.hbar

		return images

	@functools.cached_property
	def _inverse_shift_images(self) -> dict[int, ParamPoly]:
		context = self.context
		images = {context.u_position(j): context.U(j - 1) for j in range(2, context.n + 1)}

		if context.has_mutation("tau_wrong_sign"):
			images[context.u_position(1)] = context.U(context.n) + context.hbar
		else:
			images[context.u_position(1)] = context.U(context.n) - context.hbar

		return images

	def _shift_t_map(self, texps: Iterable[TExponent]) -> dict[TExponent, tuple[TExponent, CycloScalar]]:
		return {
			texp: (texp[-1:] + texp[:-1], self.context.zeta(-texp[-1]))
			for texp in texps
		}

	def _inverse_shift_t_map(self, texps: Iterable[TExponent]) -> dict[TExponent, tuple[TExponent, CycloScalar]]:
		return {
			texp: (texp[1:] + texp[:1], self.context.zeta(texp[0]))
			for texp in texps
		}

	def validate(self, generator: Generator):
		"""
		Checks the index of a generator against the rank.

		Raises:
			GeneratorIndexError: For Swap(i) with i outside 1..n-1.
			ValueError: For an unknown generator kind.
		"""

		if generator.kind == "Swap" and not 1 <= generator.index < self.context.n:
			raise GeneratorIndexError("Swap", generator.index, self.context.n)

		if generator.kind not in ("T", "U", "Swap", "Sigma", "Tau"):
			raise ValueError(f"Unknown generator kind: {generator.kind}.")

	def multiply_t(self, i: int, f: PolyRepElement) -> PolyRepElement:
		"""Multiplies by t_i = ζ^{-q} T_r, where i = r + qn and 1 ≤ r ≤ n."""

		q, r = divmod(i - 1, self.context.n)

		return f.multiply_t(r + 1, self.context.zeta(-q) if q else None)

	def multiply_u(self, i: int, f: PolyRepElement) -> PolyRepElement:
		return f.scale(self.context.U(i))

	def swap(self, i: int, f: PolyRepElement) -> PolyRepElement:
		"""
		Applies (i, i+1): f^s + κℓ·((f^s - f)·π_{i,i+1}) / (U_{i+1} - U_i).

		The division is exact coefficientwise in every T-monomial.

		Args:
			i (int): The index, 1 ≤ i < n.
			f (PolyRepElement): The input.

		Returns:
			PolyRepElement: The image.

		Raises:
			NonDivisibleError: If some divided difference is not exact.
		"""

		context = self.context
		swapped = f.swapped(i)
		difference = swapped - f

		if difference.is_zero():
			return swapped

		if not context.has_mutation("swap_without_pi"):
			difference = difference * self.pi_elements[i]

		delta = context.U(i + 1) - context.U(i)
		correction = difference.map_coefficients(lambda coeff: coeff.exact_divide(delta))

		return swapped + correction.scale(context.kappa.scale(context.l))

	def sigma(self, f: PolyRepElement) -> PolyRepElement:
		"""
		Applies σ: (U_1 - p(ζ^{-1}T_1) + ħ)·f(U_2, …, U_{n+1}; T_2, …, T_{n+1}).

		U_{n+1} = U_1 + ħ and T_{n+1} = ζ^{-1} T_1.
		"""

		shifted = f.transform(self._shift_images, self._shift_t_map(f.terms))

		return self.sigma_factor * shifted

	def tau(self, f: PolyRepElement) -> PolyRepElement:
		"""
		Applies τ: f(U_0, …, U_{n-1}; T_0, …, T_{n-1}) with U_0 = U_n - ħ and T_0 = ζ T_n.
		"""

		return f.transform(self._inverse_shift_images, self._inverse_shift_t_map(f.terms))

	def act_gen(self, generator: Generator, f: PolyRepElement) -> PolyRepElement:
		"""
		Applies one generator.

		Args:
			generator (Generator): u_i, t_i, (i,i+1), σ or τ.
			f (PolyRepElement): The argument.

		Returns:
			PolyRepElement: The image.

		Raises:
			GeneratorIndexError: For Swap(i) with i outside 1..n-1.
		"""

		self.validate(generator)

		if generator.kind == "T":
			return self.multiply_t(generator.index, f)

		if generator.kind == "U":
			return self.multiply_u(generator.index, f)

		if generator.kind == "Swap":
			return self.swap(generator.index, f)

		if generator.kind == "Sigma":
			return self.sigma(f)

		return self.tau(f)

	def act_word(self, word: Iterable[Generator], f: PolyRepElement) -> PolyRepElement:
		"""
		Applies a word, rightmost generator first.

		Args:
			word (Iterable[Generator]): The word; word[0] acts last.
			f (PolyRepElement): The input.

		Returns:
			PolyRepElement: The image.
		"""

		result = f

		for generator in reversed(tuple(word)):
			if result.is_zero():
				break

			result = self.act_gen(generator, result)

		return result

	def act_operator(self, operator: OperatorSum, f: PolyRepElement) -> PolyRepElement:
		result = PolyRepElement.zero(self.context)

		for word, coeff in operator.terms.items():
			result = result + self.act_word(word, f).scale(coeff)

		return result


@functools.lru_cache(maxsize=64)
def get_representation(context: ParameterContext) -> PolynomialRepresentation:
	"""
	Returns the shared representation for a context.

	Args:
		context (ParameterContext): The algebra context.

	Returns:
		PolynomialRepresentation: The cached action engine.
	"""

	return PolynomialRepresentation(context)


def act_gen(generator: Generator, f: PolyRepElement) -> PolyRepElement:
	"""
	Applies one generator of the alternate presentation.

	Args:
		generator (Generator): t_i, u_i, (i, i+1), σ or τ.
		f (PolyRepElement): The input element.

	Returns:
		PolyRepElement: The image.

	Raises:
		GeneratorIndexError: If a Swap index is out of range.
		NonDivisibleError: If a divided difference is not exact.
	"""

	return get_representation(f.context).act_gen(generator, f)


def act_word(word: Iterable[Generator], f: PolyRepElement) -> PolyRepElement:
	"""
	Applies a word right to left: act_word(g_1⋯g_m, f) = g_1(g_2(⋯ g_m(f))).

	Args:
		word (Iterable[Generator]): The word.
		f (PolyRepElement): The input element.

	Returns:
		PolyRepElement: The image.
	"""

	return get_representation(f.context).act_word(word, f)


def act_operator(operator: OperatorSum, f: PolyRepElement) -> PolyRepElement:
	"""Applies a linear combination of words to an element, using the cached representation of its context."""

	return get_representation(f.context).act_operator(operator, f)
