import math
import itertools
from fractions import Fraction
from osn_cherednik.exact_arith.polynomials import ParamPoly
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.cherednik_rep.action import get_representation
from osn_cherednik.cherednik_rep.element import (
	PolyRepElement,
	TExponent
)
from osn_cherednik.cherednik_rep.types import Swap
from osn_cherednik.groups.gpn import (
	adjacent_word,
	enumerate_diagonal_subgroup,
	enumerate_group
)


def _diagonal_order(l: int, p: int, n: int) -> int:
	return l ** n // p


def project_e_prime(f: PolyRepElement) -> PolyRepElement:
	"""
	Applies e' = (1/|A|) Σ_{a∈A} a, where A = {t^b : Σb ≡ 0 mod p} acts by multiplication by T^b.

	Multiplying T^b by all of A sweeps out the coset {c : Σc ≡ Σb mod p}, so the coefficient
	of T^c in the result is (1/|A|) times the sum of the coefficients F_b over the class of Σc mod p.

	Args:
		f (PolyRepElement): The input.

	Returns:
		PolyRepElement: e'·f.
	"""

	context = f.context
	p = context.p
	class_sums: dict[int, ParamPoly] = {}

	for texp, coeff in f.terms.items():
		residue = sum(texp) % p
		class_sums[residue] = class_sums[residue] + coeff if residue in class_sums else coeff

	weight = Fraction(1, _diagonal_order(context.l, p, context.n))
	terms: dict[TExponent, ParamPoly] = {}

	for residue, total in class_sums.items():
		if total.is_zero():
			continue

		averaged = total.scale(weight)

		for texp in itertools.product(range(context.l), repeat=context.n):
			if sum(texp) % p == residue:
				terms[texp] = averaged

	return PolyRepElement(context, terms)


def project_e_prime_bruteforce(f: PolyRepElement) -> PolyRepElement:
	"""Applies e' by summing T^a·f over every a ∈ A."""

	context = f.context
	total = PolyRepElement.zero(context)

	for texp in enumerate_diagonal_subgroup(context.l, context.p, context.n):
		total = total + PolyRepElement.monomial(context, (0,) * context.n, texp) * f

	return total.scale(Fraction(1, _diagonal_order(context.l, context.p, context.n)))


def embed(poly: ParamPoly, context: ParameterContext) -> PolyRepElement:
	"""
	Embeds a T-free polynomial into e'𝒫 as poly·E', where E' = e'·1.

	Args:
		poly (ParamPoly): A polynomial in the U-variables and parameters.
		context (ParameterContext): The algebra context.

	Returns:
		PolyRepElement: The embedded element.
	"""

	return project_e_prime(PolyRepElement.from_poly(context, poly))


def dunkl_symmetrize(f: PolyRepElement) -> PolyRepElement:
	"""
	Averages f over S_n acting through the Swap rule, (1/n!) Σ_w w·f.

	Args:
		f (PolyRepElement): The input.

	Returns:
		PolyRepElement: The symmetrization.
	"""

	context = f.context
	representation = get_representation(context)
	total = PolyRepElement.zero(context)

	for perm in itertools.permutations(range(1, context.n + 1)):
		word = [Swap(i) for i in adjacent_word(perm)]
		total = total + representation.act_word(word, f)

	return total.scale(Fraction(1, math.factorial(context.n)))


def project_e(f: PolyRepElement) -> PolyRepElement:
	"""
	Applies e = (1/|W|) Σ_{g∈W} g for W = G(ℓ,p,n), computed as the S_n symmetrizer after e'.

	Args:
		f (PolyRepElement): The input.

	Returns:
		PolyRepElement: e·f.
	"""

	return dunkl_symmetrize(project_e_prime(f))


def project_e_bruteforce(f: PolyRepElement) -> PolyRepElement:
	"""Applies e by summing g·f over every element g = t^b·w of G(ℓ,p,n)."""

	context = f.context
	representation = get_representation(context)
	total = PolyRepElement.zero(context)
	order = 0

	for element in enumerate_group(context.l, context.p, context.n):
		moved = representation.act_word([Swap(i) for i in adjacent_word(element.perm)], f)
		total = total + PolyRepElement.monomial(context, (0,) * context.n, element.texp) * moved
		order += 1

	return total.scale(Fraction(1, order))
