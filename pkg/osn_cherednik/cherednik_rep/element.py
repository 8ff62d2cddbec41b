import itertools
from fractions import Fraction
from typing import (
	Iterator,
	Mapping,
	Optional,
	Union
)
from osn_cherednik.exact_arith.cyclotomic import CycloScalar
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.exact_arith.polynomials import (
	Coefficient,
	ParamPoly,
	format_terms,
	grlex_key
)
from osn_cherednik.cherednik_rep.errors import SubringViolationError


TExponent = tuple[int, ...]


class PolyRepElement:
	"""
	An element of the polynomial representation C[U_1, …, U_n; T_1, …, T_n]/(T_i^ℓ - 1).

	Terms are grouped by T-exponent vector: each vector b (entries mod ℓ) maps to a
	polynomial F_b in the U-variables and the parameters, and the element is Σ_b F_b·T^b.
	Intermediate results may leave the p-subring; `check_subring` enforces it at API boundaries.

	Attributes:
		context (ParameterContext): The algebra context.
		terms (dict[TExponent, ParamPoly]): Nonzero coefficients keyed by reduced T-exponents.
	"""

	__slots__ = ("context", "terms")

	def __init__(self, context: ParameterContext, terms: Mapping[TExponent, ParamPoly]):
		self.context = context
		self.terms: dict[TExponent, ParamPoly] = {}

		for texp, coeff in terms.items():
			if len(texp) != context.n:
				raise ValueError(f"T-exponent {texp} does not have length {context.n}.")

			key = tuple(e % context.l for e in texp)
			combined = self.terms[key] + coeff if key in self.terms else coeff

			if combined.is_zero():
				self.terms.pop(key, None)
			else:
				self.terms[key] = combined

	@classmethod
	def _trusted(cls, context: ParameterContext, terms: dict[TExponent, ParamPoly]) -> "PolyRepElement":
		element = cls.__new__(cls)
		element.context = context
		element.terms = terms

		return element

	@classmethod
	def zero(cls, context: ParameterContext) -> "PolyRepElement":
		return cls._trusted(context, {})

	@classmethod
	def from_poly(cls, context: ParameterContext, poly: ParamPoly, texp: Optional[TExponent] = None) -> "PolyRepElement":
		"""
		Wraps a polynomial as poly·T^texp.

		Args:
			context (ParameterContext): The algebra context.
			poly (ParamPoly): The coefficient, in the context ring.
			texp (Optional[TExponent]): T-exponents. Defaults to the zero vector.

		Returns:
			PolyRepElement: The element.
		"""

		return cls(context, {texp if texp is not None else (0,) * context.n: poly})

	@classmethod
	def one(cls, context: ParameterContext) -> "PolyRepElement":
		return cls.from_poly(context, context.ring.one())

	@classmethod
	def monomial(
			cls,
			context: ParameterContext,
			uexp: tuple[int, ...],
			texp: TExponent,
			coeff: Coefficient = 1
	) -> "PolyRepElement":
		"""
		Builds the basis monomial coeff·U^uexp·T^texp.

		Args:
			context (ParameterContext): The algebra context.
			uexp (tuple[int, ...]): Exponents of U_1, …, U_n.
			texp (TExponent): Exponents of T_1, …, T_n.
			coeff (Coefficient): The scalar coefficient. Defaults to 1.

		Returns:
			PolyRepElement: The monomial.
		"""

		exponent = tuple(uexp) + (0,) * (context.ring.nvars - context.n)

		return cls.from_poly(context, context.ring.monomial(exponent, coeff), tuple(texp))

	def _coerce(self, other: Union["PolyRepElement", ParamPoly, Coefficient]) -> "PolyRepElement":
		if isinstance(other, PolyRepElement):
			return other

		if isinstance(other, ParamPoly):
			return PolyRepElement.from_poly(self.context, other)

		return PolyRepElement.from_poly(self.context, self.context.ring.constant(other))

	def __add__(self, other: Union["PolyRepElement", ParamPoly, Coefficient]) -> "PolyRepElement":
		other = self._coerce(other)

		if not other.terms:
			return self

		terms = dict(self.terms)
		for texp, coeff in other.terms.items():
			combined = terms[texp] + coeff if texp in terms else coeff

			if combined.is_zero():
				terms.pop(texp, None)
			else:
				terms[texp] = combined

		return PolyRepElement._trusted(self.context, terms)

	def __neg__(self) -> "PolyRepElement":
		return PolyRepElement._trusted(self.context, {texp: -coeff for texp, coeff in self.terms.items()})

	def __sub__(self, other: Union["PolyRepElement", ParamPoly, Coefficient]) -> "PolyRepElement":
		return self + (-self._coerce(other))

	def scale(self, factor: Union[ParamPoly, Coefficient]) -> "PolyRepElement":
		"""
		Multiplies every coefficient by a polynomial or scalar that does not involve T.
		"""

		if not isinstance(factor, ParamPoly):
			factor = self.context.ring.constant(factor)

		if factor.is_zero():
			return PolyRepElement.zero(self.context)

		return PolyRepElement._trusted(
				self.context,
				{texp: coeff * factor for texp, coeff in self.terms.items()}
		)

	def __mul__(self, other: Union["PolyRepElement", ParamPoly, Coefficient]) -> "PolyRepElement":
		if not isinstance(other, PolyRepElement):
			return self.scale(other)

		l = self.context.l
		terms: dict[TExponent, ParamPoly] = {}

		for left_texp, left_coeff in self.terms.items():
			for right_texp, right_coeff in other.terms.items():
				texp = tuple((a + b) % l for a, b in zip(left_texp, right_texp))
				product = left_coeff * right_coeff
				terms[texp] = terms[texp] + product if texp in terms else product

		return PolyRepElement(self.context, terms)

	def __rmul__(self, other: Union[ParamPoly, Coefficient]) -> "PolyRepElement":
		return self.scale(other)

	def multiply_t(self, i: int, scalar: Optional[CycloScalar] = None) -> "PolyRepElement":
		"""
		Multiplies by scalar·T_i for 1 ≤ i ≤ n.

		Args:
			i (int): The T-variable index.
			scalar (Optional[CycloScalar]): An extra root-of-unity factor. Defaults to 1.

		Returns:
			PolyRepElement: The product.
		"""

		l = self.context.l
		terms = {}

		for texp, coeff in self.terms.items():
			shifted = list(texp)
			shifted[i - 1] = (shifted[i - 1] + 1) % l
			terms[tuple(shifted)] = coeff if scalar is None else coeff.scale(scalar)

		return PolyRepElement._trusted(self.context, terms)

	def transform(
			self,
			u_images: Mapping[int, ParamPoly],
			t_map: Mapping[TExponent, tuple[TExponent, CycloScalar]]
	) -> "PolyRepElement":
		"""
		Applies a ring endomorphism given on U-variables and on T-monomials.

		Args:
			u_images (Mapping[int, ParamPoly]): Image of each moved U-variable, keyed by ring position.
			t_map (Mapping[TExponent, tuple[TExponent, CycloScalar]]): Image texp and scalar of each T-monomial.
				Monomials absent from the map are fixed.

		Returns:
			PolyRepElement: The transformed element.
		"""

		terms: dict[TExponent, ParamPoly] = {}

		for texp, coeff in self.terms.items():
			image = coeff.substitute(u_images)
			target, scalar = t_map.get(texp, (texp, None))

			if scalar is not None:
				image = image.scale(scalar)

			terms[target] = terms[target] + image if target in terms else image

		return PolyRepElement(self.context, terms)

	def swapped(self, i: int) -> "PolyRepElement":
		"""Exchanges U_i with U_{i+1} and T_i with T_{i+1}."""

		first, second = self.context.u_position(i), self.context.u_position(i + 1)
		terms: dict[TExponent, ParamPoly] = {}

		for texp, coeff in self.terms.items():
			target = list(texp)
			target[i - 1], target[i] = target[i], target[i - 1]
			target = tuple(target)
			image = coeff.rename_variables({first: second, second: first})

			terms[target] = terms[target] + image if target in terms else image

		return PolyRepElement(self.context, terms)

	def map_coefficients(self, function) -> "PolyRepElement":
		"""Applies `function` to every ParamPoly coefficient, keeping the T-exponents."""

		return PolyRepElement(self.context, {texp: function(coeff) for texp, coeff in self.terms.items()})

	def __eq__(self, other: object) -> bool:
		if isinstance(other, (ParamPoly, int, Fraction, CycloScalar)):
			other = self._coerce(other)

		return isinstance(other, PolyRepElement) and other.terms == self.terms

	def __hash__(self) -> int:
		return hash(frozenset(self.terms.items()))

	def is_zero(self) -> bool:
		return not self.terms

	def is_t_free(self) -> bool:
		return all(not any(texp) for texp in self.terms)

	def t_free_part(self) -> ParamPoly:
		"""The coefficient of T^0, a polynomial in U and the parameters."""

		return self.terms.get((0,) * self.context.n, self.context.ring.zero())

	def in_subring(self) -> bool:
		"""Whether every T-monomial has exponent sum divisible by p."""

		p = self.context.p

		return all(sum(texp) % p == 0 for texp in self.terms)

	def check_subring(self):
		"""
		Raises if some T-monomial lies outside the p-subring.

		Raises:
			SubringViolationError: For the first offending T-exponent vector.
		"""

		for texp in sorted(self.terms):
			if sum(texp) % self.context.p != 0:
				raise SubringViolationError(texp, self.context.p)

	def u_degree(self) -> int:
		"""Total degree in U_1, …, U_n, or -1 for zero."""

		positions = self.context.u_positions

		return max((coeff.degree_in(positions) for coeff in self.terms.values()), default=-1)

	def __str__(self) -> str:
		return format_element(self)

	def __repr__(self) -> str:
		return f"PolyRepElement({self.__str__()})"


def format_element(f: PolyRepElement) -> str:
	"""
	Prints an element in canonical order.

	Terms are sorted graded-lexicographically descending over the combined exponent of
	(U_1, …, U_n, h, k, s_0, …, T_1, …, T_n).

	Args:
		f (PolyRepElement): The element.

	Returns:
		str: The printed sum, "0" for the zero element.
	"""

	names = f.context.ring.names + tuple(f"T{i}" for i in range(1, f.context.n + 1))
	expanded = [
		(exponent + texp, coeff)
		for texp, poly in f.terms.items()
		for exponent, coeff in poly.terms.items()
	]
	expanded.sort(key=lambda item: grlex_key(item[0]), reverse=True)

	return format_terms([(dict(zip(names, exponent)), coeff) for exponent, coeff in expanded])


def subring_texps(context: ParameterContext) -> Iterator[TExponent]:
	"""Yields every T-exponent vector whose sum is divisible by p, in lexicographic order."""

	for texp in itertools.product(range(context.l), repeat=context.n):
		if sum(texp) % context.p == 0:
			yield texp


def u_exponents(n: int, degree_bound: int) -> Iterator[tuple[int, ...]]:
	"""
	Yields all exponent vectors of U-monomials of total degree at most `degree_bound`.

	Vectors come by increasing degree and, within one degree, in decreasing lexicographic order.

	Args:
		n (int): Number of variables.
		degree_bound (int): The maximal total degree.

	Returns:
		Iterator[tuple[int, ...]]: The exponent vectors.
	"""

	for degree in range(degree_bound + 1):
		vectors = [
			vector
			for vector in itertools.product(range(degree + 1), repeat=n)
			if sum(vector) == degree
		]

		yield from sorted(vectors, reverse=True)


def monomial_basis(context: ParameterContext, degree_bound: int) -> list[PolyRepElement]:
	"""
	Lists the basis monomials U^a·T^b with |a| ≤ degree_bound and T^b in the p-subring.

	Args:
		context (ParameterContext): The algebra context.
		degree_bound (int): Maximal U-degree.

	Returns:
		list[PolyRepElement]: The monomials, ordered by U-exponent and then T-exponent.
	"""

	texps = list(subring_texps(context))

	return [
		PolyRepElement.monomial(context, uexp, texp)
		for uexp in u_exponents(context.n, degree_bound)
		for texp in texps
	]
