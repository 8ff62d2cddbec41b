from fractions import Fraction
from typing import (
	Mapping,
	Optional,
	Union
)
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.exact_arith.polynomials import ParamPoly
from osn_cherednik.exact_arith.rational import RatFunc
from osn_cherednik.groups.affine import (
	AffineElement,
	affine_act
)
from osn_cherednik.groups.errors import MismatchedGroupError


Coefficient = Union[int, Fraction, ParamPoly, RatFunc]


class SkewElement:
	"""
	An element Σ a_g·g of the skew monoid ring C(U) ⋆ (T ⋊ S_n).

	Terms are keyed by group element, so equal elements have equal term maps.

	Attributes:
		context (ParameterContext): The algebra context.
		terms (dict[AffineElement, RatFunc]): Nonzero coefficients keyed by group element.
	"""

	__slots__ = ("context", "terms")

	def __init__(self, context: ParameterContext, terms: Mapping[AffineElement, Coefficient]):
		self.context = context
		self.terms: dict[AffineElement, RatFunc] = {}

		for element, coefficient in terms.items():
			value = _as_ratfunc(context, coefficient)

			if not value.is_zero():
				self.terms[element] = value

	@classmethod
	def zero(cls, context: ParameterContext) -> "SkewElement":
		return cls(context, {})

	@classmethod
	def one(cls, context: ParameterContext) -> "SkewElement":
		return cls(context, {AffineElement.identity(context.n): 1})

	@classmethod
	def group(cls, context: ParameterContext, element: AffineElement, coefficient: Optional[Coefficient] = None) -> "SkewElement":
		"""Returns coefficient·element, with coefficient 1 by default."""

		return cls(context, {element: 1 if coefficient is None else coefficient})

	@classmethod
	def scalar(cls, context: ParameterContext, coefficient: Coefficient) -> "SkewElement":
		"""Returns the multiplication operator coefficient·id."""

		return cls.group(context, AffineElement.identity(context.n), coefficient)

	def _check_context(self, other: "SkewElement"):
		if other.context.n != self.context.n:
			raise MismatchedGroupError(f"S_{self.context.n}", f"S_{other.context.n}")

	def __add__(self, other: "SkewElement") -> "SkewElement":
		self._check_context(other)
		terms = dict(self.terms)

		for element, coefficient in other.terms.items():
			terms[element] = terms[element] + coefficient if element in terms else coefficient

		return SkewElement(self.context, terms)

	def __neg__(self) -> "SkewElement":
		return SkewElement(self.context, {element: -coefficient for element, coefficient in self.terms.items()})

	def __sub__(self, other: "SkewElement") -> "SkewElement":
		return self + (-other)

	def __mul__(self, other: Union["SkewElement", Coefficient]) -> "SkewElement":
		if not isinstance(other, SkewElement):
			other = SkewElement.scalar(self.context, other)

		return skew_mul(self, other)

	def __rmul__(self, other: Coefficient) -> "SkewElement":
		return skew_mul(SkewElement.scalar(self.context, other), self)

	def act(self, f: RatFunc) -> RatFunc:
		return skew_act(self, f)

	def __eq__(self, other: object) -> bool:
		return isinstance(other, SkewElement) and other.terms == self.terms

	def __hash__(self) -> int:
		return hash(frozenset(self.terms.items()))

	def is_zero(self) -> bool:
		return not self.terms

	def sorted_terms(self) -> list[tuple[AffineElement, RatFunc]]:
		"""Terms ordered by group element, for printing."""

		return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

	def __str__(self) -> str:
		if not self.terms:
			return "0"

		return " + ".join(f"({coefficient})*{element}" for element, coefficient in self.sorted_terms())

	def __repr__(self) -> str:
		return f"SkewElement({self.__str__()})"


def _as_ratfunc(context: ParameterContext, coefficient: Coefficient) -> RatFunc:
	if isinstance(coefficient, RatFunc):
		return coefficient

	if isinstance(coefficient, ParamPoly):
		return RatFunc.from_poly(coefficient)

	return RatFunc.from_poly(context.ring.constant(coefficient))


def skew_mul(x: SkewElement, y: SkewElement) -> SkewElement:
	"""
	Multiplies in the skew monoid ring, (a₁g₁)(a₂g₂) = a₁·g₁(a₂)·g₁g₂.

	Args:
		x (SkewElement): The left factor.
		y (SkewElement): The right factor.

	Returns:
		SkewElement: The product.

	Raises:
		MismatchedGroupError: If the ranks differ.
	"""

	x._check_context(y)
	terms: dict[AffineElement, RatFunc] = {}

	for left_element, left_coefficient in x.terms.items():
		for right_element, right_coefficient in y.terms.items():
			product = left_element * right_element
			coefficient = left_coefficient * affine_act(left_element, right_coefficient, x.context)
			terms[product] = terms[product] + coefficient if product in terms else coefficient

	return SkewElement(x.context, terms)


def skew_act(x: SkewElement, f: RatFunc) -> RatFunc:
	"""
	Evaluates a skew element on a rational function, Σ a_g·g(f).

	Args:
		x (SkewElement): The operator.
		f (RatFunc): The argument.

	Returns:
		RatFunc: The image.
	"""

	total = RatFunc.from_poly(x.context.ring.zero())

	for element, coefficient in x.terms.items():
		total = total + coefficient * affine_act(element, f, x.context)

	return total
