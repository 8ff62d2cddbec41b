from fractions import Fraction
from typing import Mapping, Union
from sympy import (
	Poly,
	QQ
)
from sympy.polys.domains import Domain
from osn_cherednik.exact_arith.cyclotomic import CycloScalar
from osn_cherednik.exact_arith.polynomials import (
	Exponent,
	ParamPoly,
	PolynomialRing
)
from osn_cherednik.exact_arith.errors import ZeroDenominatorError


def _to_sympy(poly: ParamPoly, domain: Domain) -> Poly:
	field = poly.ring.field
	rep = {exponent: field.to_sympy(coeff, domain) for exponent, coeff in poly.terms.items()}

	return Poly.from_dict(rep, *poly.ring.symbols, domain=domain)


def _from_sympy(poly: Poly, ring: PolynomialRing) -> ParamPoly:
	terms: dict[Exponent, CycloScalar] = {}

	for exponent, coeff in poly.as_dict(native=True).items():
		terms[tuple(exponent)] = ring.field.from_sympy(coeff, poly.domain)

	return ParamPoly(ring, terms)


class RatFunc:
	"""
	A normalized quotient of two polynomials with coefficients in Q(ζ_ℓ).

	Normalization cancels the gcd of numerator and denominator and makes the
	graded-lexicographic leading coefficient of the denominator equal to 1, so two
	equal fractions always have identical stored numerators and denominators.

	Attributes:
		num (ParamPoly): The numerator.
		den (ParamPoly): The denominator, nonzero with leading coefficient 1.
	"""

	__slots__ = ("num", "den")

	def __init__(self, num: ParamPoly, den: Union[ParamPoly, None] = None):
		"""
		Initializes and normalizes a rational function.

		Args:
			num (ParamPoly): The numerator.
			den (Union[ParamPoly, None]): The denominator. Defaults to 1.

		Raises:
			ZeroDenominatorError: If the denominator is zero.
		"""

		if den is None:
			den = num.ring.one()

		if den.is_zero():
			raise ZeroDenominatorError(str(den))

		self.num, self.den = self._normalize(num, den)

	@staticmethod
	def _normalize(num: ParamPoly, den: ParamPoly) -> tuple[ParamPoly, ParamPoly]:
		ring = num.ring

		if num.is_zero():
			return num, ring.one()

		if den.is_constant():
			return num.scale(den.constant_value().inverse()), ring.one()

		# Rational fractions stay over QQ; QQ<ζ> only when a ζ-coefficient occurs.
		domain = QQ if num.is_rational() and den.is_rational() else ring.field.sympy_domain
		_, sympy_num, sympy_den = _to_sympy(num, domain).cofactors(_to_sympy(den, domain))
		num, den = _from_sympy(sympy_num, ring), _from_sympy(sympy_den, ring)
		inverse = den.leading_term()[1].inverse()

		return num.scale(inverse), den.scale(inverse)

	@classmethod
	def _from_coprime(cls, num: ParamPoly, den: ParamPoly) -> "RatFunc":
		"""
		Builds a fraction whose numerator and denominator are already coprime.

		Only the leading coefficient of the denominator is renormalized. Ring
		automorphisms preserve coprimality, so substitution results take this path.
		"""

		value = cls.__new__(cls)

		if num.is_zero():
			value.num, value.den = num, num.ring.one()

			return value

		_, lead = den.leading_term()
		inverse = lead.inverse()
		value.num, value.den = num.scale(inverse), den.scale(inverse)

		return value

	@classmethod
	def from_poly(cls, poly: ParamPoly) -> "RatFunc":
		return cls._from_coprime(poly, poly.ring.one())

	@property
	def ring(self) -> PolynomialRing:
		return self.num.ring

	def _coerce(self, other: Union[int, Fraction, ParamPoly, "RatFunc"]) -> "RatFunc":
		if isinstance(other, RatFunc):
			return other

		if isinstance(other, ParamPoly):
			return RatFunc.from_poly(other)

		return RatFunc.from_poly(self.ring.constant(other))

	def __add__(self, other: Union[int, Fraction, ParamPoly, "RatFunc"]) -> "RatFunc":
		other = self._coerce(other)

		if self.den == other.den:
			return RatFunc(self.num + other.num, self.den)

		return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

	def __radd__(self, other: Union[int, Fraction, ParamPoly]) -> "RatFunc":
		return self.__add__(other)

	def __neg__(self) -> "RatFunc":
		return RatFunc._from_coprime(-self.num, self.den)

	def __sub__(self, other: Union[int, Fraction, ParamPoly, "RatFunc"]) -> "RatFunc":
		return self.__add__(-self._coerce(other))

	def __rsub__(self, other: Union[int, Fraction, ParamPoly]) -> "RatFunc":
		return self._coerce(other).__sub__(self)

	def __mul__(self, other: Union[int, Fraction, ParamPoly, "RatFunc"]) -> "RatFunc":
		other = self._coerce(other)

		if self.den.is_constant() and other.den.is_constant():
			return RatFunc._from_coprime(self.num * other.num, self.ring.one())

		return RatFunc(self.num * other.num, self.den * other.den)

	def __rmul__(self, other: Union[int, Fraction, ParamPoly]) -> "RatFunc":
		return self.__mul__(other)

	def inverse(self) -> "RatFunc":
		if self.num.is_zero():
			raise ZeroDenominatorError(str(self))

		return RatFunc._from_coprime(self.den, self.num)

	def __truediv__(self, other: Union[int, Fraction, ParamPoly, "RatFunc"]) -> "RatFunc":
		return self * self._coerce(other).inverse()

	def __rtruediv__(self, other: Union[int, Fraction, ParamPoly]) -> "RatFunc":
		return self._coerce(other) * self.inverse()

	def __pow__(self, exponent: int) -> "RatFunc":
		if exponent < 0:
			return self.inverse() ** (-exponent)

		return RatFunc._from_coprime(self.num ** exponent, self.den ** exponent)

	def __eq__(self, other: object) -> bool:
		if isinstance(other, (int, Fraction, ParamPoly)):
			other = self._coerce(other)

		return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

	def __hash__(self) -> int:
		return hash((self.num, self.den))

	def is_zero(self) -> bool:
		return self.num.is_zero()

	def is_polynomial(self) -> bool:
		"""Whether the normalized denominator is 1."""

		return self.den.is_constant()

	def apply_automorphism(self, images: Mapping[int, ParamPoly]) -> "RatFunc":
		"""
		Substitutes variables by an invertible affine change of variables.

		Args:
			images (Mapping[int, ParamPoly]): Image of each moved variable position.

		Returns:
			RatFunc: The transformed fraction.
		"""

		return RatFunc._from_coprime(self.num.substitute(images), self.den.substitute(images))

	def substitute(self, images: Mapping[int, ParamPoly]) -> "RatFunc":
		return RatFunc(self.num.substitute(images), self.den.substitute(images))

	def __str__(self) -> str:
		if self.is_polynomial():
			return str(self.num)

		return f"({self.num}) / ({self.den})"

	def __repr__(self) -> str:
		return f"RatFunc({self.__str__()})"
