import functools
from fractions import Fraction
from typing import Iterable, Union
from sympy import (
	I,
	Poly,
	QQ,
	Symbol,
	cyclotomic_poly,
	exp,
	pi
)
from sympy.polys.domains import Domain
from osn_cherednik.exact_arith.errors import (
	MismatchedRingError,
	ZeroDenominatorError
)


_ZETA_SYMBOL = Symbol("z")


class CyclotomicField:
	"""
	The cyclotomic field Q(ζ_ℓ) presented as Q[x]/Φ_ℓ(x).

	Elements are stored as coefficient vectors of length φ(ℓ). The field keeps a
	table of the reductions of x^k for every power that can appear in a product of two
	reduced elements, as well as the reductions of ζ^k for 0 ≤ k < ℓ.

	Attributes:
		l (int): The order of the root of unity.
		degree (int): φ(ℓ), the dimension of the field over Q.
		modulus (Poly): Φ_ℓ as a sympy polynomial in `z`.
	"""

	def __init__(self, l: int):
		"""
		Initializes the field for a given ℓ.

		Args:
			l (int): The order of the root of unity. Must be positive.

		Raises:
			ValueError: If `l` is not positive.
		"""

		if l < 1:
			raise ValueError(f"Cyclotomic order must be positive, got {l}.")

		self.l = l
		self.modulus = Poly(cyclotomic_poly(l, _ZETA_SYMBOL), _ZETA_SYMBOL, domain=QQ)
		self.degree = self.modulus.degree()

		low_to_high = [Fraction(int(c.p), int(c.q)) for c in reversed(self.modulus.all_coeffs())]

		reductions = []
		current = [Fraction(0)] * self.degree
		current[0] = Fraction(1)

		for _ in range(max(2 * self.degree - 1, l)):
			reductions.append(tuple(current))

			overflow = current[-1]
			current = [Fraction(0)] + current[:-1]

			if overflow != 0:
				current = [value - overflow * low_to_high[index] for index, value in enumerate(current)]

		self._reductions = reductions

	def __eq__(self, other: object) -> bool:
		return isinstance(other, CyclotomicField) and other.l == self.l

	def __hash__(self) -> int:
		return hash(("CyclotomicField", self.l))

	def __str__(self) -> str:
		return f"Q(zeta_{self.l})"

	def __repr__(self) -> str:
		return self.__str__()

	def element(self, coeffs: Iterable[Union[int, Fraction]]) -> "CycloScalar":
		"""
		Builds an element from an arbitrary-length coefficient list in powers of ζ and reduces it.

		Args:
			coeffs (Iterable[Union[int, Fraction]]): Coefficients of 1, ζ, ζ², ...

		Returns:
			CycloScalar: The reduced element.
		"""

		result = [Fraction(0)] * self.degree

		for power, coeff in enumerate(coeffs):
			if coeff == 0:
				continue

			reduction = self.zeta_vector(power)
			for index in range(self.degree):
				if reduction[index] != 0:
					result[index] += coeff * reduction[index]

		return CycloScalar(self, result)

	@functools.cached_property
	def sympy_domain(self) -> Domain:
		"""
		The sympy coefficient domain matching this field.

		For φ(ℓ) = 1 this is QQ. Otherwise it is QQ<ζ_ℓ> built from the pair (Φ_ℓ, ζ_ℓ), so
		sympy keeps ζ_ℓ itself as the generator and element lists are coefficient vectors in
		powers of ζ.
		"""

		if self.degree == 1:
			return QQ

		return QQ.algebraic_field((self.modulus, exp(2 * pi * I / self.l)))

	def to_sympy(self, value: "CycloScalar", domain: Domain):
		"""Converts an element to a native coefficient of `domain`, which is QQ or `sympy_domain`."""

		if domain.is_QQ:
			value = value.rational_value()

			return QQ(value.numerator, value.denominator)

		return self.sympy_domain.new([QQ(c.numerator, c.denominator) for c in reversed(value.coeffs)])

	def from_sympy(self, value, domain: Domain) -> "CycloScalar":
		"""Converts a native coefficient of `domain` back to an element."""

		if domain.is_QQ:
			return self.rational(Fraction(int(value.numerator), int(value.denominator)))

		return self.element(Fraction(int(c.numerator), int(c.denominator)) for c in reversed(value.to_list()))

	def zeta_vector(self, power: int) -> tuple[Fraction, ...]:
		"""Returns the reduced coefficient vector of ζ^power."""

		return self._reductions[power % self.l]

	def zeta(self, power: int = 1) -> "CycloScalar":
		return CycloScalar(self, self.zeta_vector(power))

	def rational(self, value: Union[int, Fraction]) -> "CycloScalar":
		coeffs = [Fraction(0)] * self.degree
		coeffs[0] = Fraction(value)

		return CycloScalar(self, coeffs)

	def zero(self) -> "CycloScalar":
		return self.rational(0)

	def one(self) -> "CycloScalar":
		return self.rational(1)

	def _reduce_convolution(self, convolution: list[Fraction]) -> list[Fraction]:
		result = [Fraction(0)] * self.degree

		for power, value in enumerate(convolution):
			if value == 0:
				continue

			reduction = self._reductions[power]
			for index in range(self.degree):
				if reduction[index] != 0:
					result[index] += value * reduction[index]

		return result


@functools.lru_cache(maxsize=None)
def get_cyclotomic_field(l: int) -> CyclotomicField:
	"""
	Returns the shared `CyclotomicField` instance for ℓ.

	Args:
		l (int): The order of the root of unity.

	Returns:
		CyclotomicField: The cached field.
	"""

	return CyclotomicField(l)


class CycloScalar:
	"""
	An immutable element of Q(ζ_ℓ) in canonical form.

	Attributes:
		field (CyclotomicField): The field this element lives in.
		coeffs (tuple[Fraction, ...]): Coefficients of 1, ζ, …, ζ^{φ(ℓ)-1}.
	"""

	__slots__ = ("field", "coeffs")

	def __init__(self, field: CyclotomicField, coeffs: Iterable[Union[int, Fraction]]):
		self.field = field
		self.coeffs = tuple(Fraction(c) for c in coeffs)

	def _coerce(self, other: Union[int, Fraction, "CycloScalar"]) -> "CycloScalar":
		if isinstance(other, CycloScalar):
			if other.field.l != self.field.l:
				raise MismatchedRingError(str(self.field), str(other.field))

			return other

		return self.field.rational(other)

	def __add__(self, other: Union[int, Fraction, "CycloScalar"]) -> "CycloScalar":
		other = self._coerce(other)

		return CycloScalar(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

	def __radd__(self, other: Union[int, Fraction]) -> "CycloScalar":
		return self.__add__(other)

	def __neg__(self) -> "CycloScalar":
		return CycloScalar(self.field, [-a for a in self.coeffs])

	def __sub__(self, other: Union[int, Fraction, "CycloScalar"]) -> "CycloScalar":
		return self.__add__(-self._coerce(other))

	def __rsub__(self, other: Union[int, Fraction]) -> "CycloScalar":
		return self._coerce(other).__sub__(self)

	def __mul__(self, other: Union[int, Fraction, "CycloScalar"]) -> "CycloScalar":
		if not isinstance(other, CycloScalar):
			factor = Fraction(other)

			return CycloScalar(self.field, [a * factor for a in self.coeffs])

		other = self._coerce(other)

		if self.field.degree == 1:
			return CycloScalar(self.field, [self.coeffs[0] * other.coeffs[0]])

		convolution = [Fraction(0)] * (2 * self.field.degree - 1)
		for i, a in enumerate(self.coeffs):
			if a == 0:
				continue

			for j, b in enumerate(other.coeffs):
				if b != 0:
					convolution[i + j] += a * b

		return CycloScalar(self.field, self.field._reduce_convolution(convolution))

	def __rmul__(self, other: Union[int, Fraction]) -> "CycloScalar":
		return self.__mul__(other)

	def inverse(self) -> "CycloScalar":
		"""
		Computes the multiplicative inverse via the extended Euclidean algorithm modulo Φ_ℓ.

		Returns:
			CycloScalar: The inverse element.

		Raises:
			ZeroDenominatorError: If the element is zero.
		"""

		if self.is_zero():
			raise ZeroDenominatorError(str(self))

		if self.is_rational():
			return self.field.rational(1 / self.coeffs[0])

		as_poly = Poly(list(reversed(self.coeffs)), _ZETA_SYMBOL, domain=QQ)
		inverted = as_poly.invert(self.field.modulus)

		return CycloScalar(
				self.field,
				[Fraction(int(c.p), int(c.q)) for c in reversed(inverted.all_coeffs())]
				+ [Fraction(0)] * (self.field.degree - inverted.degree() - 1)
		)

	def __truediv__(self, other: Union[int, Fraction, "CycloScalar"]) -> "CycloScalar":
		other = self._coerce(other)

		return self * other.inverse()

	def __eq__(self, other: object) -> bool:
		if isinstance(other, (int, Fraction)):
			return self.is_rational() and self.coeffs[0] == other

		return (
				isinstance(other, CycloScalar)
				and other.field.l == self.field.l
				and other.coeffs == self.coeffs
		)

	def __hash__(self) -> int:
		if self.is_rational():
			return hash(self.coeffs[0])

		return hash((self.field.l, self.coeffs))

	def is_zero(self) -> bool:
		return all(c == 0 for c in self.coeffs)

	def is_rational(self) -> bool:
		return all(c == 0 for c in self.coeffs[1:])

	def rational_value(self) -> Fraction:
		"""
		Returns the element as a Fraction.

		Raises:
			ValueError: If the element has a nonzero ζ-component.
		"""

		if not self.is_rational():
			raise ValueError(f"{self} is not rational.")

		return self.coeffs[0]

	def is_single_term(self) -> bool:
		return sum(1 for c in self.coeffs if c != 0) <= 1

	def __str__(self) -> str:
		parts = []

		for power, coeff in enumerate(self.coeffs):
			if coeff == 0:
				continue

			if power == 0:
				monomial = ""
			elif power == 1:
				monomial = "z"
			else:
				monomial = f"z^{power}"

			magnitude = abs(coeff)
			if not monomial:
				body = str(magnitude)
			elif magnitude == 1:
				body = monomial
			else:
				body = f"{magnitude}*{monomial}"

			parts.append(("-" if coeff < 0 else "+", body))

		if not parts:
			return "0"

		text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
		for sign, body in parts[1:]:
			text += f" {sign} {body}"

		return text

	def __repr__(self) -> str:
		return f"CycloScalar({self.__str__()}, l={self.field.l})"


def cyclo_mul(a: CycloScalar, b: CycloScalar) -> CycloScalar:
	"""
	Multiplies two cyclotomic scalars.

	Args:
		a (CycloScalar): First factor.
		b (CycloScalar): Second factor.

	Returns:
		CycloScalar: The product reduced modulo Φ_ℓ.

	Raises:
		MismatchedRingError: If the factors come from different cyclotomic fields.
	"""

	return a * b


def row_rank(rows: Iterable[Iterable[CycloScalar]]) -> int:
	"""
	Computes the rank of a matrix over Q(ζ_ℓ) by Gaussian elimination.

	Args:
		rows (Iterable[Iterable[CycloScalar]]): The matrix rows, all of equal length.

	Returns:
		int: The rank.
	"""

	matrix = [list(row) for row in rows]
	rank = 0

	if not matrix:
		return 0

	for column in range(len(matrix[0])):
		pivot = next(
				(index for index in range(rank, len(matrix)) if not matrix[index][column].is_zero()),
				None
		)

		if pivot is None:
			continue

		matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
		inverse = matrix[rank][column].inverse()
		matrix[rank] = [value * inverse for value in matrix[rank]]

		for index in range(len(matrix)):
			if index != rank and not matrix[index][column].is_zero():
				factor = matrix[index][column]
				matrix[index] = [a - factor * b for a, b in zip(matrix[index], matrix[rank])]

		rank += 1

	return rank
