import functools
from fractions import Fraction
from sympy import Symbol
from typing import (
	Iterable,
	Mapping,
	Optional,
	Sequence,
	Union
)
from osn_cherednik.exact_arith.cyclotomic import (
	CycloScalar,
	CyclotomicField
)
from osn_cherednik.exact_arith.errors import (
	MismatchedRingError,
	NonDivisibleError
)


Exponent = tuple[int, ...]
Coefficient = Union[int, Fraction, CycloScalar]


def grlex_key(exponent: Exponent) -> tuple[int, Exponent]:
	"""
	Sort key of the graded lexicographic order.

	Variables are compared in ring order, so the first variable of the ring is the largest.

	Args:
		exponent (Exponent): An exponent vector.

	Returns:
		tuple[int, Exponent]: Total degree followed by the vector itself.
	"""

	return sum(exponent), exponent


class PolynomialRing:
	"""
	A commutative polynomial ring over Q(ζ_ℓ) with named variables.

	The order of `names` is the variable order of the graded lexicographic monomial order.

	Attributes:
		names (tuple[str, ...]): Variable names.
		field (CyclotomicField): The coefficient field.
	"""

	def __init__(self, names: Sequence[str], field: CyclotomicField):
		"""
		Initializes the ring.

		Args:
			names (Sequence[str]): Variable names, largest first.
			field (CyclotomicField): The coefficient field.

		Raises:
			ValueError: If the names are not unique.
		"""

		if len(set(names)) != len(names):
			raise ValueError(f"Variable names must be unique: {names}.")

		self.names = tuple(names)
		self.field = field
		self._positions = {name: index for index, name in enumerate(self.names)}

	def __eq__(self, other: object) -> bool:
		return (
				isinstance(other, PolynomialRing)
				and other.names == self.names
				and other.field == self.field
		)

	def __hash__(self) -> int:
		return hash((self.names, self.field.l))

	def __str__(self) -> str:
		return f"{self.field}[{', '.join(self.names)}]"

	def __repr__(self) -> str:
		return self.__str__()

	@property
	def nvars(self) -> int:
		return len(self.names)

	@functools.cached_property
	def symbols(self) -> tuple[Symbol, ...]:
		return tuple(Symbol(name) for name in self.names)

	def position(self, name: str) -> int:
		return self._positions[name]

	def has_variable(self, name: str) -> bool:
		return name in self._positions

	def scalar(self, value: Coefficient) -> CycloScalar:
		if isinstance(value, CycloScalar):
			if value.field.l != self.field.l:
				raise MismatchedRingError(str(value.field), str(self.field))

			return value

		return self.field.rational(value)

	def zero(self) -> "ParamPoly":
		return ParamPoly(self, {})

	def one(self) -> "ParamPoly":
		return self.constant(1)

	def constant(self, value: Coefficient) -> "ParamPoly":
		return self.monomial((0,) * self.nvars, value)

	def monomial(self, exponent: Exponent, coeff: Coefficient = 1) -> "ParamPoly":
		scalar = self.scalar(coeff)

		if scalar.is_zero():
			return self.zero()

		return ParamPoly(self, {tuple(exponent): scalar})

	def variable(self, index: int) -> "ParamPoly":
		exponent = [0] * self.nvars
		exponent[index] = 1

		return self.monomial(tuple(exponent))

	def variable_by_name(self, name: str) -> "ParamPoly":
		return self.variable(self.position(name))


class ParamPoly:
	"""
	An immutable sparse polynomial over Q(ζ_ℓ).

	Terms map exponent vectors to nonzero `CycloScalar` coefficients. Instances are
	never mutated after construction, so they can be shared across threads.

	Attributes:
		ring (PolynomialRing): The ring of the polynomial.
		terms (dict[Exponent, CycloScalar]): Nonzero terms.
	"""

	__slots__ = ("ring", "terms", "_hash")

	def __init__(self, ring: PolynomialRing, terms: Mapping[Exponent, CycloScalar]):
		self.ring = ring
		self.terms = {exponent: coeff for exponent, coeff in terms.items() if not coeff.is_zero()}
		self._hash: Optional[int] = None

	@classmethod
	def _trusted(cls, ring: PolynomialRing, terms: dict[Exponent, CycloScalar]) -> "ParamPoly":
		poly = cls.__new__(cls)
		poly.ring = ring
		poly.terms = terms
		poly._hash = None

		return poly

	def _coerce(self, other: Union[Coefficient, "ParamPoly"]) -> "ParamPoly":
		if isinstance(other, ParamPoly):
			if other.ring is not self.ring and other.ring != self.ring:
				raise MismatchedRingError(str(self.ring), str(other.ring))

			return other

		return self.ring.constant(other)

	def __add__(self, other: Union[Coefficient, "ParamPoly"]) -> "ParamPoly":
		other = self._coerce(other)

		if not other.terms:
			return self

		if not self.terms:
			return other

		terms = dict(self.terms)
		for exponent, coeff in other.terms.items():
			if exponent in terms:
				combined = terms[exponent] + coeff

				if combined.is_zero():
					del terms[exponent]
				else:
					terms[exponent] = combined
			else:
				terms[exponent] = coeff

		return ParamPoly._trusted(self.ring, terms)

	def __radd__(self, other: Coefficient) -> "ParamPoly":
		return self.__add__(other)

	def __neg__(self) -> "ParamPoly":
		return ParamPoly._trusted(self.ring, {exponent: -coeff for exponent, coeff in self.terms.items()})

	def __sub__(self, other: Union[Coefficient, "ParamPoly"]) -> "ParamPoly":
		return self.__add__(-self._coerce(other))

	def __rsub__(self, other: Coefficient) -> "ParamPoly":
		return self._coerce(other).__sub__(self)

	def scale(self, factor: Coefficient) -> "ParamPoly":
		"""
		Multiplies every coefficient by a scalar.

		Args:
			factor (Coefficient): The scalar.

		Returns:
			ParamPoly: The scaled polynomial.
		"""

		scalar = self.ring.scalar(factor)

		if scalar.is_zero():
			return self.ring.zero()

		if scalar == 1:
			return self

		return ParamPoly._trusted(self.ring, {exponent: coeff * scalar for exponent, coeff in self.terms.items()})

	def __mul__(self, other: Union[Coefficient, "ParamPoly"]) -> "ParamPoly":
		if not isinstance(other, ParamPoly):
			return self.scale(other)

		other = self._coerce(other)

		if not self.terms or not other.terms:
			return self.ring.zero()

		terms: dict[Exponent, CycloScalar] = {}
		for left_exponent, left_coeff in self.terms.items():
			for right_exponent, right_coeff in other.terms.items():
				exponent = tuple(a + b for a, b in zip(left_exponent, right_exponent))
				product = left_coeff * right_coeff

				if exponent in terms:
					terms[exponent] = terms[exponent] + product
				else:
					terms[exponent] = product

		return ParamPoly(self.ring, terms)

	def __rmul__(self, other: Coefficient) -> "ParamPoly":
		return self.scale(other)

	def __pow__(self, exponent: int) -> "ParamPoly":
		if exponent < 0:
			raise ValueError("Polynomials can't be raised to negative powers.")

		result = self.ring.one()
		base = self

		while exponent:
			if exponent & 1:
				result = result * base

			base = base * base
			exponent >>= 1

		return result

	def __eq__(self, other: object) -> bool:
		if isinstance(other, (int, Fraction, CycloScalar)):
			return self == self.ring.constant(other)

		return isinstance(other, ParamPoly) and other.ring == self.ring and other.terms == self.terms

	def __hash__(self) -> int:
		if self._hash is None:
			self._hash = hash(frozenset(self.terms.items()))

		return self._hash

	def is_zero(self) -> bool:
		return not self.terms

	def is_constant(self) -> bool:
		zero = (0,) * self.ring.nvars

		return not self.terms or (len(self.terms) == 1 and zero in self.terms)

	def constant_value(self) -> CycloScalar:
		return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero())

	def is_rational(self) -> bool:
		return all(coeff.is_rational() for coeff in self.terms.values())

	def degree(self) -> int:
		return max((sum(exponent) for exponent in self.terms), default=-1)

	def degree_in(self, positions: Iterable[int]) -> int:
		"""Total degree in the selected variables, -1 for the zero polynomial."""

		positions = tuple(positions)

		return max(
				(sum(exponent[position] for position in positions) for exponent in self.terms),
				default=-1
		)

	def involves_only(self, positions: Iterable[int]) -> bool:
		allowed = set(positions)

		return all(
				all(power == 0 or index in allowed for index, power in enumerate(exponent))
				for exponent in self.terms
		)

	def leading_term(self) -> tuple[Exponent, CycloScalar]:
		"""
		Returns the leading term under the graded lexicographic order.

		Raises:
			ValueError: For the zero polynomial.
		"""

		if not self.terms:
			raise ValueError("The zero polynomial has no leading term.")

		exponent = max(self.terms, key=grlex_key)

		return exponent, self.terms[exponent]

	def sorted_terms(self) -> list[tuple[Exponent, CycloScalar]]:
		return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

	def rename_variables(self, mapping: Mapping[int, int]) -> "ParamPoly":
		"""
		Applies a permutation of variables.

		Args:
			mapping (Mapping[int, int]): Sends variable position i to position mapping[i].
				Positions absent from the mapping are fixed.

		Returns:
			ParamPoly: The renamed polynomial.
		"""

		terms = {}
		for exponent, coeff in self.terms.items():
			renamed = list(exponent)

			for source in mapping:
				renamed[source] = 0

			for source, target in mapping.items():
				renamed[target] += exponent[source]

			key = tuple(renamed)
			terms[key] = terms[key] + coeff if key in terms else coeff

		return ParamPoly(self.ring, terms)

	def substitute(self, images: Mapping[int, "ParamPoly"]) -> "ParamPoly":
		"""
		Substitutes polynomials for variables. This is a ring homomorphism.

		Args:
			images (Mapping[int, ParamPoly]): Image of each substituted variable position.

		Returns:
			ParamPoly: The result of the substitution.
		"""

		if not images or not self.terms:
			return self

		power_cache: dict[tuple[int, int], ParamPoly] = {}

		def power(position: int, exponent: int) -> ParamPoly:
			key = (position, exponent)

			if key not in power_cache:
				power_cache[key] = images[position] ** exponent

			return power_cache[key]

		result: dict[Exponent, CycloScalar] = {}
		for exponent, coeff in self.terms.items():
			kept = tuple(0 if index in images else power_ for index, power_ in enumerate(exponent))
			piece = self.ring.monomial(kept, coeff)

			for position in images:
				if exponent[position]:
					piece = piece * power(position, exponent[position])

			for piece_exponent, piece_coeff in piece.terms.items():
				if piece_exponent in result:
					result[piece_exponent] = result[piece_exponent] + piece_coeff
				else:
					result[piece_exponent] = piece_coeff

		return ParamPoly(self.ring, result)

	def exact_divide(self, divisor: "ParamPoly") -> "ParamPoly":
		"""
		Divides by a polynomial that is known to divide this one.

		Runs multivariate division by the leading term of the divisor. If the leading
		term of some remainder is not divisible by the divisor's leading term, the divisor
		cannot divide the dividend, since leading terms of products are products of leading terms.

		Args:
			divisor (ParamPoly): The divisor.

		Returns:
			ParamPoly: The exact quotient.

		Raises:
			NonDivisibleError: If the division leaves a remainder.
			ZeroDivisionError: If the divisor is zero.
		"""

		divisor = self._coerce(divisor)

		if divisor.is_zero():
			raise ZeroDivisionError("Polynomial division by zero.")

		if not self.terms:
			return self

		lead_exponent, lead_coeff = divisor.leading_term()
		lead_inverse = lead_coeff.inverse()

		if len(divisor.terms) == 1:
			quotient = {}
			for exponent, coeff in self.terms.items():
				shifted = tuple(a - b for a, b in zip(exponent, lead_exponent))

				if min(shifted) < 0:
					raise NonDivisibleError(str(self), str(divisor))

				quotient[shifted] = coeff * lead_inverse

			return ParamPoly._trusted(self.ring, quotient)

		remainder = dict(self.terms)
		quotient: dict[Exponent, CycloScalar] = {}

		while remainder:
			exponent = max(remainder, key=grlex_key)
			shifted = tuple(a - b for a, b in zip(exponent, lead_exponent))

			if min(shifted) < 0:
				raise NonDivisibleError(str(self), str(divisor))

			factor = remainder[exponent] * lead_inverse
			quotient[shifted] = factor

			for divisor_exponent, divisor_coeff in divisor.terms.items():
				target = tuple(a + b for a, b in zip(divisor_exponent, shifted))
				updated = remainder.get(target, None)
				subtracted = divisor_coeff * factor

				updated = -subtracted if updated is None else updated - subtracted

				if updated.is_zero():
					remainder.pop(target, None)
				else:
					remainder[target] = updated

		return ParamPoly(self.ring, quotient)

	def __str__(self) -> str:
		return format_terms(
				[(dict(zip(self.ring.names, exponent)), coeff) for exponent, coeff in self.sorted_terms()]
		)

	def __repr__(self) -> str:
		return f"ParamPoly({self.__str__()})"


def format_monomial(powers: Mapping[str, int]) -> str:
	"""
	Prints a monomial as `*`-joined variable powers, in the given variable order.

	Args:
		powers (Mapping[str, int]): Variable name to exponent.

	Returns:
		str: The printed monomial, empty for the unit monomial.
	"""

	factors = []
	for name, power in powers.items():
		if power == 1:
			factors.append(name)
		elif power > 1:
			factors.append(f"{name}^{power}")

	return "*".join(factors)


def format_terms(terms: Sequence[tuple[Mapping[str, int], CycloScalar]]) -> str:
	"""
	Prints an already ordered list of terms as a signed sum.

	Args:
		terms (Sequence[tuple[Mapping[str, int], CycloScalar]]): Monomials with their coefficients.

	Returns:
		str: The printed sum, "0" for an empty list.
	"""

	pieces = []
	for powers, coeff in terms:
		monomial = format_monomial(powers)

		if coeff.is_single_term():
			negative = any(c < 0 for c in coeff.coeffs)
			magnitude = -coeff if negative else coeff
			coeff_text = str(magnitude)

			if not monomial:
				body = coeff_text
			elif magnitude == 1:
				body = monomial
			else:
				body = f"{coeff_text}*{monomial}"
		else:
			negative = False
			body = f"({coeff})" + (f"*{monomial}" if monomial else "")

		pieces.append(("-" if negative else "+", body))

	if not pieces:
		return "0"

	text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
	for sign, body in pieces[1:]:
		text += f" {sign} {body}"

	return text


def exact_divide(f: ParamPoly, g: ParamPoly) -> ParamPoly:
	"""
	Returns the exact quotient f / g.

	Args:
		f (ParamPoly): The dividend.
		g (ParamPoly): A divisor of `f`.

	Returns:
		ParamPoly: The quotient q with q·g = f.

	Raises:
		NonDivisibleError: If g does not divide f.
	"""

	return f.exact_divide(g)
