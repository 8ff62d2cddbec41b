from typing import (
	Iterable,
	Literal,
	Union
)
from osn_cherednik.exact_arith.polynomials import (
	Coefficient,
	ParamPoly,
	PolynomialRing
)


GeneratorKind = Literal["T", "U", "Swap", "Sigma", "Tau"]


class Generator:
	"""
	A generator of the alternate presentation: t_i, u_i, the transposition (i, i+1), σ or τ.

	T and U accept any integer index; indices outside 1..n are resolved through
	u_{i+n} = u_i + ħ and t_{i+n} = ζ^{-1} t_i when the generator acts.

	Attributes:
		kind (GeneratorKind): "T", "U", "Swap", "Sigma" or "Tau".
		index (int): The index, 0 for σ and τ.
	"""

	__slots__ = ("kind", "index")

	def __init__(self, kind: GeneratorKind, index: int = 0):
		self.kind = kind
		self.index = index

	def __eq__(self, other: object) -> bool:
		return isinstance(other, Generator) and other.kind == self.kind and other.index == self.index

	def __hash__(self) -> int:
		return hash((self.kind, self.index))

	def __str__(self) -> str:
		if self.kind == "Sigma":
			return "sig"

		if self.kind == "Tau":
			return "tau"

		prefix = {"T": "t", "U": "u", "Swap": "s"}[self.kind]

		return f"{prefix}{self.index}"

	def __repr__(self) -> str:
		return f"Generator({self.__str__()})"


def T(i: int) -> Generator:
	return Generator("T", i)


def U(i: int) -> Generator:
	return Generator("U", i)


def Swap(i: int) -> Generator:
	return Generator("Swap", i)


SIGMA = Generator("Sigma")
TAU = Generator("Tau")

Word = tuple[Generator, ...]


class OperatorSum:
	"""
	A finite linear combination of words with central scalar coefficients.

	Coefficients are U-free polynomials in ħ, κ and the s-parameters over Q(ζ_ℓ).
	Composition concatenates words, so (A * B) acts as A after B.

	Attributes:
		ring (PolynomialRing): The coefficient ring.
		terms (dict[Word, ParamPoly]): Nonzero coefficients keyed by word.
	"""

	__slots__ = ("ring", "terms")

	def __init__(self, ring: PolynomialRing, terms: Union[dict[Word, ParamPoly], Iterable[tuple[Word, ParamPoly]]]):
		self.ring = ring
		self.terms: dict[Word, ParamPoly] = {}

		items = terms.items() if isinstance(terms, dict) else terms
		for word, coeff in items:
			word = tuple(word)
			combined = self.terms[word] + coeff if word in self.terms else coeff

			if combined.is_zero():
				self.terms.pop(word, None)
			else:
				self.terms[word] = combined

	@classmethod
	def word(cls, ring: PolynomialRing, word: Iterable[Generator], coeff: Union[Coefficient, ParamPoly] = 1) -> "OperatorSum":
		coeff = coeff if isinstance(coeff, ParamPoly) else ring.constant(coeff)

		return cls(ring, [(tuple(word), coeff)])

	@classmethod
	def scalar(cls, ring: PolynomialRing, coeff: Union[Coefficient, ParamPoly]) -> "OperatorSum":
		return cls.word(ring, (), coeff)

	@classmethod
	def zero(cls, ring: PolynomialRing) -> "OperatorSum":
		return cls(ring, [])

	def __add__(self, other: "OperatorSum") -> "OperatorSum":
		return OperatorSum(self.ring, list(self.terms.items()) + list(other.terms.items()))

	def __neg__(self) -> "OperatorSum":
		return OperatorSum(self.ring, [(word, -coeff) for word, coeff in self.terms.items()])

	def __sub__(self, other: "OperatorSum") -> "OperatorSum":
		return self + (-other)

	def scale(self, factor: Union[Coefficient, ParamPoly]) -> "OperatorSum":
		factor = factor if isinstance(factor, ParamPoly) else self.ring.constant(factor)

		return OperatorSum(self.ring, [(word, coeff * factor) for word, coeff in self.terms.items()])

	def __mul__(self, other: "OperatorSum") -> "OperatorSum":
		return OperatorSum(
				self.ring,
				[
					(left_word + right_word, left_coeff * right_coeff)
					for left_word, left_coeff in self.terms.items()
					for right_word, right_coeff in other.terms.items()
				]
		)

	def __str__(self) -> str:
		if not self.terms:
			return "0"

		pieces = []
		for word, coeff in self.terms.items():
			word_text = "*".join(str(generator) for generator in word) or "1"
			pieces.append(word_text if coeff == 1 else f"({coeff})*{word_text}")

		return " + ".join(pieces)

	def __repr__(self) -> str:
		return f"OperatorSum({self.__str__()})"
