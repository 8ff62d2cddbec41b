from abc import (
	ABC,
	abstractmethod
)
from typing import (
	Literal,
	Sequence
)
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.exact_arith.rational import RatFunc
from osn_cherednik.groups.affine import AffineElement
from osn_cherednik.psph.closed_forms import closed_form_action
from osn_cherednik.psph.types import PsphGenerator
from osn_cherednik.galois.errors import UnknownAffineGeneratorError
from osn_cherednik.cherednik_rep.errors import GeneratorIndexError


AffineKind = Literal["swap", "mu", "mu_inverse", "mu_all", "mu_all_inverse"]
AFFINE_KINDS: tuple[AffineKind, ...] = ("swap", "mu", "mu_inverse", "mu_all", "mu_all_inverse")


class AffineGenerator:
	"""
	One of the generators s_{i,i+1}, μ_i^{±ℓ}, (μ_1⋯μ_n)^{±ℓ/p} of T ⋊ S_n.

	Attributes:
		kind (AffineKind): The generator family.
		i (int): Index for swap, mu and mu_inverse; 0 otherwise.
	"""

	__slots__ = ("kind", "i")

	def __init__(self, kind: AffineKind, i: int = 0):
		if kind not in AFFINE_KINDS:
			raise UnknownAffineGeneratorError(kind)

		self.kind = kind
		self.i = i

	def validate(self, n: int):
		"""
		Checks the index against the rank.

		Raises:
			GeneratorIndexError: If the index is out of range.
		"""

		if self.kind == "swap" and not 1 <= self.i < n:
			raise GeneratorIndexError(self.kind, self.i, n)

		if self.kind in ("mu", "mu_inverse") and not 1 <= self.i <= n:
			raise GeneratorIndexError(self.kind, self.i, n)

	def to_affine(self, l: int, p: int, n: int) -> AffineElement:
		"""
		Returns the group element.

		Args:
			l (int): The order ℓ.
			p (int): The divisor p.
			n (int): The rank.

		Returns:
			AffineElement: The element of T ⋊ S_n.
		"""

		self.validate(n)

		if self.kind == "swap":
			return AffineElement.swap(self.i, n)

		if self.kind == "mu":
			return AffineElement.mu(self.i, l, n)

		if self.kind == "mu_inverse":
			return AffineElement.mu(self.i, -l, n)

		if self.kind == "mu_all":
			return AffineElement.mu_all(l // p, n)

		return AffineElement.mu_all(-(l // p), n)

	def __eq__(self, other: object) -> bool:
		return isinstance(other, AffineGenerator) and (other.kind, other.i) == (self.kind, self.i)

	def __hash__(self) -> int:
		return hash((self.kind, self.i))

	def __str__(self) -> str:
		if self.kind == "swap":
			return f"s{self.i}"

		if self.kind == "mu":
			return f"mu{self.i}^l"

		if self.kind == "mu_inverse":
			return f"mu{self.i}^-l"

		if self.kind == "mu_all":
			return "mu_all^(l/p)"

		return "mu_all^-(l/p)"

	def __repr__(self) -> str:
		return f"AffineGenerator({self.__str__()})"


def all_affine_generators(n: int) -> list[AffineGenerator]:
	"""Lists s_1..s_{n-1}, μ_1^ℓ..μ_n^ℓ, μ_1^{-ℓ}..μ_n^{-ℓ} and (μ_1⋯μ_n)^{±ℓ/p}."""

	generators = [AffineGenerator("swap", i) for i in range(1, n)]
	generators += [AffineGenerator("mu", i) for i in range(1, n + 1)]
	generators += [AffineGenerator("mu_inverse", i) for i in range(1, n + 1)]
	generators += [AffineGenerator("mu_all"), AffineGenerator("mu_all_inverse")]

	return generators


class OperatorExpression(ABC):
	"""
	A formal expression in the closed-form operators of partially spherical generators.

	Subclasses evaluate on rational functions; `expression_to_skew` turns them into skew elements.
	"""

	@abstractmethod
	def evaluate(self, f: RatFunc, context: ParameterContext) -> RatFunc:
		"""
		Applies the operator to a rational function.

		Args:
			f (RatFunc): The argument.
			context (ParameterContext): The algebra context.

		Returns:
			RatFunc: The image.
		"""

		...

	def __repr__(self) -> str:
		return f"{type(self).__name__}({self.__str__()})"


class Identity(OperatorExpression):
	def evaluate(self, f: RatFunc, context: ParameterContext) -> RatFunc:
		return f

	def __str__(self) -> str:
		return "1"


class GeneratorNode(OperatorExpression):
	"""
	The closed-form operator of one generator.

	Attributes:
		generator (PsphGenerator): The generator.
	"""

	def __init__(self, generator: PsphGenerator):
		self.generator = generator

	def evaluate(self, f: RatFunc, context: ParameterContext) -> RatFunc:
		return closed_form_action(self.generator, f, context)

	def __str__(self) -> str:
		return str(self.generator)


class Scale(OperatorExpression):
	"""
	Left multiplication of an expression by a rational function.

	Attributes:
		coefficient (RatFunc): The multiplier.
		operand (OperatorExpression): The scaled expression.
	"""

	def __init__(self, coefficient: RatFunc, operand: OperatorExpression):
		self.coefficient = coefficient
		self.operand = operand

	def evaluate(self, f: RatFunc, context: ParameterContext) -> RatFunc:
		return self.coefficient * self.operand.evaluate(f, context)

	def __str__(self) -> str:
		return f"({self.coefficient})*[{self.operand}]"


class Sum(OperatorExpression):
	"""
	A sum of expressions.

	Attributes:
		operands (tuple[OperatorExpression, ...]): The summands.
	"""

	def __init__(self, operands: Sequence[OperatorExpression]):
		self.operands = tuple(operands)

	def evaluate(self, f: RatFunc, context: ParameterContext) -> RatFunc:
		total = RatFunc.from_poly(context.ring.zero())

		for operand in self.operands:
			total = total + operand.evaluate(f, context)

		return total

	def __str__(self) -> str:
		return " + ".join(str(operand) for operand in self.operands)


class Compose(OperatorExpression):
	"""
	A composition of expressions. The first operand acts last.

	Attributes:
		operands (tuple[OperatorExpression, ...]): The factors.
	"""

	def __init__(self, operands: Sequence[OperatorExpression]):
		self.operands = tuple(operands)

	def evaluate(self, f: RatFunc, context: ParameterContext) -> RatFunc:
		for operand in reversed(self.operands):
			f = operand.evaluate(f, context)

		return f

	def __str__(self) -> str:
		return " o ".join(f"[{operand}]" for operand in self.operands) if self.operands else "1"
