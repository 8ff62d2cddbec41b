from typing import Literal
from osn_cherednik.cherednik_rep.errors import GeneratorIndexError


PsphKind = Literal["UGen", "SwapGen", "XSigma", "YTau", "SigmaPower", "TauPower", "Mixed"]


class PsphGenerator:
	"""
	A distinguished generator of the partially spherical subalgebra e'H e'.

	Attributes:
		kind (PsphKind): The generator family.
		i (int): Index for UGen, SwapGen and Mixed; 0 otherwise.
		k (int): Degree parameter of Mixed; 0 otherwise.
	"""

	__slots__ = ("kind", "i", "k")

	def __init__(self, kind: PsphKind, i: int = 0, k: int = 0):
		self.kind = kind
		self.i = i
		self.k = k

	def validate(self, l: int, p: int, n: int):
		"""
		Checks the indices against (ℓ, p, n).

		Raises:
			GeneratorIndexError: If an index is out of range.
		"""

		if self.kind == "UGen" and not 1 <= self.i <= n:
			raise GeneratorIndexError(self.kind, self.i, n)

		if self.kind == "SwapGen" and not 1 <= self.i < n:
			raise GeneratorIndexError(self.kind, self.i, n)

		if self.kind == "Mixed":
			if not 1 <= self.i < n:
				raise GeneratorIndexError(self.kind, self.i, n)

			if not 1 <= self.k < p:
				raise GeneratorIndexError(f"{self.kind} degree", self.k, n)

	def __eq__(self, other: object) -> bool:
		return (
				isinstance(other, PsphGenerator)
				and (other.kind, other.i, other.k) == (self.kind, self.i, self.k)
		)

	def __hash__(self) -> int:
		return hash((self.kind, self.i, self.k))

	def __str__(self) -> str:
		if self.kind in ("UGen", "SwapGen"):
			return f"{self.kind}({self.i})"

		if self.kind == "Mixed":
			return f"Mixed({self.i},{self.k})"

		return self.kind

	def __repr__(self) -> str:
		return f"PsphGenerator({self.__str__()})"


def UGen(i: int) -> PsphGenerator:
	return PsphGenerator("UGen", i)


def SwapGen(i: int) -> PsphGenerator:
	return PsphGenerator("SwapGen", i)


def Mixed(i: int, k: int) -> PsphGenerator:
	return PsphGenerator("Mixed", i, k)


XSIGMA = PsphGenerator("XSigma")
YTAU = PsphGenerator("YTau")
SIGMA_POWER = PsphGenerator("SigmaPower")
TAU_POWER = PsphGenerator("TauPower")


def all_generators(l: int, p: int, n: int) -> list[PsphGenerator]:
	"""
	Lists every distinguished generator for G(ℓ,p,n).

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Returns:
		list[PsphGenerator]: UGen(1..n), SwapGen(1..n-1), XSigma, YTau, SigmaPower, TauPower and
			Mixed(i, k) for 1 ≤ i < n, 1 ≤ k < p.
	"""

	generators = [UGen(i) for i in range(1, n + 1)]
	generators += [SwapGen(i) for i in range(1, n)]
	generators += [XSIGMA, YTAU, SIGMA_POWER, TAU_POWER]
	generators += [Mixed(i, k) for i in range(1, n) for k in range(1, p)]

	return generators
