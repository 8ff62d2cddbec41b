from typing import Sequence
from osn_cherednik.exact_arith.rational import RatFunc
from osn_cherednik.exact_arith.polynomials import ParamPoly
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.groups.errors import MismatchedGroupError
from osn_cherednik.groups.gpn import (
	Permutation,
	compose_permutations,
	identity_permutation,
	invert_permutation,
	permute_vector,
	transposition
)


class AffineElement:
	"""
	An element μ^shift·w of the extended affine group Z^n ⋊ S_n.

	It acts on C(U) as the ring automorphism U_j ↦ U_{w(j)} + shift_{w(j)}·ħ.
	Translations are stored as integers; ħ only enters at action time.

	Attributes:
		shift (tuple[int, ...]): Translation in units of ħ.
		perm (Permutation): The permutation part.
	"""

	__slots__ = ("shift", "perm")

	def __init__(self, shift: Sequence[int], perm: Sequence[int]):
		if sorted(perm) != list(range(1, len(shift) + 1)):
			raise ValueError(f"{perm} is not a permutation of 1..{len(shift)}.")

		self.shift = tuple(shift)
		self.perm = tuple(perm)

	@property
	def n(self) -> int:
		return len(self.shift)

	@classmethod
	def identity(cls, n: int) -> "AffineElement":
		return cls((0,) * n, identity_permutation(n))

	@classmethod
	def translation(cls, shift: Sequence[int]) -> "AffineElement":
		"""The translation U_a ↦ U_a + shift[a-1]·ħ."""

		return cls(shift, identity_permutation(len(shift)))

	@classmethod
	def mu(cls, i: int, power: int, n: int) -> "AffineElement":
		"""The translation μ_i^power."""

		shift = [0] * n
		shift[i - 1] = power

		return cls.translation(shift)

	@classmethod
	def mu_all(cls, power: int, n: int) -> "AffineElement":
		"""The translation (μ_1⋯μ_n)^power."""

		return cls.translation([power] * n)

	@classmethod
	def swap(cls, i: int, n: int) -> "AffineElement":
		"""The transposition s_{i,i+1}."""

		return cls((0,) * n, transposition(i, i + 1, n))

	@classmethod
	def permutation(cls, perm: Permutation) -> "AffineElement":
		"""The pure permutation U_a ↦ U_{perm(a)}."""

		return cls((0,) * len(perm), perm)

	def __mul__(self, other: "AffineElement") -> "AffineElement":
		"""
		Composes as (a, w₁)(b, w₂) = (a + w₁·b, w₁w₂), which matches composition of the actions.
		"""

		if other.n != self.n:
			raise MismatchedGroupError(f"Z^{self.n} x S_{self.n}", f"Z^{other.n} x S_{other.n}")

		moved = permute_vector(self.perm, other.shift)

		return AffineElement(
				[a + b for a, b in zip(self.shift, moved)],
				compose_permutations(self.perm, other.perm)
		)

	def inverse(self) -> "AffineElement":
		inverse_perm = invert_permutation(self.perm)

		return AffineElement([-b for b in permute_vector(inverse_perm, self.shift)], inverse_perm)

	def __pow__(self, exponent: int) -> "AffineElement":
		result = AffineElement.identity(self.n)
		base = self if exponent >= 0 else self.inverse()

		for _ in range(abs(exponent)):
			result = result * base

		return result

	def is_translation(self) -> bool:
		return self.perm == identity_permutation(self.n)

	def images(self, context: ParameterContext) -> dict[int, ParamPoly]:
		"""
		Images of the variables under the automorphism, keyed by ring position.

		Args:
			context (ParameterContext): Supplies the ring and ħ.

		Returns:
			dict[int, ParamPoly]: U_j ↦ U_{w(j)} + shift_{w(j)}·ħ for every moved U_j.
		"""

		images = {}

		for j in range(1, self.n + 1):
			target = self.perm[j - 1]
			shift = self.shift[target - 1]

			if target != j or shift != 0:
				image = context.ring.variable(context.u_position(target))
				images[context.u_position(j)] = image + context.hbar.scale(shift) if shift else image

		return images

	def __eq__(self, other: object) -> bool:
		return isinstance(other, AffineElement) and other.shift == self.shift and other.perm == self.perm

	def __hash__(self) -> int:
		return hash((self.shift, self.perm))

	def sort_key(self) -> tuple:
		return self.perm, self.shift

	def __str__(self) -> str:
		factors = [
			f"mu{i}^{s}" if s != 1 else f"mu{i}"
			for i, s in enumerate(self.shift, start=1)
			if s != 0
		]

		if not self.is_translation():
			factors.append(f"w{list(self.perm)}")

		return "*".join(factors) if factors else "1"

	def __repr__(self) -> str:
		return f"AffineElement({self.__str__()})"


def affine_act(g: AffineElement, f: RatFunc, context: ParameterContext) -> RatFunc:
	"""
	Applies the automorphism of an affine group element to a rational function.

	Args:
		g (AffineElement): The group element.
		f (RatFunc): A rational function in U_1, …, U_n and the parameters.
		context (ParameterContext): Supplies ħ and the variable positions.

	Returns:
		RatFunc: f(U_{w(1)} + shift_{w(1)}ħ, …, U_{w(n)} + shift_{w(n)}ħ).
	"""

	if g.n != context.n:
		raise MismatchedGroupError(f"S_{g.n}", f"S_{context.n}")

	images = g.images(context)

	if not images:
		return f

	return f.apply_automorphism(images)


def lattice_member(v: Sequence[int], l: int, p: int, n: int) -> bool:
	"""
	Decides membership in the translation lattice T = ⟨ℓ·e_i, (ℓ/p)·(1, …, 1)⟩.

	Args:
		v (Sequence[int]): The shift vector.
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Returns:
		bool: True iff all entries are congruent modulo ℓ and divisible by ℓ/p.
	"""

	if len(v) != n:
		raise ValueError(f"Vector {tuple(v)} must have length {n}.")

	period = l // p

	return all((entry - v[0]) % l == 0 for entry in v) and v[0] % period == 0


def lattice_member_bruteforce(v: Sequence[int], l: int, p: int, n: int, box: int) -> bool:
	"""
	Decides lattice membership by enumerating lattice points reachable from 0 inside a box.

	Every lattice point with entries in [-box, box] is reachable through points with entries
	in [-box - ℓ, box + ℓ], so the search runs in that larger box.

	Args:
		v (Sequence[int]): The shift vector.
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		box (int): Bound on |v_i| that the caller guarantees.

	Returns:
		bool: Whether v was reached.
	"""

	bound = box + l
	generators = [tuple(l if j == i else 0 for j in range(n)) for i in range(n)]
	generators.append(tuple([l // p] * n))
	generators += [tuple(-x for x in generator) for generator in list(generators)]

	target = tuple(v)
	seen = {(0,) * n}
	frontier = [(0,) * n]

	while frontier:
		next_frontier = []

		for point in frontier:
			for generator in generators:
				candidate = tuple(a + b for a, b in zip(point, generator))

				if candidate not in seen and all(abs(x) <= bound for x in candidate):
					seen.add(candidate)
					next_frontier.append(candidate)

		frontier = next_frontier

	return target in seen


def lattice_degree(v: Sequence[int], l: int, p: int) -> int:
	"""
	Returns the Z/p-degree of a lattice vector: the number of (μ_1⋯μ_n)^{ℓ/p} factors modulo p.

	Args:
		v (Sequence[int]): A vector of the translation lattice.
		l (int): The order ℓ.
		p (int): The divisor p.

	Returns:
		int: (v_1 / (ℓ/p)) mod p.
	"""

	return (v[0] // (l // p)) % p
