import itertools
from typing import Iterator, Sequence
from osn_cherednik.exact_arith.cyclotomic import (
	CycloScalar,
	get_cyclotomic_field,
	row_rank
)
from osn_cherednik.groups.errors import (
	InvalidGroupParametersError,
	MismatchedGroupError
)


Permutation = tuple[int, ...]


def identity_permutation(n: int) -> Permutation:
	return tuple(range(1, n + 1))


def compose_permutations(w: Permutation, v: Permutation) -> Permutation:
	"""
	Returns w∘v, i.e. j ↦ w(v(j)). Permutations are one-line tuples with w[j-1] = w(j).
	"""

	return tuple(w[v[j] - 1] for j in range(len(v)))


def invert_permutation(w: Permutation) -> Permutation:
	"""Returns the inverse of a one-line permutation."""

	inverse = [0] * len(w)

	for j, image in enumerate(w, start=1):
		inverse[image - 1] = j

	return tuple(inverse)


def transposition(i: int, j: int, n: int) -> Permutation:
	"""Returns the transposition (i j) of {1, …, n} in one-line form."""

	values = list(range(1, n + 1))
	values[i - 1], values[j - 1] = j, i

	return tuple(values)


def permute_vector(w: Permutation, vector: Sequence[int]) -> tuple[int, ...]:
	"""
	Moves the entry at position j to position w(j), so (w·b)_{w(j)} = b_j.
	"""

	result = [0] * len(vector)

	for j, value in enumerate(vector):
		result[w[j] - 1] = value

	return tuple(result)


def adjacent_word(w: Permutation) -> list[int]:
	"""
	Writes a permutation as a product of adjacent transpositions.

	Args:
		w (Permutation): The permutation.

	Returns:
		list[int]: Indices [i_1, …, i_k] with w = s_{i_1}∘…∘s_{i_k}, s_i = (i, i+1), of minimal length.
	"""

	word = []
	current = tuple(w)

	while True:
		descent = next((i for i in range(1, len(current)) if current[i - 1] > current[i]), None)

		if descent is None:
			break

		current = compose_permutations(current, transposition(descent, descent + 1, len(current)))
		word.insert(0, descent)

	return word


def validate_group_parameters(l: int, p: int, n: int):
	"""
	Checks that (ℓ, p, n) names a group G(ℓ,p,n).

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Raises:
		InvalidGroupParametersError: If a value is not positive or p does not divide ℓ.
	"""

	if l < 1 or p < 1 or n < 1 or l % p != 0:
		raise InvalidGroupParametersError(l, p, n)


class GPNElement:
	"""
	An element t^texp·w of G(ℓ,1,n), stored as a diagonal exponent vector and a permutation.

	The element is the monomial matrix sending e_j to ζ^{texp[w(j)]} e_{w(j)}. It lies in
	G(ℓ,p,n) iff Σ texp ≡ 0 (mod p).

	Attributes:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		texp (tuple[int, ...]): Exponents of t_1, …, t_n modulo ℓ.
		perm (Permutation): The permutation part.
	"""

	__slots__ = ("l", "p", "n", "texp", "perm")

	def __init__(self, l: int, p: int, texp: Sequence[int], perm: Sequence[int]):
		"""
		Initializes the element.

		Args:
			l (int): The order ℓ.
			p (int): The divisor p.
			texp (Sequence[int]): Exponents of t_1, …, t_n, reduced modulo ℓ.
			perm (Sequence[int]): One-line permutation of 1..n.

		Raises:
			InvalidGroupParametersError: For inconsistent sizes.
			ValueError: If `perm` is not a permutation.
		"""

		validate_group_parameters(l, p, len(texp))

		if sorted(perm) != list(range(1, len(texp) + 1)):
			raise ValueError(f"{perm} is not a permutation of 1..{len(texp)}.")

		self.l = l
		self.p = p
		self.n = len(texp)
		self.texp = tuple(e % l for e in texp)
		self.perm = tuple(perm)

	@classmethod
	def identity(cls, l: int, p: int, n: int) -> "GPNElement":
		return cls(l, p, (0,) * n, identity_permutation(n))

	@classmethod
	def diagonal(cls, l: int, p: int, texp: Sequence[int]) -> "GPNElement":
		return cls(l, p, texp, identity_permutation(len(texp)))

	@property
	def group(self) -> tuple[int, int, int]:
		return self.l, self.p, self.n

	def is_member(self) -> bool:
		"""Whether the element lies in G(ℓ,p,n)."""

		return sum(self.texp) % self.p == 0

	def __mul__(self, other: "GPNElement") -> "GPNElement":
		return gpn_mul(self, other)

	def inverse(self) -> "GPNElement":
		"""Returns the inverse element, (t^a·w)^{-1} = t^{-w^{-1}·a}·w^{-1}."""

		inverse_perm = invert_permutation(self.perm)
		moved = permute_vector(inverse_perm, self.texp)

		return GPNElement(self.l, self.p, [-e for e in moved], inverse_perm)

	def conjugate(self, by: "GPNElement") -> "GPNElement":
		return by * self * by.inverse()

	def matrix(self) -> list[list[CycloScalar]]:
		"""
		Returns the monomial matrix of the element.

		Column j has the single nonzero entry ζ^{texp[w(j)]} in row w(j).

		Returns:
			list[list[CycloScalar]]: The n×n matrix, row by row.
		"""

		field = get_cyclotomic_field(self.l)
		rows = [[field.zero() for _ in range(self.n)] for _ in range(self.n)]

		for j in range(1, self.n + 1):
			image = self.perm[j - 1]
			rows[image - 1][j - 1] = field.zeta(self.texp[image - 1])

		return rows

	def is_reflection(self) -> bool:
		"""Whether the element fixes a hyperplane pointwise, i.e. g - 1 has rank one."""

		field = get_cyclotomic_field(self.l)
		shifted = [
			[value - (field.one() if i == j else field.zero()) for j, value in enumerate(row)]
			for i, row in enumerate(self.matrix())
		]

		return row_rank(shifted) == 1

	def __eq__(self, other: object) -> bool:
		return (
				isinstance(other, GPNElement)
				and other.group == self.group
				and other.texp == self.texp
				and other.perm == self.perm
		)

	def __hash__(self) -> int:
		return hash((self.group, self.texp, self.perm))

	def __str__(self) -> str:
		factors = [
			f"t{i}" if e == 1 else f"t{i}^{e}"
			for i, e in enumerate(self.texp, start=1)
			if e != 0
		]

		if self.perm != identity_permutation(self.n):
			factors.append(f"w{list(self.perm)}")

		return "*".join(factors) if factors else "1"

	def __repr__(self) -> str:
		return f"GPNElement({self.__str__()}, l={self.l}, p={self.p})"


def gpn_mul(g: GPNElement, h: GPNElement) -> GPNElement:
	"""
	Multiplies two elements by t^a w · t^b v = t^{a + w(b)} wv.

	Args:
		g (GPNElement): Left factor.
		h (GPNElement): Right factor.

	Returns:
		GPNElement: The product.

	Raises:
		MismatchedGroupError: If the factors belong to different groups.
	"""

	if g.group != h.group:
		raise MismatchedGroupError(f"G{g.group}", f"G{h.group}")

	moved = permute_vector(g.perm, h.texp)

	return GPNElement(
			g.l,
			g.p,
			[a + b for a, b in zip(g.texp, moved)],
			compose_permutations(g.perm, h.perm)
	)


def enumerate_group(l: int, p: int, n: int) -> Iterator[GPNElement]:
	"""
	Yields every element of G(ℓ,p,n) in a fixed order.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Returns:
		Iterator[GPNElement]: The |G(ℓ,p,n)| = ℓ^n n!/p elements.
	"""

	validate_group_parameters(l, p, n)

	for perm in itertools.permutations(range(1, n + 1)):
		for texp in itertools.product(range(l), repeat=n):
			if sum(texp) % p == 0:
				yield GPNElement(l, p, texp, perm)


def enumerate_diagonal_subgroup(l: int, p: int, n: int) -> Iterator[tuple[int, ...]]:
	"""Yields the exponent vectors of the diagonal subgroup A = {t^b : Σb ≡ 0 mod p}."""

	validate_group_parameters(l, p, n)

	for texp in itertools.product(range(l), repeat=n):
		if sum(texp) % p == 0:
			yield texp


def enumerate_reflections(l: int, p: int, n: int) -> list[GPNElement]:
	"""
	Lists the reflections of G(ℓ,p,n).

	These are t_i^k t_j^{-k}(i,j) for i < j and 0 ≤ k < ℓ, and t_i^{kp} for 1 ≤ k < ℓ/p.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Returns:
		list[GPNElement]: n(n-1)/2·ℓ + n(ℓ/p - 1) distinct reflections.
	"""

	validate_group_parameters(l, p, n)

	reflections = []

	for i in range(1, n + 1):
		for j in range(i + 1, n + 1):
			for k in range(l):
				texp = [0] * n
				texp[i - 1] = k
				texp[j - 1] = -k
				reflections.append(GPNElement(l, p, texp, transposition(i, j, n)))

	for i in range(1, n + 1):
		for k in range(1, l // p):
			texp = [0] * n
			texp[i - 1] = k * p
			reflections.append(GPNElement.diagonal(l, p, texp))

	return reflections
