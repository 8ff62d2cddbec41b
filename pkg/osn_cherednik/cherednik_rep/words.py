from typing import (
	Iterable,
	Literal,
	Optional
)
from osn_cherednik.cherednik_rep.errors import GeneratorIndexError
from osn_cherednik.cherednik_rep.types import (
	Generator,
	SIGMA,
	Swap,
	TAU,
	Word
)


def descending_cycle(a: int, b: int) -> Word:
	"""
	Expands the cycle (a, a-1, …, b) for a ≥ b as Swap(a-1)·…·Swap(b) in word order.

	Args:
		a (int): The first entry.
		b (int): The last entry.

	Returns:
		Word: The adjacent transpositions, empty when a ≤ b.
	"""

	return tuple(Swap(index) for index in range(a - 1, b - 1, -1))


def ascending_cycle(b: int, a: int) -> Word:
	"""
	Expands the cycle (b, b+1, …, a) for b ≤ a as Swap(b)·…·Swap(a-1) in word order.

	Args:
		b (int): The first entry.
		a (int): The last entry.

	Returns:
		Word: The adjacent transpositions, empty when b ≥ a.
	"""

	return tuple(Swap(index) for index in range(b, a))


def standard_gen_word(kind: Literal["x", "y"], i: int, n: int) -> Word:
	"""
	Writes a standard generator as a word in the alternate generators.

	x_i = (i, …, 1)·σ·(n, …, i) and y_i = (i, …, n)·τ·(1, …, i).

	Args:
		kind (Literal["x", "y"]): Which generator.
		i (int): The index, 1 ≤ i ≤ n.
		n (int): The rank.

	Returns:
		Word: The expanded word.

	Raises:
		GeneratorIndexError: If i is out of range.
		ValueError: For an unknown kind.
	"""

	if not 1 <= i <= n:
		raise GeneratorIndexError(kind, i, n)

	if kind == "x":
		return descending_cycle(i, 1) + (SIGMA,) + descending_cycle(n, i)

	if kind == "y":
		return ascending_cycle(i, n) + (TAU,) + ascending_cycle(1, i)

	raise ValueError(f"Unknown standard generator kind: {kind}.")


def transposition_word(i: int, j: int) -> Word:
	"""
	Returns the reduced word of the transposition (i, j).

	For i < j it is s_i ⋯ s_{j-2} s_{j-1} s_{j-2} ⋯ s_i.

	Args:
		i (int): One index.
		j (int): Another index, different from i.

	Returns:
		Word: The word.
	"""

	if i == j:
		raise ValueError("A transposition needs two different indices.")

	i, j = min(i, j), max(i, j)
	up = tuple(Swap(index) for index in range(i, j - 1))

	return up + (Swap(j - 1),) + tuple(reversed(up))


def word_power(word: Iterable[Generator], exponent: int) -> Word:
	"""
	Repeats a word.

	Args:
		word (Iterable[Generator]): The word.
		exponent (int): The number of copies.

	Returns:
		Word: The concatenation of `exponent` copies.

	Raises:
		ValueError: If `exponent` is negative.
	"""

	if exponent < 0:
		raise ValueError("Words can only be raised to nonnegative powers.")

	return tuple(word) * exponent


def print_word(word: Iterable[Generator]) -> str:
	"""
	Prints a word in the expression grammar, e.g. "sig*s1*tau". The empty word prints as "1".
	"""

	return "*".join(str(generator) for generator in word) or "1"


def word_winding_degree(word: Iterable[Generator], l: int, p: int, n: int) -> Optional[int]:
	"""
	Computes the Z/p-degree of a word by following its strands around the cylinder.

	The word is read in action order, rightmost generator first. σ carries the strand at
	position n to position 1 and winds it once forward, τ carries the strand at position 1
	to position n and winds it once backward, and Swap(i) exchanges positions i and i+1.
	T and U generators do not move strands.

	Args:
		word (Iterable[Generator]): The word.
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Returns:
		Optional[int]: The common value of winding/(ℓ/p) mod p over all strands, or None when
			some winding is not a multiple of ℓ/p or the strands disagree.
	"""

	positions = list(range(n))
	windings = [0] * n

	for generator in reversed(tuple(word)):
		if generator.kind == "Sigma":
			windings[positions[-1]] += 1
			positions = [positions[-1]] + positions[:-1]
		elif generator.kind == "Tau":
			windings[positions[0]] -= 1
			positions = positions[1:] + [positions[0]]
		elif generator.kind == "Swap":
			i = generator.index
			positions[i - 1], positions[i] = positions[i], positions[i - 1]

	period = l // p

	if any(winding % period for winding in windings):
		return None

	degrees = {(winding // period) % p for winding in windings}

	return degrees.pop() if len(degrees) == 1 else None
