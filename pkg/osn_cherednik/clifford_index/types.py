from fractions import Fraction
from typing import (
	Iterable,
	Literal,
	Sequence,
	Union
)
from osn_cherednik.clifford_index.errors import InvalidSegmentError


Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]
RestrictionKind = Literal["remains_simple", "splits_in_two"]


class Charge:
	"""
	An element frac + kmult·k̄ of (Q/Z) ⊕ Zk̄, where k̄ is a generic parameter.

	Attributes:
		frac (Fraction): The rational part, reduced into [0, 1).
		kmult (int): The coefficient of k̄.
	"""

	__slots__ = ("frac", "kmult")

	def __init__(self, frac: Union[int, Fraction], kmult: int = 0):
		"""
		Initializes the charge.

		Args:
			frac (Union[int, Fraction]): The rational part, reduced modulo 1.
			kmult (int): The coefficient of k̄. Defaults to 0.
		"""

		self.frac = Fraction(frac) % 1
		self.kmult = kmult

	def shift(self, amount: Union[int, Fraction]) -> "Charge":
		"""
		Adds a rational amount to the fractional part.

		Args:
			amount (Union[int, Fraction]): The shift, taken modulo 1.

		Returns:
			Charge: The shifted charge with the same k̄-coefficient.
		"""

		return Charge(self.frac + amount, self.kmult)

	def step(self, count: int = 1) -> "Charge":
		"""
		Moves the charge by `count` steps of the generic parameter.

		Args:
			count (int): Number of k̄-steps, possibly negative. Defaults to 1.

		Returns:
			Charge: The charge frac + (kmult + count)·k̄.
		"""

		return Charge(self.frac, self.kmult + count)

	def sort_key(self) -> tuple[Fraction, int]:
		return self.frac, self.kmult

	def __eq__(self, other: object) -> bool:
		return isinstance(other, Charge) and other.sort_key() == self.sort_key()

	def __hash__(self) -> int:
		return hash(self.sort_key())

	def __lt__(self, other: "Charge") -> bool:
		return self.sort_key() < other.sort_key()

	def __str__(self) -> str:
		if self.kmult == 0:
			return str(self.frac)

		k_part = "k" if abs(self.kmult) == 1 else f"{abs(self.kmult)}k"

		return f"{self.frac}{'+' if self.kmult > 0 else '-'}{k_part}"

	def __repr__(self) -> str:
		return f"Charge({self.__str__()})"


class ChargedSegment:
	"""
	A sequence of charges (q, q + k̄, …, q + (g-1)k̄).

	Attributes:
		entries (tuple[Charge, ...]): The charges, nonempty.
	"""

	__slots__ = ("entries",)

	def __init__(self, entries: Sequence[Charge]):
		"""
		Initializes the segment.

		Args:
			entries (Sequence[Charge]): The charges.

		Raises:
			InvalidSegmentError: If the sequence is empty or a step is not k̄.
		"""

		if not entries or any(b != a.step() for a, b in zip(entries, entries[1:])):
			raise InvalidSegmentError("(" + ", ".join(str(entry) for entry in entries) + ")")

		self.entries = tuple(entries)

	@classmethod
	def starting_at(cls, start: Charge, length: int) -> "ChargedSegment":
		"""
		Builds the segment (start, start + k̄, …) of a given length.

		Args:
			start (Charge): The first charge.
			length (int): The number of charges, at least 1.

		Returns:
			ChargedSegment: The segment.

		Raises:
			InvalidSegmentError: If `length` is not positive.
		"""

		return cls([start.step(j) for j in range(length)])

	@property
	def start(self) -> Charge:
		return self.entries[0]

	def __len__(self) -> int:
		return len(self.entries)

	def shift(self, amount: Union[int, Fraction]) -> "ChargedSegment":
		"""Shifts every charge of the segment by the same rational amount."""

		return ChargedSegment([entry.shift(amount) for entry in self.entries])

	def sort_key(self) -> tuple:
		return self.start.sort_key(), len(self)

	def __eq__(self, other: object) -> bool:
		return isinstance(other, ChargedSegment) and other.entries == self.entries

	def __hash__(self) -> int:
		return hash(self.entries)

	def __lt__(self, other: "ChargedSegment") -> bool:
		return self.sort_key() < other.sort_key()

	def __str__(self) -> str:
		return "(" + ",".join(str(entry) for entry in self.entries) + ")"

	def __repr__(self) -> str:
		return f"ChargedSegment{self.__str__()}"


class Multisegment:
	"""
	A multiset of charged segments, stored sorted.

	Attributes:
		segments (tuple[ChargedSegment, ...]): The segments in canonical order.
	"""

	__slots__ = ("segments",)

	def __init__(self, segments: Iterable[ChargedSegment] = ()):
		self.segments = tuple(sorted(segments))

	@property
	def size(self) -> int:
		"""Total number of charges over all segments."""

		return sum(len(segment) for segment in self.segments)

	def shift(self, amount: Union[int, Fraction]) -> "Multisegment":
		return Multisegment(segment.shift(amount) for segment in self.segments)

	def charges(self) -> set[Charge]:
		"""Returns the set of charges that occur in some segment."""

		return {entry for segment in self.segments for entry in segment.entries}

	def sort_key(self) -> tuple:
		return tuple(segment.sort_key() for segment in self.segments)

	def __eq__(self, other: object) -> bool:
		return isinstance(other, Multisegment) and other.segments == self.segments

	def __hash__(self) -> int:
		return hash(self.segments)

	def __len__(self) -> int:
		return len(self.segments)

	def __str__(self) -> str:
		return "{" + ", ".join(str(segment) for segment in self.segments) + "}"

	def __repr__(self) -> str:
		return f"Multisegment({self.__str__()})"


def format_partition(partition: Partition) -> str:
	"""Prints a partition as a parenthesized, comma-separated tuple."""

	return "(" + ",".join(str(part) for part in partition) + ")" if partition else "()"


class IndexPair:
	"""
	A pair χ = (Q, ξ) of a multisegment and an ℓ-multipartition.

	Attributes:
		Q (Multisegment): The multisegment.
		xi (Multipartition): The ℓ partitions, each non-increasing.
	"""

	__slots__ = ("Q", "xi")

	def __init__(self, Q: Multisegment, xi: Sequence[Sequence[int]]):
		"""
		Initializes the pair.

		Args:
			Q (Multisegment): The multisegment.
			xi (Sequence[Sequence[int]]): The partitions, sorted into non-increasing order here.
		"""

		self.Q = Q
		self.xi: Multipartition = tuple(tuple(sorted(partition, reverse=True)) for partition in xi)

	@property
	def size(self) -> int:
		"""|Q| + |ξ|."""

		return self.Q.size + sum(sum(partition) for partition in self.xi)

	def sort_key(self) -> tuple:
		return self.Q.sort_key(), self.xi

	def __eq__(self, other: object) -> bool:
		return isinstance(other, IndexPair) and other.Q == self.Q and other.xi == self.xi

	def __hash__(self) -> int:
		return hash((self.Q, self.xi))

	def __lt__(self, other: "IndexPair") -> bool:
		return self.sort_key() < other.sort_key()

	def __str__(self) -> str:
		return f"({self.Q}, ({', '.join(format_partition(partition) for partition in self.xi)}))"

	def __repr__(self) -> str:
		return f"IndexPair{self.__str__()}"
