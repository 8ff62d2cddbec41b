class GeneratorIndexError(Exception):
	"""
	Custom exception raised when a generator index lies outside the range allowed for the rank n.
	"""

	def __init__(self, kind: str, index: int, n: int):
		"""
		Initializes GeneratorIndexError.

		Args:
			kind (str): The generator kind.
			index (int): The offending index.
			n (int): The rank.
		"""

		super().__init__(f"Index {index} is out of range for generator {kind} with n={n}.")


class SubringViolationError(Exception):
	"""
	Custom exception raised when an element of the polynomial representation has a T-monomial outside the subring.

	For p ≠ 1 every T-exponent vector must have an exponent sum divisible by p.
	"""

	def __init__(self, texp: tuple[int, ...], p: int):
		"""
		Initializes SubringViolationError.

		Args:
			texp (tuple[int, ...]): The T-exponent vector.
			p (int): The divisor p.
		"""

		super().__init__(f"T-exponents {texp} have sum {sum(texp)}, which is not divisible by p={p}.")
