class UniverseNotClosedError(Exception):
	"""
	Custom exception raised when a charge universe is not closed under the shift by -1/p.
	"""
	
	def __init__(self, charge: str, p: int):
		"""
		Initializes UniverseNotClosedError.

		Args:
			charge (str): A charge whose shift leaves the universe.
			p (int): The divisor p.
		"""
		
		super().__init__(f"Charge universe is not closed under the shift by -1/{p}: {charge} has no image.")


class InvalidSegmentError(Exception):
	"""
	Custom exception raised when consecutive charges of a segment do not differ by exactly one step of the generic parameter.
	"""
	
	def __init__(self, entries: str):
		"""
		Initializes InvalidSegmentError.

		Args:
			entries (str): The offending charges.
		"""
		
		super().__init__(f"Invalid charged segment {entries}: consecutive charges must differ by k.")


class SizeMismatchError(Exception):
	"""
	Custom exception raised when the sizes of a multisegment and a multipartition do not add up to the rank.
	"""
	
	def __init__(self, size: int, n: int):
		"""
		Initializes SizeMismatchError.

		Args:
			size (int): The total size of the pair.
			n (int): The expected rank.
		"""
		
		super().__init__(f"Index pair has size {size}, expected {n}.")
