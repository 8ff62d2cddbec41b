class MismatchedGroupError(Exception):
	"""
	Custom exception raised when elements of different groups are multiplied.
	"""
	
	def __init__(self, left: str, right: str):
		"""
		Initializes MismatchedGroupError.

		Args:
			left (str): Description of the first group.
			right (str): Description of the second group.
		"""
		
		super().__init__(f"Can't multiply elements of {left} and {right}.")


class InvalidGroupParametersError(Exception):
	"""
	Custom exception raised when (ℓ, p, n) does not describe a group G(ℓ,p,n).
	"""
	
	def __init__(self, l: int, p: int, n: int):
		"""
		Initializes InvalidGroupParametersError.

		Args:
			l (int): The order ℓ.
			p (int): The divisor p.
			n (int): The rank n.
		"""
		
		super().__init__(f"Invalid group parameters: l={l}, p={p}, n={n}. Need positive sizes and p | l.")
