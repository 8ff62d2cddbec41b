class NonDivisibleError(Exception):
	"""
	Custom exception raised when an exact polynomial division leaves a remainder.

	Inside the representation engine this signals an internal consistency violation,
	since every divided difference produced by the swap rule must be exact.
	"""
	
	def __init__(self, dividend: str, divisor: str):
		"""
		Initializes NonDivisibleError.

		Args:
			dividend (str): Printed form of the polynomial being divided.
			divisor (str): Printed form of the polynomial that does not divide it.
		"""
		
		super().__init__(f"{divisor} does not divide {dividend} exactly.")


class MismatchedRingError(Exception):
	"""
	Custom exception raised when two values from different polynomial rings or cyclotomic fields are combined.
	"""
	
	def __init__(self, left: str, right: str):
		"""
		Initializes MismatchedRingError.

		Args:
			left (str): Description of the first ring.
			right (str): Description of the second ring.
		"""
		
		super().__init__(f"Can't combine values from different rings: {left} and {right}.")


class InconsistentVectorLengthError(Exception):
	"""
	Custom exception raised when a parameter vector has the wrong length for the given ℓ.
	"""
	
	def __init__(self, name: str, length: int, expected: str):
		"""
		Initializes InconsistentVectorLengthError.

		Args:
			name (str): Name of the vector (c, h or s).
			length (int): The received length.
			expected (str): Description of the accepted lengths.
		"""
		
		super().__init__(f"Vector {name} has length {length}, expected {expected}.")


class ZeroDenominatorError(Exception):
	"""
	Custom exception raised when a zero denominator or a non-invertible scalar is used.
	"""
	
	def __init__(self, value: str):
		"""
		Initializes ZeroDenominatorError.

		Args:
			value (str): Printed form of the value that cannot be inverted.
		"""
		
		super().__init__(f"Can't invert {value}.")
