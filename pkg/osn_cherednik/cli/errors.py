class ParsingError(Exception):
	"""
	Custom exception raised when a word or polynomial expression can't be parsed.

	Attributes:
		line (int): 1-based line of the offending token.
		column (int): 1-based column of the offending token.
	"""
	
	def __init__(self, message: str, line: int, column: int):
		"""
		Initializes ParsingError.

		Args:
			message (str): What went wrong.
			line (int): 1-based line of the offending token.
			column (int): 1-based column of the offending token.
		"""
		
		self.line = line
		self.column = column
		
		super().__init__(f"{line}:{column}: {message}")


class InvalidRunConfigError(Exception):
	"""
	Custom exception raised when a run configuration violates p | ℓ, positive sizes or a non-negative degree bound.
	"""
	
	def __init__(self, reason: str):
		"""
		Initializes InvalidRunConfigError.

		Args:
			reason (str): The violated condition.
		"""
		
		super().__init__(f"Invalid run configuration: {reason}.")
