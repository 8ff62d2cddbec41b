class UnknownAffineGeneratorError(Exception):
	"""
	Custom exception raised when an affine generator is not one of swap, mu, mu_inverse, mu_all or mu_all_inverse.
	"""
	
	def __init__(self, kind: str):
		"""
		Initializes UnknownAffineGeneratorError.

		Args:
			kind (str): The unknown generator kind.
		"""
		
		super().__init__(f"Unknown affine generator: {kind}. Use swap, mu, mu_inverse, mu_all or mu_all_inverse.")
