import functools
from fractions import Fraction
from typing import (
	Iterable,
	Literal,
	Optional,
	Sequence
)
from osn_cherednik.types import RuleMutation
from osn_cherednik.exact_arith.polynomials import (
	ParamPoly,
	PolynomialRing
)
from osn_cherednik.exact_arith.cyclotomic import (
	CycloScalar,
	CyclotomicField,
	get_cyclotomic_field,
	row_rank
)
from osn_cherednik.exact_arith.errors import (
	InconsistentVectorLengthError,
	MismatchedRingError
)


ParameterMode = Literal["structural", "generic"]


def fourier_c_to_h(c: Sequence[ParamPoly], l: int) -> list[ParamPoly]:
	"""
	Evaluates h_r = Σ_s c_s ζ^{rs} for r = 0, …, ℓ-1.

	Args:
		c (Sequence[ParamPoly]): Either c_1, …, c_{ℓ-1} (c_0 absent and taken as 0) or c_0, …, c_{ℓ-1}.
		l (int): The order ℓ.

	Returns:
		list[ParamPoly]: The vector h_0, …, h_{ℓ-1}.

	Raises:
		InconsistentVectorLengthError: If the vector has neither ℓ-1 nor ℓ entries.
		MismatchedRingError: If the coefficient field is not Q(ζ_ℓ).
	"""

	if len(c) == l - 1 and l > 1:
		offset = 1
	elif len(c) == l:
		offset = 0
	else:
		raise InconsistentVectorLengthError("c", len(c), f"{l - 1} or {l}")

	ring = c[0].ring
	if ring.field.l != l:
		raise MismatchedRingError(str(ring.field), f"Q(zeta_{l})")

	h = []
	for r in range(l):
		value = ring.zero()

		for index, c_s in enumerate(c):
			value = value + c_s.scale(ring.field.zeta(r * (index + offset)))

		h.append(value)

	return h


def fourier_h_to_c(h: Sequence[ParamPoly], l: int) -> list[ParamPoly]:
	"""
	Inverts `fourier_c_to_h` via c_s = (1/ℓ) Σ_r h_r ζ^{-rs}.

	Args:
		h (Sequence[ParamPoly]): The vector h_0, …, h_{ℓ-1}.
		l (int): The order ℓ.

	Returns:
		list[ParamPoly]: c_0, …, c_{ℓ-1}; c_0 is the mean of h.

	Raises:
		InconsistentVectorLengthError: If `h` does not have ℓ entries.
	"""

	if len(h) != l:
		raise InconsistentVectorLengthError("h", len(h), str(l))

	ring = h[0].ring
	if ring.field.l != l:
		raise MismatchedRingError(str(ring.field), f"Q(zeta_{l})")

	c = []
	for s in range(l):
		value = ring.zero()

		for r, h_r in enumerate(h):
			value = value + h_r.scale(ring.field.zeta(-r * s))

		c.append(value.scale(Fraction(1, l)))

	return c


def _extended_s(h: Sequence[ParamPoly], hbar: ParamPoly, m: int) -> ParamPoly:
	l = len(h)

	return h[m % l] + hbar.scale(m)


def p_cyclic_check(
		l: int,
		p: int,
		c: Optional[Sequence[ParamPoly]] = None,
		h: Optional[Sequence[ParamPoly]] = None,
		s: Optional[Sequence[ParamPoly]] = None,
		hbar: Optional[ParamPoly] = None
) -> tuple[bool, bool, bool]:
	"""
	Evaluates the three p-cyclicity conditions for one parameter vector.

	Exactly one of `c`, `h` and `s` must be given. The other two vectors are derived
	from it through the Fourier transform and s_m = h_m + mħ, with s_m for m ≥ ℓ read as
	h_{m mod ℓ} + mħ. The conditions are

	1. c_k = 0 whenever p does not divide k,
	2. h_r = h_{r+ℓ/p} for all r,
	3. s_m + ℓħ/p = s_{m+ℓ/p} for all m.

	Args:
		l (int): The order ℓ.
		p (int): A divisor of ℓ.
		c (Optional[Sequence[ParamPoly]]): c-vector, length ℓ-1 or ℓ.
		h (Optional[Sequence[ParamPoly]]): h-vector, length ℓ.
		s (Optional[Sequence[ParamPoly]]): s-vector s_0, …, s_{ℓ-1}.
		hbar (Optional[ParamPoly]): The parameter ħ. Defaults to the ring variable named "h".

	Returns:
		tuple[bool, bool, bool]: Truth values of conditions 1, 2 and 3.

	Raises:
		ValueError: If not exactly one vector is supplied or p does not divide ℓ.
		InconsistentVectorLengthError: If the vector has the wrong length.
	"""

	if sum(vector is not None for vector in (c, h, s)) != 1:
		raise ValueError("Exactly one of c, h and s must be supplied.")

	if l % p != 0:
		raise ValueError(f"p={p} does not divide l={l}.")

	ring = next(vector for vector in (c, h, s) if vector is not None)[0].ring

	if hbar is None:
		hbar = ring.variable_by_name("h")

	if c is not None:
		h = fourier_c_to_h(c, l)
	elif s is not None:
		if len(s) != l:
			raise InconsistentVectorLengthError("s", len(s), str(l))

		h = [s_m - hbar.scale(m) for m, s_m in enumerate(s)]
	elif len(h) != l:
		raise InconsistentVectorLengthError("h", len(h), str(l))

	full_c = fourier_h_to_c(h, l)
	period = l // p

	c_condition = all(full_c[k].is_zero() for k in range(1, l) if k % p != 0)
	h_condition = all(h[r] == h[(r + period) % l] for r in range(l))
	s_condition = all(
			_extended_s(h, hbar, m) + hbar.scale(Fraction(l, p)) == _extended_s(h, hbar, m + period)
			for m in range(l)
	)

	return c_condition, h_condition, s_condition


def _linear_coefficients(form: ParamPoly) -> list[CycloScalar]:
	coefficients = [form.ring.field.zero()] * form.ring.nvars

	for exponent, coeff in form.terms.items():
		if sum(exponent) != 1:
			raise ValueError(f"{form} is not a linear form.")

		coefficients[exponent.index(1)] = coeff

	return coefficients


def p_cyclic_equivalence(l: int, p: int) -> bool:
	"""
	Decides symbolically that the three p-cyclicity conditions cut out the same parameter subspace.

	Works in the ring Q(ζ_ℓ)[h_0, …, h_{ℓ-1}, ħ]. Each condition family becomes a set of
	linear forms; the families agree iff each family and every union of two families
	have the same rank over Q(ζ_ℓ).

	Args:
		l (int): The order ℓ.
		p (int): A divisor of ℓ.

	Returns:
		bool: True when the conditions are pairwise equivalent.
	"""

	if l % p != 0:
		raise ValueError(f"p={p} does not divide l={l}.")

	ring = PolynomialRing([f"h{r}" for r in range(l)] + ["h"], get_cyclotomic_field(l))
	h = [ring.variable(r) for r in range(l)]
	hbar = ring.variable_by_name("h")
	c = fourier_h_to_c(h, l)
	period = l // p

	families = [
		[c[k] for k in range(1, l) if k % p != 0],
		[h[r] - h[(r + period) % l] for r in range(l)],
		[
			_extended_s(h, hbar, m) + hbar.scale(Fraction(l, p)) - _extended_s(h, hbar, m + period)
			for m in range(l)
		],
	]
	rows = [[_linear_coefficients(form) for form in family if not form.is_zero()] for family in families]
	ranks = [row_rank(family_rows) for family_rows in rows]

	if len(set(ranks)) != 1:
		return False

	return all(
			row_rank(rows[i] + rows[j]) == ranks[0]
			for i in range(3)
			for j in range(i + 1, 3)
	)


class ParameterContext:
	"""
	Shared algebraic context for a fixed G(ℓ,p,n) and parameter mode.

	The polynomial ring has variables U1, …, Un, h (ħ), k (κ) and s0, …, s{P-1}, in this order,
	where P = ℓ/p in structural mode and P = ℓ in generic mode. Structural mode resolves
	s_m = s_{m mod P} + ⌊m/P⌋·Pħ, which makes the parameters p-cyclic by construction.

	Attributes:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank n.
		mode (ParameterMode): "structural" or "generic".
		mutations (frozenset[RuleMutation]): Enabled single-rule perturbations.
		period (int): The number P of free s-parameters.
		field (CyclotomicField): Q(ζ_ℓ).
		ring (PolynomialRing): The parameter and U-variable ring.
	"""

	def __init__(
			self,
			l: int,
			p: int,
			n: int,
			mode: ParameterMode = "structural",
			mutations: Iterable[RuleMutation] = ()
	):
		"""
		Initializes the context.

		Args:
			l (int): The order ℓ, positive.
			p (int): A positive divisor of ℓ.
			n (int): The rank, positive.
			mode (ParameterMode): Parameter mode. Defaults to "structural".
			mutations (Iterable[RuleMutation]): Perturbations to enable. Defaults to none.

		Raises:
			ValueError: If the sizes are invalid.
		"""

		if l < 1 or p < 1 or n < 1 or l % p != 0:
			raise ValueError(f"Invalid group parameters l={l}, p={p}, n={n}.")

		self.l = l
		self.p = p
		self.n = n
		self.mode = mode
		self.mutations = frozenset(mutations)
		self.period = l // p if mode == "structural" else l
		self.field: CyclotomicField = get_cyclotomic_field(l)
		self.ring = PolynomialRing(
				[f"U{i}" for i in range(1, n + 1)] + ["h", "k"] + [f"s{m}" for m in range(self.period)],
				self.field
		)

	def __str__(self) -> str:
		return f"ParameterContext(l={self.l}, p={self.p}, n={self.n}, mode={self.mode})"

	def __repr__(self) -> str:
		return self.__str__()

	def has_mutation(self, mutation: RuleMutation) -> bool:
		return mutation in self.mutations

	def u_position(self, i: int) -> int:
		return i - 1

	@property
	def u_positions(self) -> tuple[int, ...]:
		return tuple(range(self.n))

	def U(self, i: int) -> ParamPoly:
		"""
		Returns U_i for any integer i, using U_{i+n} = U_i + ħ.

		Args:
			i (int): The index.

		Returns:
			ParamPoly: U_r + qħ where i = r + qn with 1 ≤ r ≤ n.
		"""

		q, r = divmod(i - 1, self.n)

		return self.ring.variable(r) + self.hbar.scale(q)

	@functools.cached_property
	def hbar(self) -> ParamPoly:
		return self.ring.variable(self.n)

	@functools.cached_property
	def kappa(self) -> ParamPoly:
		return self.ring.variable(self.n + 1)

	def s(self, m: int) -> ParamPoly:
		"""
		Resolves s_m for any integer m.

		Args:
			m (int): The index.

		Returns:
			ParamPoly: s_{m mod P} + ⌊m/P⌋·Pħ.
		"""

		q, r = divmod(m, self.period)

		return self.ring.variable(self.n + 2 + r) + self.hbar.scale(q * self.period)

	@functools.cached_property
	def h_vector(self) -> tuple[ParamPoly, ...]:
		return tuple(self.s(m) - self.hbar.scale(m) for m in range(self.l))

	@functools.cached_property
	def c_vector(self) -> tuple[ParamPoly, ...]:
		"""The full vector c_0, …, c_{ℓ-1}; p(u) = Σ c_k u^k satisfies p(ζ^r) = h_r."""

		return tuple(fourier_h_to_c(list(self.h_vector), self.l))

	def zeta(self, power: int = 1) -> CycloScalar:
		return self.field.zeta(power)

	def shift_images(self, shifts: Sequence[int]) -> dict[int, ParamPoly]:
		"""
		Images of the substitution U_j ↦ U_j + shifts[j-1]·ħ.

		Args:
			shifts (Sequence[int]): Integer shift per variable.

		Returns:
			dict[int, ParamPoly]: Images keyed by variable position, only for moved variables.
		"""

		return {
			j: self.ring.variable(j) + self.hbar.scale(shift)
			for j, shift in enumerate(shifts)
			if shift != 0
		}
