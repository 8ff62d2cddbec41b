import logging
import itertools
from fractions import Fraction
from typing import (
	Iterable,
	Iterator,
	Optional,
	Union
)
import pandas
from sympy.utilities.iterables import partitions
from osn_cherednik.groups.gpn import (
	enumerate_group,
	gpn_mul,
	GPNElement,
	validate_group_parameters
)
from osn_cherednik.exact_arith.cyclotomic import get_cyclotomic_field
from osn_cherednik._runner import (
	Check,
	failed,
	passed,
	run_checks
)
from osn_cherednik.types import (
	CheckEntry,
	CheckOutcome
)
from osn_cherednik.clifford_index.errors import (
	SizeMismatchError,
	UniverseNotClosedError
)
from osn_cherednik.clifford_index.types import (
	Charge,
	ChargedSegment,
	IndexPair,
	Multipartition,
	Multisegment,
	Partition,
	RestrictionKind
)


def alpha_act(chi: IndexPair, l: int, p: int) -> IndexPair:
	"""
	Applies the order-p automorphism α to an index pair.

	Every charge moves by -1/p modulo 1 and the multipartition rotates left by ℓ/p components.

	Args:
		chi (IndexPair): The pair.
		l (int): The order ℓ.
		p (int): The divisor p.

	Returns:
		IndexPair: α·χ.
	"""

	validate_group_parameters(l, p, 1)

	rotation = l // p

	return IndexPair(chi.Q.shift(Fraction(-1, p)), chi.xi[rotation:] + chi.xi[:rotation])


def orbit_and_stabilizer(chi: IndexPair, l: int, p: int) -> tuple[list[IndexPair], int]:
	"""
	Computes the ⟨α⟩-orbit of a pair and the smallest p_χ ≥ 1 with α^{p_χ}·χ = χ.

	Args:
		chi (IndexPair): The pair.
		l (int): The order ℓ.
		p (int): The divisor p.

	Returns:
		tuple[list[IndexPair], int]: The orbit starting at χ and p_χ, which divides p.
	"""

	orbit = [chi]
	current = alpha_act(chi, l, p)

	while current != chi:
		orbit.append(current)
		current = alpha_act(current, l, p)

	return orbit, len(orbit)


def default_universe(l: int, p: int, kmult_range: int = 1) -> frozenset[Charge]:
	"""
	Returns the charges j/(pℓ) + m·k̄ for 0 ≤ j < pℓ and 0 ≤ m < kmult_range.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		kmult_range (int): Number of k̄-levels. Defaults to 1.

	Returns:
		frozenset[Charge]: A universe closed under the shift by -1/p.
	"""

	return frozenset(
			Charge(Fraction(j, p * l), m)
			for j in range(p * l)
			for m in range(kmult_range)
	)


def check_universe(universe: Iterable[Charge], p: int):
	"""
	Checks that a charge universe is closed under the shift by -1/p.

	Raises:
		UniverseNotClosedError: For the first charge whose image is missing.
	"""

	members = set(universe)

	for charge in sorted(members):
		if charge.shift(Fraction(-1, p)) not in members:
			raise UniverseNotClosedError(str(charge), p)


def integer_partitions(size: int) -> list[Partition]:
	"""Lists the partitions of `size` as non-increasing tuples."""

	if size == 0:
		return [()]

	return [
		tuple(sorted((part for part, count in block.items() for _ in range(count)), reverse=True))
		for block in partitions(size)
	]


def multipartitions(size: int, l: int) -> Iterator[Multipartition]:
	"""Yields every ℓ-tuple of partitions with total size `size`."""

	for composition in itertools.product(range(size + 1), repeat=l):
		if sum(composition) == size:
			yield from itertools.product(*(integer_partitions(part) for part in composition))


def segments_in(universe: Iterable[Charge], max_length: int) -> list[ChargedSegment]:
	"""Lists the segments of length ≤ max_length whose charges all lie in the universe."""

	members = set(universe)
	result = []

	for start in sorted(members):
		for length in range(1, max_length + 1):
			segment = ChargedSegment.starting_at(start, length)

			if all(entry in members for entry in segment.entries):
				result.append(segment)

	return result


def multisegments(universe: Iterable[Charge], size: int) -> Iterator[Multisegment]:
	"""Yields every multisegment of total size `size` over the universe."""

	candidates = segments_in(universe, size)

	def extend(total: int, first: int, chosen: list[ChargedSegment]) -> Iterator[Multisegment]:
		if total == size:
			yield Multisegment(chosen)

			return

		for index in range(first, len(candidates)):
			segment = candidates[index]

			if total + len(segment) <= size:
				yield from extend(total + len(segment), index, chosen + [segment])

	yield from extend(0, 0, [])


def enumerate_pairs(n: int, l: int, universe: Optional[Iterable[Charge]] = None) -> list[IndexPair]:
	"""
	Lists every pair (Q, ξ) with |Q| + |ξ| = n over a charge universe, in canonical order.

	Args:
		n (int): The rank.
		l (int): Number of partitions in ξ.
		universe (Optional[Iterable[Charge]]): Allowed charges. None or empty allows only Q = ∅.

	Returns:
		list[IndexPair]: The pairs, sorted.
	"""

	universe = list(universe or ())
	pairs = []

	for q_size in range(n + 1):
		if q_size and not universe:
			break

		for Q in multisegments(universe, q_size):
			for xi in multipartitions(n - q_size, l):
				pairs.append(IndexPair(Q, xi))

	return sorted(pairs)


def orbit_census(pairs: Iterable[IndexPair], l: int, p: int) -> list[tuple[IndexPair, int]]:
	"""
	Splits pairs into α-orbits.

	Args:
		pairs (Iterable[IndexPair]): An α-closed set of pairs.
		l (int): The order ℓ.
		p (int): The divisor p.

	Returns:
		list[tuple[IndexPair, int]]: The smallest member and p_χ of every orbit, in canonical order.
	"""

	seen = set()
	census = []

	for chi in sorted(pairs):
		if chi in seen:
			continue

		orbit, p_chi = orbit_and_stabilizer(chi, l, p)
		seen.update(orbit)
		census.append((min(orbit), p_chi))

	return census


def count_simples(
		n: int,
		l: int,
		p: int,
		charge_universe: Optional[Iterable[Charge]] = None,
		category_o: bool = False
) -> tuple[int, pandas.DataFrame]:
	"""
	Counts simple Dunkl-Opdam modules: each α-orbit of pairs contributes p/p_χ.

	Args:
		n (int): The rank.
		l (int): The order ℓ.
		p (int): The divisor p.
		charge_universe (Optional[Iterable[Charge]]): Allowed charges. Defaults to `default_universe(l, p)`.
		category_o (bool): Restrict to Q = ∅. Defaults to False.

	Returns:
		tuple[int, pandas.DataFrame]: The count and a census with columns representative, orbit_size, p_chi
			and simples, one row per orbit.

	Raises:
		UniverseNotClosedError: If the universe is not closed under the shift by -1/p.
	"""

	validate_group_parameters(l, p, n)

	universe = () if category_o else (default_universe(l, p) if charge_universe is None else frozenset(charge_universe))
	check_universe(universe, p)

	rows = [
		{
			"representative": str(chi),
			"orbit_size": p_chi,
			"p_chi": p_chi,
			"simples": p // p_chi,
		}
		for chi, p_chi in orbit_census(enumerate_pairs(n, l, universe), l, p)
	]
	census = pandas.DataFrame(rows, columns=["representative", "orbit_size", "p_chi", "simples"])
	count = int(census["simples"].sum()) if rows else 0

	logging.log(logging.DEBUG, f"G({l},{p},{n}): {len(rows)} orbits, {count} simples")

	return count, census


def g22n_restriction(chi: IndexPair) -> RestrictionKind:
	"""
	Decides whether the simple module of a G(2,1,n) pair splits on restriction to G(2,2,n).

	Args:
		chi (IndexPair): A pair with two partitions.

	Returns:
		RestrictionKind: "splits_in_two" iff ξ^(1) = ξ^(2) and Q is fixed by the shift by 1/2.

	Raises:
		ValueError: If ξ does not have two components.
	"""

	if len(chi.xi) != 2:
		raise ValueError(f"Expected a bipartition, got {len(chi.xi)} partitions.")

	if chi.xi[0] == chi.xi[1] and chi.Q.shift(Fraction(1, 2)) == chi.Q:
		return "splits_in_two"

	return "remains_simple"


def g222_universe() -> frozenset[Charge]:
	"""
	Charges for the G(2,2,2) census: a = 0 and b = 1/4 with their shifts by 1/2, at k̄-levels 0 and 1.

	The choice keeps a, a + 1/2, b and b + 1/2 pairwise distinct, so every generic family occurs.
	"""

	return frozenset(Charge(Fraction(j, 4), m) for j in range(4) for m in range(2))


def classify_g222(chi: IndexPair) -> str:
	"""
	Names the family of a G(2,2,2) pair.

	Args:
		chi (IndexPair): A pair of size 2 with two partitions.

	Returns:
		str: One of "bipartition-orbit", "symmetric-bipartition", "segment-with-box", "segment-of-length-2",
			"two-segments" and "two-segments-split".

	Raises:
		SizeMismatchError: If the pair does not have size 2.
	"""

	if chi.size != 2:
		raise SizeMismatchError(chi.size, 2)

	segments = chi.Q.segments

	if not segments:
		return "symmetric-bipartition" if chi.xi[0] == chi.xi[1] else "bipartition-orbit"

	if len(segments) == 1:
		return "segment-of-length-2" if len(segments[0]) == 2 else "segment-with-box"

	if chi.Q.shift(Fraction(1, 2)) == chi.Q:
		return "two-segments-split"

	return "two-segments"


def g222_family_census() -> pandas.DataFrame:
	"""
	Classifies every α-orbit of G(2,2,2) pairs over `g222_universe()` into families.

	Returns:
		pandas.DataFrame: Columns family, representative, orbit_size, p_chi, simples and splits, one row per orbit,
			sorted by family and then by representative.
	"""

	universe = g222_universe()
	rows = []

	for chi, p_chi in orbit_census(enumerate_pairs(2, 2, universe), 2, 2):
		rows.append(
				{
					"family": classify_g222(chi),
					"representative": str(chi),
					"orbit_size": p_chi,
					"p_chi": p_chi,
					"simples": 2 // p_chi,
					"splits": p_chi == 1,
				}
		)

	census = pandas.DataFrame(rows, columns=["family", "representative", "orbit_size", "p_chi", "simples", "splits"])

	return census.sort_values(["family", "representative"], kind="stable").reset_index(drop=True)


G222_SPLITTING_FAMILIES = frozenset({"symmetric-bipartition", "two-segments-split"})


def alpha_character(g: GPNElement, p: int) -> int:
	"""
	Returns j with α(g) = ζ_p^j·g for the dual action of α on the group algebra of G(ℓ,1,n).

	Args:
		g (GPNElement): An element of G(ℓ,1,n).
		p (int): The divisor p.

	Returns:
		int: Σ texp mod p.
	"""

	return sum(g.texp) % p


def morita_unit_check(l: int, p: int, n: int) -> bool:
	"""
	Verifies the unit lemma in the group-algebra model of G(ℓ,1,n) with the dual action of α.

	For every 0 ≤ j < p: t_1^j has α-eigenvalue ζ_p^j, and t_1^j·t_1^{-j} = 1. The α-fixed elements of
	G(ℓ,1,n) are exactly the members of G(ℓ,p,n).

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.

	Returns:
		bool: Whether every condition holds.
	"""

	validate_group_parameters(l, p, n)

	field = get_cyclotomic_field(l)
	identity = GPNElement.identity(l, 1, n)

	for j in range(p):
		unit = GPNElement.diagonal(l, 1, [j] + [0] * (n - 1))
		eigenvalue = field.zeta((l // p) * alpha_character(unit, p))

		if eigenvalue != field.zeta((l // p) * j):
			return False

		if gpn_mul(unit, unit.inverse()) != identity:
			return False

	fixed = {(g.texp, g.perm) for g in enumerate_group(l, 1, n) if alpha_character(g, p) == 0}
	members = {(g.texp, g.perm) for g in enumerate_group(l, p, n)}

	return fixed == members


def _census_check(n: int, l: int, p: int, category_o: bool, universe) -> CheckOutcome:
	count, census = count_simples(n, l, p, universe, category_o)

	return passed(f"{count} simples in {len(census)} orbits")


def _alpha_order_check(n: int, l: int, p: int, universe) -> CheckOutcome:
	for chi in enumerate_pairs(n, l, universe):
		image = chi

		for _ in range(p):
			image = alpha_act(image, l, p)

		_, p_chi = orbit_and_stabilizer(chi, l, p)

		if image != chi or p % p_chi != 0:
			return failed({"input": str(chi), "lhs": str(image), "rhs": str(chi)}, "alpha^p is not the identity")

	return passed()


def _restriction_check(n: int, universe) -> CheckOutcome:
	for chi in enumerate_pairs(n, 2, universe):
		_, p_chi = orbit_and_stabilizer(chi, 2, 2)
		kind = g22n_restriction(chi)

		if (kind == "splits_in_two") != (p_chi == 1):
			return failed(
					{"input": str(chi), "lhs": kind, "rhs": f"p_chi = {p_chi}"},
					"splitting criterion disagrees with the stabilizer"
			)

	return passed()


def _g222_check() -> CheckOutcome:
	census = g222_family_census()
	category_o = census[census["family"].isin(["bipartition-orbit", "symmetric-bipartition"])]
	count = int(category_o["simples"].sum())

	if count != 4:
		return failed({"input": "G(2,2,2) category O", "lhs": str(count), "rhs": "4"}, "wrong category O count")

	for row in census.itertuples(index=False):
		if row.splits != (row.family in G222_SPLITTING_FAMILIES):
			return failed(
					{"input": row.representative, "lhs": row.family, "rhs": f"splits={row.splits}"},
					"family splitting pattern differs"
			)

	return passed(f"{len(census)} orbits in {census['family'].nunique()} families")


def _morita_check(l: int, p: int, n: int) -> CheckOutcome:
	if morita_unit_check(l, p, n):
		return passed()

	return failed({"input": f"G({l},{p},{n})", "lhs": "False", "rhs": "True"}, "unit lemma fails")


def clifford_checks(l: int, p: int, n: int, universe: Optional[Iterable[Charge]] = None) -> list[Check]:
	"""
	Builds the combinatorial checks for G(ℓ,p,n).

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		universe (Optional[Iterable[Charge]]): Charge universe. Defaults to `default_universe(l, p)`.

	Returns:
		list[Check]: Checks "clifford:count", "clifford:category-o", "clifford:alpha-order", "clifford:morita-unit",
			plus "clifford:g22n-restriction" for ℓ = 2 and "clifford:g222-families" for (2, 2, 2).
	"""

	universe = default_universe(l, p) if universe is None else frozenset(universe)

	checks: list[Check] = [
		("clifford:count", lambda: _census_check(n, l, p, False, universe)),
		("clifford:category-o", lambda: _census_check(n, l, p, True, universe)),
		("clifford:alpha-order", lambda: _alpha_order_check(n, l, p, universe)),
		("clifford:morita-unit", lambda: _morita_check(l, p, n)),
	]

	if l == 2:
		checks.append(("clifford:g22n-restriction", lambda: _restriction_check(n, default_universe(2, 2))))

	if (l, p, n) == (2, 2, 2):
		checks.append(("clifford:g222-families", _g222_check))

	return checks


def verify_clifford(
		l: int,
		p: int,
		n: int,
		universe: Optional[Iterable[Charge]] = None,
		workers: Union[int, float] = 8
) -> list[CheckEntry]:
	"""
	Runs the combinatorial checks.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		universe (Optional[Iterable[Charge]]): Charge universe. Defaults to `default_universe(l, p)`.
		workers (Union[int, float]): Trio capacity-limiter tokens. Defaults to 8.

	Returns:
		list[CheckEntry]: The report entries, ordered by id.
	"""

	return run_checks(clifford_checks(l, p, n, universe), workers)
