from osn_cherednik.clifford_index.types import (
	Charge,
	ChargedSegment,
	IndexPair,
	Multisegment
)
from osn_cherednik.clifford_index.functions import (
	alpha_act,
	clifford_checks,
	count_simples,
	default_universe,
	enumerate_pairs,
	g222_family_census,
	g22n_restriction,
	morita_unit_check,
	orbit_and_stabilizer,
	verify_clifford
)
