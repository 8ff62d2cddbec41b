from osn_cherednik.groups.affine import (
	AffineElement,
	affine_act,
	lattice_degree,
	lattice_member,
	lattice_member_bruteforce
)
from osn_cherednik.groups.gpn import (
	GPNElement,
	adjacent_word,
	enumerate_diagonal_subgroup,
	enumerate_group,
	enumerate_reflections,
	gpn_mul
)
