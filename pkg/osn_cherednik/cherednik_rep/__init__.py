from osn_cherednik.cherednik_rep.types import (
	Generator,
	OperatorSum,
	SIGMA,
	Swap,
	T,
	TAU,
	U,
	Word
)
from osn_cherednik.cherednik_rep.element import (
	PolyRepElement,
	format_element,
	monomial_basis
)
from osn_cherednik.cherednik_rep.action import (
	PolynomialRepresentation,
	act_gen,
	act_operator,
	act_word,
	get_representation
)
from osn_cherednik.cherednik_rep.words import (
	print_word,
	standard_gen_word,
	transposition_word,
	word_winding_degree
)
from osn_cherednik.cherednik_rep.projectors import (
	dunkl_symmetrize,
	embed,
	project_e,
	project_e_bruteforce,
	project_e_prime,
	project_e_prime_bruteforce
)
from osn_cherednik.cherednik_rep.relations import (
	alternate_relations,
	relation_checks,
	standard_relations,
	verify_relations
)
