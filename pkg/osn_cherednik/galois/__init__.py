from osn_cherednik.galois.skew import (
	SkewElement,
	skew_act,
	skew_mul
)
from osn_cherednik.galois.types import (
	AffineGenerator,
	Compose,
	GeneratorNode,
	Identity,
	OperatorExpression,
	Scale,
	Sum,
	all_affine_generators
)
from osn_cherednik.galois.dictionary import (
	expression_to_skew,
	from_skew,
	to_skew
)
from osn_cherednik.galois.functions import (
	galois_checks,
	galois_ring_check,
	principality_check,
	principality_checks,
	random_ratfunc,
	spherical_principality_check
)
