from osn_cherednik.exact_arith.rational import RatFunc
from osn_cherednik.exact_arith.polynomials import (
	ParamPoly,
	PolynomialRing,
	exact_divide
)
from osn_cherednik.exact_arith.cyclotomic import (
	CycloScalar,
	CyclotomicField,
	cyclo_mul,
	get_cyclotomic_field
)
from osn_cherednik.exact_arith.parameters import (
	ParameterContext,
	fourier_c_to_h,
	fourier_h_to_c,
	p_cyclic_check,
	p_cyclic_equivalence
)
