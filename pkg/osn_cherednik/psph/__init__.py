from osn_cherednik.psph.types import (
	Mixed,
	PsphGenerator,
	SIGMA_POWER,
	SwapGen,
	TAU_POWER,
	UGen,
	XSIGMA,
	YTAU,
	all_generators
)
from osn_cherednik.psph.closed_forms import (
	closed_form_action,
	closed_form_data
)
from osn_cherednik.psph.functions import (
	oracle_compare,
	psph_checks,
	verify_psph,
	word_for,
	zp_degree
)
