import pytest
from osn_cherednik.exact_arith import ParameterContext
from osn_cherednik.cherednik_rep.errors import GeneratorIndexError
from osn_cherednik.psph import (
	Mixed,
	SIGMA_POWER,
	SwapGen,
	TAU_POWER,
	UGen,
	XSIGMA,
	YTAU,
	all_generators,
	closed_form_action,
	oracle_compare,
	verify_psph,
	word_for,
	zp_degree
)


def test_generator_list():
	names = [str(g) for g in all_generators(4, 2, 2)]

	assert names == ["UGen(1)", "UGen(2)", "SwapGen(1)", "XSigma", "YTau", "SigmaPower", "TauPower", "Mixed(1,1)"]


def test_mixed_needs_p_above_one():
	with pytest.raises(GeneratorIndexError):
		word_for(Mixed(1, 1), 2, 1, 2)


@pytest.mark.parametrize(
		"g,degree",
		[(UGen(1), 0), (SwapGen(1), 0), (XSIGMA, 0), (YTAU, 0), (SIGMA_POWER, 1), (TAU_POWER, 2), (Mixed(1, 2), 2)]
)
def test_zp_degree(g, degree):
	assert zp_degree(g, 3) == degree


@pytest.mark.parametrize("g,length", [(XSIGMA, 3), (YTAU, 3), (SIGMA_POWER, 4), (TAU_POWER, 4), (UGen(2), 1)])
def test_word_lengths(g, length):
	assert len(word_for(g, 2, 1, 2)) == length


def test_ytau_closed_form():
	context = ParameterContext(2, 1, 2)

	assert closed_form_action(YTAU, context.U(1), context) == context.U(2) - context.hbar.scale(2)
	assert closed_form_action(YTAU, context.U(2), context) == context.U(1)


def test_xsigma_closed_form_on_one():
	context = ParameterContext(2, 1, 2)
	base = context.U(1) + context.hbar.scale(2)

	assert closed_form_action(XSIGMA, context.ring.one(), context) == (base - context.s(0)) * (base - context.s(1))


def test_power_closed_forms():
	context = ParameterContext(2, 2, 2)
	u1 = context.U(1)

	assert closed_form_action(TAU_POWER, u1, context) == u1 - context.hbar
	assert closed_form_action(SIGMA_POWER, context.ring.one(), context) == (
			(u1 + context.hbar - context.s(0)) * (context.U(2) + context.hbar - context.s(0))
	)


def test_swap_closed_form():
	context = ParameterContext(2, 1, 2)

	assert closed_form_action(SwapGen(1), context.U(1), context) == context.U(2) + context.kappa.scale(2)


def test_oracle_on_single_inputs():
	context = ParameterContext(2, 2, 2)

	assert oracle_compare(UGen(1), context.U(2), context)
	assert oracle_compare(TAU_POWER, context.U(1), context)
	assert oracle_compare(Mixed(1, 1), context.ring.one(), context)


@pytest.mark.parametrize("l,p,n", [(2, 1, 2), (2, 2, 2), (4, 2, 2)])
def test_closed_forms_agree_with_words(l, p, n):
	entries = verify_psph(l, p, n, degree_bound=1)

	assert all(entry["status"] in ("pass", "vacuous") for entry in entries), entries
	assert {"psph-degree", "psph-composition", "psph:XSigma"} <= {entry["id"] for entry in entries}


def test_mixed_is_vacuous_for_p_one():
	entries = {entry["id"]: entry for entry in verify_psph(2, 1, 2, degree_bound=0)}

	assert entries["psph:Mixed"]["status"] == "vacuous"


def test_missing_xsigma_factor_is_detected():
	entries = {entry["id"]: entry for entry in verify_psph(2, 1, 2, degree_bound=0, mutations=("xsigma_missing_factor",))}

	assert entries["psph:XSigma"]["status"] == "fail"
	assert entries["psph:XSigma"]["counterexample"] is not None
