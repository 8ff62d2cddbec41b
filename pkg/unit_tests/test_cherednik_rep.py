import pytest
from osn_cherednik.exact_arith import ParameterContext
from osn_cherednik.cherednik_rep import (
	PolyRepElement,
	SIGMA,
	Swap,
	TAU,
	U,
	act_word,
	format_element,
	monomial_basis,
	print_word,
	project_e,
	project_e_bruteforce,
	project_e_prime,
	project_e_prime_bruteforce,
	standard_gen_word,
	transposition_word,
	verify_relations
)
from osn_cherednik.cherednik_rep.errors import (
	GeneratorIndexError,
	SubringViolationError
)


def element(context, uexp, texp, coeff=1):
	return PolyRepElement.monomial(context, uexp, texp, coeff)


def test_swap_fixes_one():
	context = ParameterContext(2, 1, 2)
	one = PolyRepElement.one(context)

	assert act_word((Swap(1),), one) == one


def test_swap_on_u_adds_kappa():
	context = ParameterContext(1, 1, 2)
	result = act_word((Swap(1),), PolyRepElement.from_poly(context, context.U(1)))

	assert format_element(result) == "U2 + k"


def test_tau_shifts_u_down():
	context = ParameterContext(2, 1, 2)
	result = act_word((TAU,), PolyRepElement.from_poly(context, context.U(1)))

	assert format_element(result) == "U2 - h"


def test_sigma_on_one_is_its_prefactor():
	context = ParameterContext(1, 1, 2)

	assert format_element(act_word((SIGMA,), PolyRepElement.one(context))) == "U1 + h - s0"


def test_words_act_right_to_left():
	context = ParameterContext(2, 1, 2)
	u1 = PolyRepElement.from_poly(context, context.U(1))

	assert act_word((U(1), TAU), u1) == act_word((U(1),), act_word((TAU,), u1))
	assert format_element(act_word((U(1), U(2)), PolyRepElement.one(context))) == "U1*U2"


def test_swap_index_is_checked():
	context = ParameterContext(2, 1, 2)

	with pytest.raises(GeneratorIndexError):
		act_word((Swap(2),), PolyRepElement.one(context))


def test_subring_violation():
	context = ParameterContext(2, 2, 2)

	element(context, (0, 0), (1, 1)).check_subring()

	with pytest.raises(SubringViolationError):
		element(context, (1, 0), (1, 0)).check_subring()


def test_monomial_basis_size():
	context = ParameterContext(2, 2, 2)

	# 6 U-monomials of degree at most 2, 2 subring T-monomials
	assert len(monomial_basis(context, 2)) == 12


def test_standard_generator_words():
	assert standard_gen_word("x", 1, 2) == (SIGMA, Swap(1))
	assert standard_gen_word("y", 2, 2) == (TAU, Swap(1))
	assert print_word(standard_gen_word("x", 2, 3)) == "s1*sig*s2"
	assert print_word(()) == "1"

	with pytest.raises(GeneratorIndexError):
		standard_gen_word("y", 3, 2)


def test_transposition_word():
	assert transposition_word(1, 3) == (Swap(1), Swap(2), Swap(1))
	assert transposition_word(2, 1) == (Swap(1),)


def test_e_prime_is_idempotent_and_matches_bruteforce():
	context = ParameterContext(4, 2, 2)
	f = element(context, (1, 0), (1, 0)) + element(context, (0, 0), (1, 1), 2) + element(context, (0, 2), (0, 0))
	projected = project_e_prime(f)

	assert projected == project_e_prime_bruteforce(f)
	assert project_e_prime(projected) == projected


def test_e_prime_averages_over_subring_classes():
	full = ParameterContext(2, 1, 2)
	t1 = element(full, (0, 0), (1, 0))

	assert project_e_prime(t1) == project_e_prime(PolyRepElement.one(full))
	assert len(project_e_prime(t1).terms) == 4

	halved = ParameterContext(2, 2, 2)
	projected = project_e_prime(element(halved, (0, 0), (1, 0)))

	assert set(projected.terms) == {(1, 0), (0, 1)}
	assert not projected.in_subring()


def test_e_matches_bruteforce():
	context = ParameterContext(2, 2, 2)

	for f in [element(context, (1, 0), (0, 0)), element(context, (0, 1), (1, 1)), element(context, (2, 0), (0, 0))]:
		assert project_e(f) == project_e_bruteforce(f)


@pytest.mark.parametrize("l,p,n", [(2, 1, 2), (2, 2, 2), (3, 3, 2)])
def test_relations_hold(l, p, n):
	entries = verify_relations(l, p, n, degree_bound=1)

	assert [entry["id"] for entry in entries] == sorted(entry["id"] for entry in entries)
	assert all(entry["status"] in ("pass", "vacuous") for entry in entries), entries
	assert any(entry["status"] == "pass" for entry in entries)


@pytest.mark.parametrize("mutation", ["sigma_without_hbar", "tau_wrong_sign", "swap_without_pi"])
def test_relation_mutations_are_detected(mutation):
	entries = verify_relations(2, 2, 2, degree_bound=1, mutations=(mutation,))

	assert any(entry["status"] == "fail" for entry in entries)
