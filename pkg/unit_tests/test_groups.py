import functools
import itertools
import pytest
from hypothesis import (
	given,
	settings,
	strategies as st
)
from osn_cherednik.exact_arith import (
	ParameterContext,
	RatFunc
)
from osn_cherednik.groups import (
	AffineElement,
	GPNElement,
	adjacent_word,
	affine_act,
	enumerate_group,
	enumerate_reflections,
	gpn_mul,
	lattice_degree,
	lattice_member,
	lattice_member_bruteforce
)
from osn_cherednik.groups.errors import (
	InvalidGroupParametersError,
	MismatchedGroupError
)
from osn_cherednik.groups.gpn import (
	compose_permutations,
	identity_permutation,
	transposition
)


G422 = list(enumerate_group(4, 2, 2))
AFFINE_3 = [
	AffineElement(shift, perm)
	for perm in itertools.permutations(range(1, 4))
	for shift in [(0, 0, 0), (1, 0, -2), (0, 3, 0), (-1, -1, -1)]
]


def test_gpn_mul_moves_exponents_with_the_permutation():
	g = GPNElement(3, 1, (1, 0), (2, 1))
	h = GPNElement.diagonal(3, 1, (1, 0))

	assert gpn_mul(g, h) == GPNElement(3, 1, (1, 1), (2, 1))
	assert gpn_mul(h, g) == GPNElement(3, 1, (2, 0), (2, 1))


def test_gpn_mul_rejects_other_groups():
	with pytest.raises(MismatchedGroupError):
		gpn_mul(GPNElement.identity(2, 1, 2), GPNElement.identity(2, 2, 2))


def test_invalid_group_parameters():
	with pytest.raises(InvalidGroupParametersError):
		GPNElement.identity(4, 3, 2)


@pytest.mark.parametrize("l,p,n,order", [(2, 1, 2, 8), (2, 2, 2, 4), (4, 2, 2, 16), (3, 3, 3, 54)])
def test_group_order(l, p, n, order):
	assert len(list(enumerate_group(l, p, n))) == order


@pytest.mark.parametrize("l,p,n,count", [(2, 1, 2, 4), (2, 2, 2, 2), (3, 3, 2, 3), (4, 2, 2, 6), (4, 2, 3, 15)])
def test_reflection_count(l, p, n, count):
	reflections = enumerate_reflections(l, p, n)

	assert len(reflections) == count
	assert len(set(reflections)) == count
	assert all(reflection.is_member() and reflection.is_reflection() for reflection in reflections)


@pytest.mark.parametrize("l,p,n", [(2, 1, 2), (2, 2, 2), (4, 2, 2), (3, 1, 2)])
def test_reflections_match_bruteforce(l, p, n):
	bruteforce = {g for g in enumerate_group(l, p, n) if g.is_reflection()}

	assert bruteforce == set(enumerate_reflections(l, p, n))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(G422), st.sampled_from(G422), st.sampled_from(G422))
def test_group_axioms(a, b, c):
	identity = GPNElement.identity(4, 2, 2)

	assert (a * b) * c == a * (b * c)
	assert a * a.inverse() == identity
	assert a.inverse() * a == identity
	assert (a * b).is_member()


@pytest.mark.parametrize("w", list(itertools.permutations(range(1, 5))))
def test_adjacent_word_recomposes(w):
	word = adjacent_word(w)
	inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if w[i] > w[j])
	recomposed = functools.reduce(
			compose_permutations,
			[transposition(i, i + 1, 4) for i in word],
			identity_permutation(4)
	)

	assert recomposed == tuple(w)
	assert len(word) == inversions


@pytest.mark.parametrize("l,p,n", [(2, 2, 2), (4, 2, 2), (6, 3, 2), (4, 4, 3)])
def test_lattice_membership_matches_bruteforce(l, p, n):
	box = 3

	for v in itertools.product(range(-box, box + 1), repeat=n):
		assert lattice_member(v, l, p, n) == lattice_member_bruteforce(v, l, p, n, box)


def test_lattice_degree():
	assert lattice_member((2, 2), 4, 2, 2)
	assert lattice_degree((2, 2), 4, 2) == 1
	assert lattice_member((4, 0), 4, 2, 2)
	assert lattice_degree((4, 0), 4, 2) == 0
	assert not lattice_member((1, 1), 4, 2, 2)
	assert not lattice_member((2, 0), 4, 2, 2)


def test_affine_images():
	context = ParameterContext(2, 1, 2)
	element = AffineElement((2, 0), (2, 1))

	assert element.images(context) == {0: context.U(2), 1: context.U(1) + context.hbar.scale(2)}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(AFFINE_3), st.sampled_from(AFFINE_3))
def test_affine_product_composes_actions(g, h):
	context = ParameterContext(2, 1, 3)
	f = RatFunc(context.U(1) * context.U(2) * context.U(2) + context.U(3), context.U(1) + context.U(3).scale(2))

	assert affine_act(g * h, f, context) == affine_act(g, affine_act(h, f, context), context)
	assert affine_act(g.inverse(), affine_act(g, f, context), context) == f
