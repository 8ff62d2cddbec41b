from fractions import Fraction
import pytest
from osn_cherednik.clifford_index import (
	Charge,
	ChargedSegment,
	IndexPair,
	Multisegment,
	alpha_act,
	count_simples,
	default_universe,
	enumerate_pairs,
	g222_family_census,
	g22n_restriction,
	morita_unit_check,
	orbit_and_stabilizer,
	verify_clifford
)
from osn_cherednik.clifford_index.errors import (
	InvalidSegmentError,
	SizeMismatchError,
	UniverseNotClosedError
)
from osn_cherednik.clifford_index.functions import (
	G222_SPLITTING_FAMILIES,
	classify_g222,
	integer_partitions,
	multipartitions
)


def single(frac, kmult=0) -> ChargedSegment:
	return ChargedSegment([Charge(frac, kmult)])


def test_charge_printing_and_reduction():
	assert str(Charge(Fraction(1, 2), 1)) == "1/2+k"
	assert str(Charge(Fraction(3, 2))) == "1/2"
	assert str(Charge(0, -2)) == "0-2k"
	assert Charge(Fraction(-1, 4)) == Charge(Fraction(3, 4))


def test_segments_step_by_k():
	segment = ChargedSegment.starting_at(Charge(Fraction(1, 4)), 3)

	assert len(segment) == 3
	assert segment.entries[-1] == Charge(Fraction(1, 4), 2)

	with pytest.raises(InvalidSegmentError):
		ChargedSegment([Charge(0), Charge(Fraction(1, 2))])

	with pytest.raises(InvalidSegmentError):
		ChargedSegment([])


def test_multisegments_are_unordered():
	a, b = single(Fraction(1, 2)), single(0, 1)

	assert Multisegment([a, b]) == Multisegment([b, a])
	assert Multisegment([a, b]).size == 2


def test_partitions():
	assert integer_partitions(0) == [()]
	assert sorted(integer_partitions(4)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
	assert len(list(multipartitions(2, 2))) == 5


def test_alpha_rotates_and_shifts():
	chi = IndexPair(Multisegment([single(0)]), [(1,), ()])
	image = alpha_act(chi, 2, 2)

	assert image == IndexPair(Multisegment([single(Fraction(1, 2))]), [(), (1,)])
	assert alpha_act(image, 2, 2) == chi


def test_orbits():
	symmetric = IndexPair(Multisegment(), [(1,), (1,)])
	lopsided = IndexPair(Multisegment(), [(2,), ()])

	assert orbit_and_stabilizer(symmetric, 2, 2)[1] == 1
	assert orbit_and_stabilizer(lopsided, 2, 2)[1] == 2
	assert orbit_and_stabilizer(IndexPair(Multisegment(), [(1,), (), (), ()]), 4, 2)[1] == 2


@pytest.mark.parametrize("l,p,n,count", [(2, 2, 2, 4), (2, 1, 2, 5), (2, 2, 1, 1), (3, 3, 1, 1)])
def test_category_o_counts(l, p, n, count):
	assert count_simples(n, l, p, category_o=True)[0] == count


def test_census_frame():
	count, census = count_simples(2, 2, 2, category_o=True)

	assert list(census.columns) == ["representative", "orbit_size", "p_chi", "simples"]
	assert len(census) == 3
	assert int(census["simples"].sum()) == count


def test_universe_must_be_closed():
	with pytest.raises(UniverseNotClosedError):
		count_simples(2, 2, 2, charge_universe=[Charge(0)])


def test_default_universe():
	universe = default_universe(2, 2)

	assert len(universe) == 4
	assert Charge(Fraction(1, 4)) in universe


def test_two_level_universe_has_long_segments():
	universe = default_universe(2, 2, kmult_range=2)
	pairs = enumerate_pairs(2, 2, universe)
	long_segments = [chi for chi in pairs if any(len(segment) == 2 for segment in chi.Q.segments)]

	assert len(universe) == 8
	assert len(pairs) == 61
	assert len(long_segments) == 4
	assert count_simples(2, 2, 2, charge_universe=universe)[0] == 38


def test_g22n_restriction():
	assert g22n_restriction(IndexPair(Multisegment(), [(1,), (1,)])) == "splits_in_two"
	assert g22n_restriction(IndexPair(Multisegment(), [(2,), ()])) == "remains_simple"
	assert g22n_restriction(IndexPair(Multisegment([single(0), single(Fraction(1, 2))]), [(), ()])) == "splits_in_two"
	assert g22n_restriction(IndexPair(Multisegment([single(0), single(0)]), [(), ()])) == "remains_simple"

	with pytest.raises(ValueError):
		g22n_restriction(IndexPair(Multisegment(), [(1,)]))


def test_g222_families():
	census = g222_family_census()

	assert set(census["family"]) == {
		"bipartition-orbit",
		"symmetric-bipartition",
		"segment-with-box",
		"segment-of-length-2",
		"two-segments",
		"two-segments-split",
	}
	assert all(row.splits == (row.family in G222_SPLITTING_FAMILIES) for row in census.itertuples(index=False))


def test_classify_needs_size_two():
	with pytest.raises(SizeMismatchError):
		classify_g222(IndexPair(Multisegment(), [(1,), ()]))

	assert classify_g222(IndexPair(Multisegment([ChargedSegment.starting_at(Charge(0), 2)]), [(), ()])) == "segment-of-length-2"


def test_pairs_are_sorted_and_sized():
	pairs = enumerate_pairs(2, 2, default_universe(2, 2))

	assert pairs == sorted(pairs)
	assert all(chi.size == 2 for chi in pairs)


@pytest.mark.parametrize("l,p,n", [(2, 2, 2), (4, 2, 2), (3, 3, 2)])
def test_morita_unit(l, p, n):
	assert morita_unit_check(l, p, n)


@pytest.mark.parametrize("l,p,n", [(2, 2, 2), (2, 1, 2), (4, 2, 1)])
def test_clifford_checks_pass(l, p, n):
	entries = verify_clifford(l, p, n)

	assert all(entry["status"] == "pass" for entry in entries), entries

	if (l, p, n) == (2, 2, 2):
		assert "clifford:g222-families" in {entry["id"] for entry in entries}
