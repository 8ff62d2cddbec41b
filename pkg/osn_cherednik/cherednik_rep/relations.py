from fractions import Fraction
from typing import (
	Iterable,
	Union
)
from osn_cherednik.exact_arith.parameters import (
	ParameterContext,
	ParameterMode
)
from osn_cherednik.exact_arith.polynomials import (
	Coefficient,
	ParamPoly
)
from osn_cherednik._runner import (
	Check,
	run_checks,
	compare_on_inputs,
	failed,
	passed,
	vacuous
)
from osn_cherednik.types import (
	CheckEntry,
	CheckOutcome,
	RuleMutation
)
from osn_cherednik.cherednik_rep.action import get_representation
from osn_cherednik.cherednik_rep.element import monomial_basis
from osn_cherednik.cherednik_rep.types import (
	Generator,
	OperatorSum,
	SIGMA,
	Swap,
	T,
	TAU,
	U
)
from osn_cherednik.cherednik_rep.words import (
	standard_gen_word,
	transposition_word
)


class Relation:
	"""
	An operator identity lhs = rhs to be checked on the polynomial representation.

	Attributes:
		family (str): The relation family, e.g. "u-sigma".
		instance (str): The instance label inside the family, e.g. "u-sigma[0]".
		lhs (OperatorSum): The left-hand side.
		rhs (OperatorSum): The right-hand side.
	"""

	def __init__(self, family: str, instance: str, lhs: OperatorSum, rhs: OperatorSum):
		self.family = family
		self.instance = instance
		self.lhs = lhs
		self.rhs = rhs

	def __str__(self) -> str:
		return f"{self.instance}: {self.lhs} = {self.rhs}"

	def __repr__(self) -> str:
		return f"Relation({self.__str__()})"


class _OperatorBuilder:
	def __init__(self, context: ParameterContext):
		self.context = context
		self.ring = context.ring

	def word(self, *generators: Generator) -> OperatorSum:
		return OperatorSum.word(self.ring, generators)

	def words(self, generators: Iterable[Generator]) -> OperatorSum:
		return OperatorSum.word(self.ring, tuple(generators))

	def scalar(self, value: Union[Coefficient, ParamPoly]) -> OperatorSum:
		return OperatorSum.scalar(self.ring, value)

	def t_power(self, i: int, k: int) -> tuple[Generator, ...]:
		return (T(i),) * (k % self.context.l)

	def p_operator(self, zeta_power: int, i: int) -> OperatorSum:
		"""p(ζ^a t_i) = Σ_k c_k ζ^{ak} t_i^k."""

		return OperatorSum(
				self.ring,
				[
					(self.t_power(i, k), c_k.scale(self.context.zeta(zeta_power * k)))
					for k, c_k in enumerate(self.context.c_vector)
				]
		)

	def pi_operator(self, j: int) -> OperatorSum:
		"""π_{j,j+1} = (1/ℓ) Σ_k t_j^k t_{j+1}^{-k}."""

		l = self.context.l

		return OperatorSum(
				self.ring,
				[
					(self.t_power(j, k) + self.t_power(j + 1, -k), self.ring.constant(Fraction(1, l)))
					for k in range(l)
				]
		)

	def reflection_sum(self, i: int, j: int, weighted: bool) -> OperatorSum:
		"""Σ_k w_k t_i^k t_j^{-k} s_ij with w_k = ζ^{-k} when weighted and 1 otherwise."""

		swap_word = transposition_word(i, j)

		return OperatorSum(
				self.ring,
				[
					(
						self.t_power(i, k) + self.t_power(j, -k) + swap_word,
						self.ring.constant(self.context.zeta(-k) if weighted else 1)
					)
					for k in range(self.context.l)
				]
		)


def alternate_relations(context: ParameterContext) -> dict[str, list[Relation]]:
	"""
	Builds the defining relations of the alternate presentation, grouped by family.

	Relations with indices in Z use i ∈ {0, …, n+1}, which covers both wrap-arounds.
	(n-1, n) stands for r_n and (1, 2) for r_1. Families without instances for the
	given rank map to an empty list.

	Args:
		context (ParameterContext): The algebra context.

	Returns:
		dict[str, list[Relation]]: Family name to relation instances.
	"""

	n = context.n
	build = _OperatorBuilder(context)
	kappa_l = context.kappa.scale(context.l)
	families: dict[str, list[Relation]] = {}

	families["u-swap"] = []
	for j in range(1, n):
		for i in range(1, n + 1):
			image = j + 1 if i == j else j if i == j + 1 else i
			weight = (1 if i == j else 0) - (1 if i == j + 1 else 0)
			rhs = build.word(Swap(j), U(image))

			if weight:
				rhs = rhs + build.pi_operator(j).scale(kappa_l.scale(weight))

			families["u-swap"].append(Relation("u-swap", f"u-swap[{i},{j}]", build.word(U(i), Swap(j)), rhs))

	families["u-t"] = [
		Relation("u-t", f"u-t[{i},{j}]", build.word(U(i), T(j)), build.word(T(j), U(i)))
		for i in range(1, n + 1)
		for j in range(1, n + 1)
	]

	families["sigma-swap"] = [
		Relation("sigma-swap", f"sigma-swap[{j}]", build.word(SIGMA, Swap(j - 1)), build.word(Swap(j), SIGMA))
		for j in range(2, n)
	]
	families["tau-swap"] = [
		Relation("tau-swap", f"tau-swap[{j}]", build.word(TAU, Swap(j)), build.word(Swap(j - 1), TAU))
		for j in range(2, n)
	]

	families["sigma-squared"] = [
		Relation("sigma-squared", "sigma-squared", build.word(SIGMA, SIGMA, Swap(n - 1)), build.word(Swap(1), SIGMA, SIGMA))
	] if n >= 2 else []
	families["tau-squared"] = [
		Relation("tau-squared", "tau-squared", build.word(TAU, TAU, Swap(1)), build.word(Swap(n - 1), TAU, TAU))
	] if n >= 2 else []

	families["sigma-tau"] = [
		Relation(
				"sigma-tau",
				"sigma-tau",
				build.word(SIGMA, TAU),
				build.word(U(1)) - build.p_operator(-1, 1) + build.scalar(context.hbar)
		)
	]
	families["tau-sigma"] = [
		Relation("tau-sigma", "tau-sigma", build.word(TAU, SIGMA), build.word(U(n)) - build.p_operator(0, n))
	]

	families["u-u"] = [
		Relation("u-u", f"u-u[{i},{j}]", build.word(U(i), U(j)), build.word(U(j), U(i)))
		for i in range(1, n + 1)
		for j in range(i + 1, n + 1)
	]

	families["u-sigma"] = [
		Relation("u-sigma", f"u-sigma[{i}]", build.word(U(i), SIGMA), build.word(SIGMA, U(i - 1)))
		for i in range(0, n + 2)
	]
	families["u-tau"] = [
		Relation("u-tau", f"u-tau[{i}]", build.word(U(i), TAU), build.word(TAU, U(i + 1)))
		for i in range(0, n + 2)
	]
	families["t-sigma"] = [
		Relation("t-sigma", f"t-sigma[{i}]", build.word(T(i), SIGMA), build.word(SIGMA, T(i - 1)))
		for i in range(0, n + 2)
	]
	families["t-tau"] = [
		Relation("t-tau", f"t-tau[{i}]", build.word(T(i), TAU), build.word(TAU, T(i + 1)))
		for i in range(0, n + 2)
	]

	if n >= 2:
		correction = OperatorSum(
				context.ring,
				[
					(build.t_power(n, m) + build.t_power(1, -m), context.kappa.scale(context.zeta(m)))
					for m in range(context.l)
				]
		)
		families["tau-swap-sigma"] = [
			Relation(
					"tau-swap-sigma",
					"tau-swap-sigma",
					build.word(TAU, Swap(1), SIGMA),
					build.word(SIGMA, Swap(n - 1), TAU) + correction
			)
		]
	else:
		families["tau-swap-sigma"] = []

	families["swap-involution"] = [
		Relation("swap-involution", f"swap-involution[{i}]", build.word(Swap(i), Swap(i)), build.scalar(1))
		for i in range(1, n)
	]

	return families


def standard_relations(context: ParameterContext) -> dict[str, list[Relation]]:
	"""
	Builds the relations of the standard presentation through the words for x_i and y_i.

	Args:
		context (ParameterContext): The algebra context.

	Returns:
		dict[str, list[Relation]]: Family name to relation instances.
	"""

	n = context.n
	build = _OperatorBuilder(context)
	x = {i: build.words(standard_gen_word("x", i, n)) for i in range(1, n + 1)}
	y = {i: build.words(standard_gen_word("y", i, n)) for i in range(1, n + 1)}
	families: dict[str, list[Relation]] = {}

	families["x-x"] = [
		Relation("x-x", f"x-x[{i},{j}]", x[i] * x[j], x[j] * x[i])
		for i in range(1, n + 1)
		for j in range(i + 1, n + 1)
	]
	families["y-y"] = [
		Relation("y-y", f"y-y[{i},{j}]", y[i] * y[j], y[j] * y[i])
		for i in range(1, n + 1)
		for j in range(i + 1, n + 1)
	]

	families["refln1"] = [
		Relation(
				"refln1",
				f"refln1[{i},{j}]",
				build.word(T(i)) * x[j],
				(x[j] * build.word(T(i))).scale(context.ring.constant(context.zeta(1 if i == j else 0)))
		)
		for i in range(1, n + 1)
		for j in range(1, n + 1)
	]
	families["refln2"] = [
		Relation(
				"refln2",
				f"refln2[{i},{j}]",
				build.word(T(i)) * y[j],
				(y[j] * build.word(T(i))).scale(context.ring.constant(context.zeta(-1 if i == j else 0)))
		)
		for i in range(1, n + 1)
		for j in range(1, n + 1)
	]

	families["com1"] = []
	for i in range(1, n + 1):
		rhs = build.scalar(context.hbar) + build.p_operator(0, i) - build.p_operator(-1, i)

		for j in range(1, n + 1):
			if j != i:
				rhs = rhs + build.reflection_sum(i, j, weighted=False).scale(context.kappa)

		families["com1"].append(Relation("com1", f"com1[{i}]", x[i] * y[i] - y[i] * x[i], rhs))

	families["com2"] = [
		Relation(
				"com2",
				f"com2[{i},{j}]",
				x[i] * y[j] - y[j] * x[i],
				build.reflection_sum(i, j, weighted=True).scale(-context.kappa)
		)
		for i in range(1, n + 1)
		for j in range(1, n + 1)
		if i != j
	]

	return families


def _relation_family_check(context: ParameterContext, relations: list[Relation], degree_bound: int) -> CheckOutcome:
	if not relations:
		return vacuous(f"no instances for n={context.n}")

	representation = get_representation(context)
	inputs = monomial_basis(context, degree_bound)

	for relation in relations:
		counterexample = compare_on_inputs(
				inputs,
				lambda f, relation=relation: representation.act_operator(relation.lhs, f),
				lambda f, relation=relation: representation.act_operator(relation.rhs, f),
				label=relation.instance
		)

		if counterexample is not None:
			return failed(counterexample, f"{relation.instance} fails")

	return passed(f"{len(relations)} instances on {len(inputs)} monomials")


def relation_checks(context: ParameterContext, degree_bound: int) -> list[Check]:
	"""
	Builds one check per relation family of both presentations.

	Check ids are "relation:<family>" for the alternate presentation and
	"standard:<family>" for the standard one.

	Args:
		context (ParameterContext): The algebra context.
		degree_bound (int): Maximal U-degree of tested monomials.

	Returns:
		list[Check]: The checks, ready for `run_checks`.
	"""

	checks = []

	for prefix, families in (("relation", alternate_relations(context)), ("standard", standard_relations(context))):
		for family, relations in families.items():
			checks.append(
					(
						f"{prefix}:{family}",
						lambda relations=relations: _relation_family_check(context, relations, degree_bound)
					)
			)

	return checks


def verify_relations(
		l: int,
		p: int,
		n: int,
		degree_bound: int,
		mode: ParameterMode = "structural",
		mutations: Iterable[RuleMutation] = (),
		workers: Union[int, float] = 8
) -> list[CheckEntry]:
	"""
	Verifies every relation of both presentations on all basis monomials up to a U-degree.

	Args:
		l (int): The order ℓ.
		p (int): The divisor p.
		n (int): The rank.
		degree_bound (int): Maximal U-degree of tested monomials.
		mode (ParameterMode): Parameter mode. Defaults to "structural".
		mutations (Iterable[RuleMutation]): Rule perturbations to enable. Defaults to none.
		workers (Union[int, float]): Trio capacity-limiter tokens. Defaults to 8.

	Returns:
		list[CheckEntry]: One entry per relation family, ordered by id.
	"""

	context = ParameterContext(l, p, n, mode, mutations)

	return run_checks(relation_checks(context, degree_bound), workers)
