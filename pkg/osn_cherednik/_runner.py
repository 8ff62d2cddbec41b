import time
import trio
import logging
import functools
from typing import (
	Callable,
	Iterable,
	Optional,
	Sequence,
	Union
)
from osn_cherednik._utils import log_on_error
from osn_cherednik.exact_arith.errors import (
	NonDivisibleError,
	ZeroDenominatorError
)
from osn_cherednik.types import (
	CheckEntry,
	CheckOutcome,
	Counterexample
)


CheckBody = Callable[[], CheckOutcome]
Check = tuple[str, CheckBody]


def passed(detail: Optional[str] = None) -> CheckOutcome:
	"""Builds a passing outcome with an optional note."""

	return {"status": "pass", "counterexample": None, "detail": detail}


def vacuous(detail: Optional[str] = None) -> CheckOutcome:
	"""Builds an outcome for a check that had nothing to test, such as an empty generator set."""

	return {"status": "vacuous", "counterexample": None, "detail": detail}


def failed(counterexample: Optional[Counterexample] = None, detail: Optional[str] = None) -> CheckOutcome:
	"""
	Builds a failing outcome.

	Args:
		counterexample (Optional[Counterexample]): The input on which the two sides differ. Defaults to None.
		detail (Optional[str]): A note for the report. Defaults to None.

	Returns:
		CheckOutcome: The outcome.
	"""

	return {"status": "fail", "counterexample": counterexample, "detail": detail}


def _exception_outcome(exception: Exception) -> CheckOutcome:
	return failed(
			{"input": "<exception>", "lhs": type(exception).__name__, "rhs": str(exception)},
			"the check raised an exception"
	)


def compare_on_inputs(
		inputs: Iterable,
		left: Callable,
		right: Callable,
		describe: Callable = str,
		label: Optional[str] = None
) -> Optional[Counterexample]:
	"""
	Compares two operators on a sequence of inputs and returns the first disagreement.

	Arithmetic failures on an input, such as a divided difference that is not exact, count
	as a disagreement for that input.

	Args:
		inputs (Iterable): The test inputs.
		left (Callable): The left-hand operator.
		right (Callable): The right-hand operator.
		describe (Callable): Printer for inputs and outputs. Defaults to `str`.
		label (Optional[str]): Prefix for the printed input, e.g. a relation instance.

	Returns:
		Optional[Counterexample]: None if the operators agree on every input.
	"""

	for value in inputs:
		try:
			lhs = left(value)
			rhs = right(value)
		except (NonDivisibleError, ZeroDenominatorError) as error:
			lhs, rhs = f"error: {error}", "<not evaluated>"
		else:
			if lhs == rhs:
				continue

		printed = describe(value)

		return {
			"input": f"{label}: {printed}" if label else printed,
			"lhs": lhs if isinstance(lhs, str) else describe(lhs),
			"rhs": rhs if isinstance(rhs, str) else describe(rhs),
		}

	return None


def run_check(check_id: str, body: CheckBody) -> CheckEntry:
	"""
	Runs one check body, timing it and turning exceptions into failures.

	Args:
		check_id (str): The check id.
		body (CheckBody): The check body.

	Returns:
		CheckEntry: The report entry.
	"""

	logging.log(logging.INFO, f"Running {check_id}")

	start = time.perf_counter()
	outcome = log_on_error(body, fallback=_exception_outcome)()
	elapsed_ms = int((time.perf_counter() - start) * 1000)

	if outcome["status"] == "fail":
		logging.log(logging.WARNING, f"{check_id} failed: {outcome['counterexample']}")

	return {
		"id": check_id,
		"status": outcome["status"],
		"counterexample": outcome["counterexample"],
		"detail": outcome["detail"],
		"elapsed_ms": elapsed_ms,
	}


async def _run_all(checks: Sequence[Check], workers: Union[int, float]) -> list[CheckEntry]:
	limiter = trio.CapacityLimiter(workers)
	results: list[Optional[CheckEntry]] = [None] * len(checks)

	async def run_one(index: int, check_id: str, body: CheckBody):
		results[index] = await trio.to_thread.run_sync(functools.partial(run_check, check_id, body), limiter=limiter)

	async with trio.open_nursery() as nursery:
		for index, (check_id, body) in enumerate(checks):
			nursery.start_soon(run_one, index, check_id, body)

	return results


def run_checks(checks: Iterable[Check], workers: Union[int, float] = 8) -> list[CheckEntry]:
	"""
	Runs independent checks in worker threads and returns their entries ordered by id.

	Args:
		checks (Iterable[Check]): Pairs of check id and body.
		workers (Union[int, float]): Total tokens of the trio capacity limiter. Use math.inf for unlimited. Defaults to 8.

	Returns:
		list[CheckEntry]: One entry per check, sorted by id.
	"""

	ordered = sorted(checks, key=lambda check: check[0])

	if not ordered:
		return []

	return trio.run(_run_all, ordered, workers)
