import sys
import logging
import traceback
import functools
from typing import (
	Any,
	Callable,
	Optional
)


def current_exception_text() -> str:
	"""Formats the traceback of the exception currently being handled."""

	exception_type, exception_value, exception_traceback = sys.exc_info()

	return "".join(traceback.format_exception(exception_type, exception_value, exception_traceback))


def log_on_error(
		func: Optional[Callable] = None,
		*,
		fallback: Optional[Callable[[Exception], Any]] = None
) -> Callable:
	"""
	Decorator to log any exception raised by the decorated function.

	The full traceback is logged at the ERROR level. The wrapper then returns
	`fallback(exception)` when a fallback is given and None otherwise. Usable both as
	`@log_on_error` and as `@log_on_error(fallback=...)`.

	Args:
		func (Optional[Callable]): The function to be decorated.
		fallback (Optional[Callable[[Exception], Any]]): Builds the return value from the exception.

	Returns:
		Callable: The wrapped function, or a decorator when called with keyword arguments only.
	"""

	def decorator(inner: Callable) -> Callable:
		@functools.wraps(inner)
		def wrapper(*args, **kwargs):
			try:
				return inner(*args, **kwargs)
			except (Exception,) as exception:
				logging.log(logging.ERROR, current_exception_text())

				return fallback(exception) if fallback is not None else None

		return wrapper

	if func is not None:
		return decorator(func)

	return decorator
