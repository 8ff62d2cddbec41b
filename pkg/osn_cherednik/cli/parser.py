import re
from fractions import Fraction
from typing import Optional
from osn_cherednik.exact_arith.parameters import ParameterContext
from osn_cherednik.cherednik_rep.element import PolyRepElement
from osn_cherednik.cherednik_rep.types import (
	SIGMA,
	Swap,
	T,
	TAU,
	U,
	Word
)
from osn_cherednik.cherednik_rep.words import (
	standard_gen_word,
	word_power
)
from osn_cherednik.cli.errors import ParsingError


_TOKEN_PATTERN = re.compile(r"(?P<space>\s+)|(?P<name>[A-Za-z]+\d*)|(?P<int>\d+)|(?P<op>[-+*^/()])")
_INDEXED_NAME = re.compile(r"([A-Za-z]+)(\d*)")


class Token:
	__slots__ = ("kind", "text", "line", "column")

	def __init__(self, kind: str, text: str, line: int, column: int):
		self.kind = kind
		self.text = text
		self.line = line
		self.column = column

	def __repr__(self) -> str:
		return f"Token({self.kind}, {self.text!r}, {self.line}:{self.column})"


def tokenize(text: str) -> list[Token]:
	"""
	Splits an expression into name, integer and operator tokens.

	Args:
		text (str): The expression.

	Returns:
		list[Token]: The tokens followed by an "end" token.

	Raises:
		ParsingError: On a character that starts no token.
	"""

	tokens = []
	line, line_start, position = 1, 0, 0

	while position < len(text):
		match = _TOKEN_PATTERN.match(text, position)
		column = position - line_start + 1

		if match is None:
			raise ParsingError(f"unexpected character {text[position]!r}", line, column)

		if match.lastgroup == "space":
			for offset, character in enumerate(match.group(), start=position):
				if character == "\n":
					line += 1
					line_start = offset + 1
		else:
			tokens.append(Token(match.lastgroup, match.group(), line, column))

		position = match.end()

	tokens.append(Token("end", "", line, position - line_start + 1))

	return tokens


class _TokenStream:
	def __init__(self, text: str):
		self.tokens = tokenize(text)
		self.position = 0

	def peek(self) -> Token:
		return self.tokens[self.position]

	def advance(self) -> Token:
		token = self.tokens[self.position]
		self.position += 1

		return token

	def accept(self, text: str) -> Optional[Token]:
		if self.peek().kind == "op" and self.peek().text == text:
			return self.advance()

		return None

	def expect(self, text: str) -> Token:
		token = self.accept(text)

		if token is None:
			raise self.error(f"expected {text!r}")

		return token

	def error(self, message: str, token: Optional[Token] = None) -> ParsingError:
		token = token or self.peek()
		found = token.text if token.kind != "end" else "end of input"

		return ParsingError(f"{message}, found {found!r}", token.line, token.column)

	def integer(self) -> int:
		sign = -1 if self.accept("-") else 1
		token = self.advance()

		if token.kind != "int":
			raise self.error("expected an integer", token)

		return sign * int(token.text)

	def at_end(self) -> bool:
		return self.peek().kind == "end"


def _split_name(token: Token) -> tuple[str, Optional[int]]:
	prefix, digits = _INDEXED_NAME.fullmatch(token.text).groups()

	return prefix, int(digits) if digits else None


class _WordParser:
	"""
	word   := "1" | factor (["*"] factor)*
	factor := atom ["^" int]
	atom   := t<i> | u<i> | s<i> | sig | tau | x<i> | y<i> | "(" word ")"
	"""

	def __init__(self, text: str, n: int):
		self.stream = _TokenStream(text)
		self.n = n

	def parse(self) -> Word:
		token = self.stream.peek()

		if token.kind == "int" and token.text == "1":
			self.stream.advance()

			if not self.stream.at_end():
				raise self.stream.error("unexpected token after the empty word")

			return ()

		word = self.word()

		if not self.stream.at_end():
			raise self.stream.error("unexpected token")

		return word

	def word(self) -> Word:
		word = self.factor()

		while True:
			if self.stream.accept("*"):
				word += self.factor()
			elif self.stream.peek().kind == "name" or (self.stream.peek().kind == "op" and self.stream.peek().text == "("):
				word += self.factor()
			else:
				return word

	def factor(self) -> Word:
		atom = self.atom()

		if self.stream.accept("^"):
			token = self.stream.peek()
			exponent = self.stream.integer()

			if exponent < 0:
				raise self.stream.error("negative powers are not words", token)

			return word_power(atom, exponent)

		return atom

	def _index(self, token: Token, index: Optional[int], upper: int) -> int:
		if index is None or not 1 <= index <= upper:
			raise ParsingError(f"index of {token.text!r} must lie in 1..{upper}", token.line, token.column)

		return index

	def atom(self) -> Word:
		if self.stream.accept("("):
			word = self.word()
			self.stream.expect(")")

			return word

		token = self.stream.advance()

		if token.kind != "name":
			raise self.stream.error("expected a generator", token)

		prefix, index = _split_name(token)

		if prefix in ("sig", "tau") and index is None:
			return (SIGMA,) if prefix == "sig" else (TAU,)

		if prefix == "t":
			return (T(self._index(token, index, self.n)),)

		if prefix == "u":
			return (U(self._index(token, index, self.n)),)

		if prefix == "s":
			return (Swap(self._index(token, index, self.n - 1)),)

		if prefix in ("x", "y"):
			return standard_gen_word(prefix, self._index(token, index, self.n), self.n)

		raise ParsingError(f"unknown generator {token.text!r}", token.line, token.column)


def parse_word(expr: str, n: int) -> Word:
	"""
	Parses a word of the alternate presentation.

	Juxtaposition and "*" compose, with the leftmost factor acting last. x<i> and y<i> expand
	through `standard_gen_word`. "1" is the empty word.

	Args:
		expr (str): The expression, e.g. "sig*s1*tau" or "x1^2 sig".
		n (int): The rank.

	Returns:
		Word: The parsed word.

	Raises:
		ParsingError: On an unknown atom, an index out of range or a malformed power.
	"""

	return _WordParser(expr, n).parse()


class _PolyParser:
	"""
	expr    := term (("+" | "-") term)*
	term    := unary ("*" unary | "/" int)*
	unary   := "-" unary | power
	power   := primary ["^" int]
	primary := int | U<i> | T<i> | h | k | s<m> | z | "(" expr ")"

	Negative powers are allowed for T<i> and z only.
	"""

	def __init__(self, text: str, context: ParameterContext):
		self.stream = _TokenStream(text)
		self.context = context

	def parse(self) -> PolyRepElement:
		value = self.expr()

		if not self.stream.at_end():
			raise self.stream.error("unexpected token")

		return value

	def expr(self) -> PolyRepElement:
		value = self.term()

		while True:
			if self.stream.accept("+"):
				value = value + self.term()
			elif self.stream.accept("-"):
				value = value - self.term()
			else:
				return value

	def term(self) -> PolyRepElement:
		value = self.unary()

		while True:
			if self.stream.accept("*"):
				value = value * self.unary()
			elif self.stream.accept("/"):
				token = self.stream.peek()
				divisor = self.stream.integer()

				if divisor == 0:
					raise self.stream.error("division by zero", token)

				value = value.scale(Fraction(1, divisor))
			else:
				return value

	def unary(self) -> PolyRepElement:
		if self.stream.accept("-"):
			return -self.unary()

		return self.power()

	def power(self) -> PolyRepElement:
		base, invertible = self.primary()

		if not self.stream.accept("^"):
			return base

		token = self.stream.peek()
		exponent = self.stream.integer()

		if exponent < 0:
			if invertible is None:
				raise self.stream.error("only T<i> and z have negative powers", token)

			base, exponent = invertible, -exponent

		result = PolyRepElement.one(self.context)

		for _ in range(exponent):
			result = result * base

		return result

	def primary(self) -> tuple[PolyRepElement, Optional[PolyRepElement]]:
		"""Returns the value and, for T<i> and z, its inverse."""

		context = self.context

		if self.stream.accept("("):
			value = self.expr()
			self.stream.expect(")")

			return value, None

		token = self.stream.advance()

		if token.kind == "int":
			return PolyRepElement.from_poly(context, context.ring.constant(int(token.text))), None

		if token.kind != "name":
			raise self.stream.error("expected a number or a variable", token)

		prefix, index = _split_name(token)

		if prefix == "z" and index is None:
			return (
				PolyRepElement.from_poly(context, context.ring.constant(context.zeta(1))),
				PolyRepElement.from_poly(context, context.ring.constant(context.zeta(-1)))
			)

		if prefix in ("h", "k") and index is None:
			return PolyRepElement.from_poly(context, context.hbar if prefix == "h" else context.kappa), None

		if prefix == "s" and index is not None:
			return PolyRepElement.from_poly(context, context.s(index)), None

		if prefix in ("U", "T") and index is not None:
			if not 1 <= index <= context.n:
				raise ParsingError(f"index of {token.text!r} must lie in 1..{context.n}", token.line, token.column)

			if prefix == "U":
				return PolyRepElement.from_poly(context, context.U(index)), None

			texp = [0] * context.n
			texp[index - 1] = 1
			forward = PolyRepElement.monomial(context, (0,) * context.n, tuple(texp))
			texp[index - 1] = -1

			return forward, PolyRepElement.monomial(context, (0,) * context.n, tuple(texp))

		raise ParsingError(f"unknown atom {token.text!r}", token.line, token.column)


def parse_poly(expr: str, context: ParameterContext) -> PolyRepElement:
	"""
	Parses an element of the polynomial representation.

	Args:
		expr (str): The expression, e.g. "U1^2 - h*T1*T2".
		context (ParameterContext): The algebra context.

	Returns:
		PolyRepElement: The parsed element, not yet checked against the p-subring.

	Raises:
		ParsingError: On an unknown atom, an index out of range, a malformed power or division by zero.
	"""

	return _PolyParser(expr, context).parse()
