"""
Crisp five-valued logic: true t, indeterminate i, undefined u,
contradictory c and false f.

OR, AND and NOT are table lookups; the tables are normative data. i, u and c
are their own negations, and i absorbs u and c under both OR and AND.

The expression language is

    expr  := conj ('|' conj)*
    conj  := unary ('&' unary)*
    unary := '!' unary | '(' expr ')' | T | I | U | C | F | variable

with variables matching [a-z][a-z0-9_]*. Both binary operators are
left-associative and bind looser than '!'.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedToken

from apis.penta import config
from apis.penta.errors import (
    ExpressionSyntaxError,
    TooManyVariablesError,
    UnboundVariableError,
    UnknownCharacterError,
)

logger = logging.getLogger(__name__)


class PentaTruthValue(str, Enum):
    T = "t"
    I = "i"
    U = "u"
    C = "c"
    F = "f"

    @classmethod
    def parse(cls, letter: str) -> "PentaTruthValue":
        try:
            return cls(str(letter).strip().lower())
        except ValueError:
            raise ExpressionSyntaxError(str(letter), 0, frozenset({"one of T, I, U, C, F"})) from None

    @property
    def symbol(self) -> str:
        return self.value.upper()

    def __or__(self, other: "PentaTruthValue") -> "PentaTruthValue":
        return or5(self, other)

    def __and__(self, other: "PentaTruthValue") -> "PentaTruthValue":
        return and5(self, other)

    def __invert__(self) -> "PentaTruthValue":
        return not5(self)

    def __str__(self) -> str:
        return self.value


VALUES: Tuple[PentaTruthValue, ...] = tuple(PentaTruthValue(v) for v in config.VALUE_ORDER)


# ─────────────────────────────────────────────────────────────────────────────
# CONNECTIVES
# Rows and columns follow VALUE_ORDER (t, i, u, c, f).
# ─────────────────────────────────────────────────────────────────────────────

_OR_ROWS = {
    "t": "ttttt",
    "i": "tiiii",
    "u": "tiuii",
    "c": "tiici",
    "f": "tiiif",
}

_AND_ROWS = {
    "t": "tiiif",
    "i": "iiiif",
    "u": "iiuif",
    "c": "iiicf",
    "f": "fffff",
}

_NOT = {"t": "f", "i": "i", "u": "u", "c": "c", "f": "t"}


def _table(rows: Mapping[str, str]) -> Dict[Tuple[PentaTruthValue, PentaTruthValue], PentaTruthValue]:
    return {
        (PentaTruthValue(a), PentaTruthValue(b)): PentaTruthValue(rows[a][j])
        for a in config.VALUE_ORDER
        for j, b in enumerate(config.VALUE_ORDER)
    }


OR_TABLE  = _table(_OR_ROWS)
AND_TABLE = _table(_AND_ROWS)
NOT_TABLE = {PentaTruthValue(a): PentaTruthValue(b) for a, b in _NOT.items()}


def or5(a: PentaTruthValue, b: PentaTruthValue) -> PentaTruthValue:
    return OR_TABLE[(PentaTruthValue(a), PentaTruthValue(b))]


def and5(a: PentaTruthValue, b: PentaTruthValue) -> PentaTruthValue:
    return AND_TABLE[(PentaTruthValue(a), PentaTruthValue(b))]


def not5(a: PentaTruthValue) -> PentaTruthValue:
    return NOT_TABLE[PentaTruthValue(a)]


# ─────────────────────────────────────────────────────────────────────────────
# SYNTAX TREE
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Literal:
    value: PentaTruthValue


@dataclass(frozen=True)
class Not:
    child: "LogicExpr"


@dataclass(frozen=True)
class And:
    left: "LogicExpr"
    right: "LogicExpr"


@dataclass(frozen=True)
class Or:
    left: "LogicExpr"
    right: "LogicExpr"


LogicExpr = Union[Variable, Literal, Not, And, Or]
Assignment = Dict[str, PentaTruthValue]


def free_variables(expr: LogicExpr) -> FrozenSet[str]:
    if isinstance(expr, Variable):
        return frozenset({expr.name})
    if isinstance(expr, Literal):
        return frozenset()
    if isinstance(expr, Not):
        return free_variables(expr.child)
    return free_variables(expr.left) | free_variables(expr.right)


def _precedence(expr: LogicExpr) -> int:
    if isinstance(expr, Or):
        return 1
    if isinstance(expr, And):
        return 2
    return 3


def pretty(expr: LogicExpr) -> str:
    """Print with the fewest parentheses that re-parse to the same tree."""
    if isinstance(expr, Variable):
        return expr.name
    if isinstance(expr, Literal):
        return expr.value.symbol
    if isinstance(expr, Not):
        inner = pretty(expr.child)
        return f"!({inner})" if _precedence(expr.child) < 3 else f"!{inner}"

    prec = _precedence(expr)
    op = " | " if isinstance(expr, Or) else " & "
    left = pretty(expr.left)
    right = pretty(expr.right)
    if _precedence(expr.left) < prec:
        left = f"({left})"
    if _precedence(expr.right) <= prec:
        right = f"({right})"
    return f"{left}{op}{right}"


# ─────────────────────────────────────────────────────────────────────────────
# PARSER
# ─────────────────────────────────────────────────────────────────────────────

_GRAMMAR = r"""
?start: disj

?disj: conj
     | disj "|" conj        -> or_

?conj: unary
     | conj "&" unary       -> and_

?unary: "!" unary           -> not_
      | "(" disj ")"
      | LITERAL             -> literal
      | VARIABLE            -> variable

LITERAL: /[TIUCF]/
VARIABLE: /[a-z][a-z0-9_]*/

%import common.WS
%ignore WS
"""

_OPERAND_TERMINALS = {"BANG", "LPAR", "LITERAL", "VARIABLE"}
_TERMINAL_NAMES = {
    "VBAR":      "'|'",
    "AMPERSAND": "'&'",
    "RPAR":      "')'",
    "$END":      "end of input",
}


@v_args(inline=True)
class _ToTree(Transformer):
    def or_(self, left, right):
        return Or(left, right)

    def and_(self, left, right):
        return And(left, right)

    def not_(self, child):
        return Not(child)

    def literal(self, token):
        return Literal(PentaTruthValue(str(token).lower()))

    def variable(self, token):
        return Variable(str(token))


_parser = Lark(_GRAMMAR, parser="lalr", lexer="basic", transformer=_ToTree())


def _describe_expected(expected) -> FrozenSet[str]:
    names = set()
    for term in expected:
        if term in _OPERAND_TERMINALS:
            names.add("operand")
        else:
            names.add(_TERMINAL_NAMES.get(term, term))
    return frozenset(names)


def parse_expr(text: str) -> LogicExpr:
    try:
        return _parser.parse(text)
    except UnexpectedCharacters as e:
        raise UnknownCharacterError(text, e.pos_in_stream, e.char) from None
    except UnexpectedToken as e:
        token = e.token
        if token.type == "$END" or token.start_pos is None:
            offset = len(text)
        else:
            offset = token.start_pos
        raise ExpressionSyntaxError(text, offset, _describe_expected(e.expected)) from None
    except UnexpectedEOF as e:
        raise ExpressionSyntaxError(text, len(text), _describe_expected(e.expected)) from None


_BINDING = re.compile(r"\s*([a-z][a-z0-9_]*)\s*=\s*([A-Za-z])\s*$")


def parse_assignment(text: str) -> Assignment:
    """Parse ``"a=T,b=C"`` into an assignment."""
    env: Assignment = {}
    if not text.strip():
        return env
    offset = 0
    for chunk in text.split(","):
        m = _BINDING.match(chunk)
        if m is None or m.group(2).lower() not in config.VALUE_ORDER:
            raise ExpressionSyntaxError(text, offset, frozenset({"name=VALUE"}))
        env[m.group(1)] = PentaTruthValue(m.group(2).lower())
        offset += len(chunk) + 1
    return env


# ─────────────────────────────────────────────────────────────────────────────
# EVALUATION
# ─────────────────────────────────────────────────────────────────────────────

def eval_expr(expr: LogicExpr, env: Mapping[str, PentaTruthValue]) -> PentaTruthValue:
    if isinstance(expr, Variable):
        try:
            return PentaTruthValue(env[expr.name])
        except KeyError:
            raise UnboundVariableError(expr.name) from None
    if isinstance(expr, Literal):
        return expr.value
    if isinstance(expr, Not):
        return not5(eval_expr(expr.child, env))
    if isinstance(expr, And):
        return and5(eval_expr(expr.left, env), eval_expr(expr.right, env))
    return or5(eval_expr(expr.left, env), eval_expr(expr.right, env))


def truth_table(
    expr: LogicExpr, max_vars: Optional[int] = None
) -> List[Tuple[Assignment, PentaTruthValue]]:
    """All 5^n assignments, variables sorted, values in t,i,u,c,f order."""
    cap = config.TRUTH_TABLE_MAX_VARS if max_vars is None else max_vars
    names = sorted(free_variables(expr))
    if len(names) > cap:
        raise TooManyVariablesError(len(names), cap)

    logger.debug("truth table over %d variable(s): %s", len(names), ", ".join(names))
    rows = []
    for combo in itertools.product(VALUES, repeat=len(names)):
        env = dict(zip(names, combo))
        rows.append((env, eval_expr(expr, env)))
    return rows
