"""
Frank t-norm family
===================
T_s(x, y) = log_s(1 + (s^x - 1)(s^y - 1) / (s - 1)),  s in (0, inf)

with the three analytic limits kept as exact branches:

    s = 0    Min(x, y)            (Godel)
    s = 1    x * y                (product)
    s = inf  Max(0, x + y - 1)    (Lukasiewicz)

The t-conorm is the dual 1 - T(1-x, 1-y); the conjugate t-norm of T_s is
T_{1/s}, which also satisfies  x . y = x - T_s(x, 1 - y).

Parameters are stored as ln s, so conjugation is a sign flip and an exact
involution, and a parameter and its conjugate always fall on mirrored
branches.

Only s > 1 is evaluated directly (expm1 / log1p); s < 1 goes through the
difference form against T_{1/s}.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterable, Union

from apis.penta import config
from apis.penta.errors import ConsistencyError, InvalidParameterError, UnitRangeError

logger = logging.getLogger(__name__)


class FrankKind(str, Enum):
    MIN         = "min"
    PRODUCT     = "prod"
    LUKASIEWICZ = "luk"
    GENERAL     = "general"


@dataclass(frozen=True)
class FrankParameter:
    log_s: float

    # ── Constructors ──────────────────────────────────────────────────────────

    @classmethod
    def of(cls, s: float) -> "FrankParameter":
        s = float(s)
        if math.isnan(s) or s < 0:
            raise InvalidParameterError(f"Frank parameter must be in [0, inf], got {s!r}")
        if s == 0:
            return cls(-math.inf)
        if math.isinf(s):
            return cls(math.inf)
        return cls(math.log(s))

    @classmethod
    def minimum(cls) -> "FrankParameter":
        return cls(-math.inf)

    @classmethod
    def product(cls) -> "FrankParameter":
        return cls(0.0)

    @classmethod
    def lukasiewicz(cls) -> "FrankParameter":
        return cls(math.inf)

    @classmethod
    def parse(cls, raw: str) -> "FrankParameter":
        """Accepts min | prod | luk | inf or a non-negative decimal."""
        text = str(raw).strip().lower()
        if text in ("min", "godel"):
            return cls.minimum()
        if text in ("prod", "product"):
            return cls.product()
        if text in ("luk", "lukasiewicz", "inf"):
            return cls.lukasiewicz()
        try:
            value = float(text)
        except ValueError:
            raise InvalidParameterError(
                f"invalid s-spec {raw!r}: expected min, prod, luk or a non-negative number"
            ) from None
        return cls.of(value)

    # ── Properties ────────────────────────────────────────────────────────────

    @property
    def s(self) -> float:
        return math.exp(self.log_s)

    @property
    def kind(self) -> FrankKind:
        if self.log_s < config.LOG_MIN_BRANCH:
            return FrankKind.MIN
        if self.log_s > config.LOG_LUK_BRANCH:
            return FrankKind.LUKASIEWICZ
        if abs(self.log_s) < config.PRODUCT_BAND:
            return FrankKind.PRODUCT
        return FrankKind.GENERAL

    @property
    def label(self) -> str:
        kind = self.kind
        if kind is FrankKind.GENERAL:
            return f"{self.s:g}"
        return kind.value

    def conjugate(self) -> "FrankParameter":
        return FrankParameter(-self.log_s)

    def __str__(self) -> str:
        return self.label


ParamLike = Union[FrankParameter, float, int]


def as_parameter(s: ParamLike) -> FrankParameter:
    if isinstance(s, FrankParameter):
        return s
    return FrankParameter.of(s)


def unit_value(x: float, name: str = "value") -> float:
    """Validate a raw float as a membership grade in [0,1]."""
    try:
        v = float(x)
    except (TypeError, ValueError):
        raise UnitRangeError(name, x) from None
    if not (0.0 <= v <= 1.0):
        raise UnitRangeError(name, v)
    return v


def _clamp_unit(value: float, where: str) -> float:
    if 0.0 <= value <= 1.0:
        return value
    excess = -value if value < 0.0 else value - 1.0
    if excess > config.CLAMP_DRIFT:
        raise ConsistencyError(f"{where} produced {value!r}, outside [0,1] beyond float drift")
    logger.debug("clamping %s result %r into [0,1]", where, value)
    return 0.0 if value < 0.0 else 1.0


def _frank_above_one(ln_s: float, x: float, y: float) -> float:
    """General Frank t-norm for ln s > 0, where the log1p argument stays positive."""
    ratio = math.expm1(x * ln_s) * math.expm1(y * ln_s) / math.expm1(ln_s)
    return math.log1p(ratio) / ln_s


# ── Operations ────────────────────────────────────────────────────────────────

def tnorm(s: ParamLike, x: float, y: float) -> float:
    p = as_parameter(s)
    x = unit_value(x, "x")
    y = unit_value(y, "y")

    if x == 0.0 or y == 0.0:
        return 0.0
    if x == 1.0:
        return y
    if y == 1.0:
        return x

    kind = p.kind
    if kind is FrankKind.MIN:
        return min(x, y)
    if kind is FrankKind.PRODUCT:
        return x * y
    if kind is FrankKind.LUKASIEWICZ:
        return max(0.0, x + y - 1.0)

    ln_s = p.log_s
    if ln_s < 0.0:
        # reflected: T_s(x, y) = x - T_1/s(x, 1 - y)
        return _clamp_unit(x - _frank_above_one(-ln_s, x, 1.0 - y), "tnorm")
    return _clamp_unit(_frank_above_one(ln_s, x, y), "tnorm")


def tconorm(s: ParamLike, x: float, y: float) -> float:
    p = as_parameter(s)
    x = unit_value(x, "x")
    y = unit_value(y, "y")

    kind = p.kind
    if kind is FrankKind.MIN:
        return max(x, y)
    if kind is FrankKind.PRODUCT:
        return x + y - x * y
    if kind is FrankKind.LUKASIEWICZ:
        return min(1.0, x + y)
    return _clamp_unit(1.0 - tnorm(p, 1.0 - x, 1.0 - y), "tconorm")


def conjugate_tnorm(s: ParamLike, x: float, y: float) -> float:
    return tnorm(as_parameter(s).conjugate(), x, y)


def tnorm_many(s: ParamLike, values: Iterable[float]) -> float:
    """Left fold of tnorm; the empty fold is the identity 1."""
    p = as_parameter(s)
    return reduce(lambda acc, v: tnorm(p, acc, v), values, 1.0)
