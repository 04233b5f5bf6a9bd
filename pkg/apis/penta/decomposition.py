"""
Bipolar -> penta-valued decomposition
=====================================
A bipolar pair (x, y) of membership x and non-membership y is split into
five descriptors that sum to 1:

    tau   = x . (1-y)                       truth
    phi   = (1-x) . y                       falsity
    pi    = ((1-x) o (1-y)) . ((1-x) + (1-y))   undefinedness
    kappa = (x o y) . (x + y)               contradiction
    iota  = 2 (1-x) o (1-y) o x o y         indeterminacy

where o is the Frank t-norm, + its t-conorm and . the conjugate t-norm.
With s = 0 (Min / Max / Lukasiewicz conjugate) this reduces to

    tau = (x-y)+   phi = (y-x)+   pi = (1-x-y)+   kappa = (x+y-1)+
    iota = 1 - |x-y| - |x+y-1|

and the inverse is  x = tau + kappa + iota/2,  y = phi + kappa + iota/2.

In a bipolar preference reading x is the agreement S+ and y the
non-agreement S-; the descriptors are then the strict-truth, falsity,
uncertainty, contradiction and indeterminacy parts of the preference.
"""

import logging
from typing import Tuple, Union

from apis.penta import config
from apis.penta.algebra import (
    ParamLike,
    as_parameter,
    conjugate_tnorm,
    tconorm,
    tnorm,
    tnorm_many,
)
from apis.penta.errors import ConsistencyError, PartitionError, UnitRangeError
from apis.penta.models import BipolarPair, PentaCoords

logger = logging.getLogger(__name__)

PairLike = Union[BipolarPair, Tuple[float, float]]


def _as_pair(pair: PairLike) -> BipolarPair:
    if isinstance(pair, BipolarPair):
        return pair
    x, y = pair
    return BipolarPair(x=x, y=y)


def _residual(tau: float, phi: float, kappa: float, pi: float) -> float:
    iota = 1.0 - tau - phi - kappa - pi
    if iota < 0.0:
        if iota < -config.TOLERANCE:
            raise ConsistencyError(f"negative indeterminacy residual {iota!r}")
        if iota < -config.CLAMP_DRIFT:
            logger.debug("clamping indeterminacy residual %r to 0", iota)
        iota = 0.0
    return iota


def iota_direct(pair: PairLike, s: ParamLike) -> float:
    """2 * ((1-x) o (1-y) o x o y), folded left to right."""
    p = _as_pair(pair)
    return 2.0 * tnorm_many(s, (1.0 - p.x, 1.0 - p.y, p.x, p.y))


def decompose(pair: PairLike, s: ParamLike) -> PentaCoords:
    p = _as_pair(pair)
    param = as_parameter(s)
    x, y = p.x, p.y
    xb, yb = 1.0 - x, 1.0 - y

    tau   = conjugate_tnorm(param, x, yb)
    phi   = conjugate_tnorm(param, xb, y)
    pi    = conjugate_tnorm(param, tnorm(param, xb, yb), tconorm(param, xb, yb))
    kappa = conjugate_tnorm(param, tnorm(param, x, y), tconorm(param, x, y))
    iota  = _residual(tau, phi, kappa, pi)

    direct = iota_direct(p, param)
    if abs(direct - iota) > config.TOLERANCE:
        logger.warning(
            "indeterminacy mismatch at (x=%r, y=%r, s=%s): residual %.12g, direct %.12g",
            x, y, param, iota, direct,
        )

    return PentaCoords(tau=tau, phi=phi, kappa=kappa, pi=pi, iota=iota)


def decompose_lg(pair: PairLike) -> PentaCoords:
    """Closed form of decompose at s = 0."""
    p = _as_pair(pair)
    x, y = p.x, p.y
    tau   = max(0.0, x - y)
    phi   = max(0.0, y - x)
    kappa = max(0.0, x + y - 1.0)
    pi    = max(0.0, 1.0 - x - y)
    return PentaCoords(tau=tau, phi=phi, kappa=kappa, pi=pi, iota=_residual(tau, phi, kappa, pi))


def check_partition(tau: float, phi: float, kappa: float, pi: float, iota: float) -> None:
    for name, value in (("tau", tau), ("phi", phi), ("kappa", kappa), ("pi", pi), ("iota", iota)):
        if not (0.0 <= value <= 1.0):
            raise UnitRangeError(name, value)
    total = tau + phi + kappa + pi + iota
    if abs(total - 1.0) > config.TOLERANCE:
        raise PartitionError(total)


def compose(coords: PentaCoords) -> BipolarPair:
    check_partition(*coords.as_tuple())
    half = coords.iota / 2.0
    x = coords.tau + coords.kappa + half
    y = coords.phi + coords.kappa + half
    return BipolarPair(x=min(1.0, max(0.0, x)), y=min(1.0, max(0.0, y)))


def marginals(coords: PentaCoords) -> Tuple[float, float]:
    """(tau - phi, 1 + kappa - pi); equal to (x - y, x + y) on the s = 0 form."""
    return (coords.tau - coords.phi, 1.0 + coords.kappa - coords.pi)
