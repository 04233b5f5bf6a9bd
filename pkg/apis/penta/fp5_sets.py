"""
FP5 penta-valued fuzzy sets over a finite, ordered universe.

Each element carries truth tau, falsity phi, contradiction kappa and
undefinedness pi with tau + phi + kappa + pi <= 1; indeterminacy iota is the
remainder and is never stored.

Union and intersection apply a dual (t-conorm, t-norm) couple element-wise:

    union:         tau = tau_a V tau_b,  phi = phi_a ^ phi_b,  pi, kappa via ^
    intersection:  tau = tau_a ^ tau_b,  phi = phi_a V phi_b,  pi, kappa via ^
    complement:    tau <-> phi

With the Max/Min couple these reproduce the crisp OR / AND / NOT tables on
the five vertices T, F, C, U, I.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from apis.penta import config
from apis.penta.algebra import FrankKind, FrankParameter, ParamLike, tconorm, tnorm, unit_value
from apis.penta.decomposition import check_partition, decompose, decompose_lg
from apis.penta.errors import (
    ConstraintViolationError,
    InvalidParameterError,
    UniverseMismatchError,
)
from apis.penta.models import (
    BipolarInputSet,
    BipolarRecord,
    FP5Element,
    FP5Set,
    PentaCoords,
    SetKind,
    Violation,
)

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────────────────────
# NORM COUPLES
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class NormCouple:
    """A Frank t-norm together with its dual t-conorm."""
    name: str
    param: FrankParameter

    @classmethod
    def parse(cls, raw: str) -> "NormCouple":
        text = str(raw).strip().lower()
        if text == "minmax":
            return MINMAX
        if text == "prod":
            return PRODUCT_PROBSUM
        if text == "luk":
            return LUKASIEWICZ_BOUNDED
        if text.startswith("frank:"):
            return cls.frank(FrankParameter.parse(text[len("frank:"):]))
        raise InvalidParameterError(
            f"invalid couple {raw!r}: expected minmax, prod, luk or frank:<s>"
        )

    @classmethod
    def frank(cls, s: ParamLike) -> "NormCouple":
        param = s if isinstance(s, FrankParameter) else FrankParameter.of(s)
        named = {
            FrankKind.MIN: MINMAX,
            FrankKind.PRODUCT: PRODUCT_PROBSUM,
            FrankKind.LUKASIEWICZ: LUKASIEWICZ_BOUNDED,
        }.get(param.kind)
        return named if named is not None else cls(f"frank:{param.label}", param)

    def tnorm(self, x: float, y: float) -> float:
        return tnorm(self.param, x, y)

    def tconorm(self, x: float, y: float) -> float:
        return tconorm(self.param, x, y)


MINMAX              = NormCouple("minmax", FrankParameter.minimum())
PRODUCT_PROBSUM     = NormCouple("prod", FrankParameter.product())
LUKASIEWICZ_BOUNDED = NormCouple("luk", FrankParameter.lukasiewicz())


# ─────────────────────────────────────────────────────────────────────────────
# SET OPERATIONS
# ─────────────────────────────────────────────────────────────────────────────

def _require_same_universe(a: FP5Set, b: FP5Set) -> None:
    ua, ub = a.universe, b.universe
    for ea, eb in zip(ua, ub):
        if ea != eb:
            raise UniverseMismatchError(ea)
    if len(ua) != len(ub):
        longer = ua if len(ua) > len(ub) else ub
        raise UniverseMismatchError(longer[min(len(ua), len(ub))])


def _checked_element(element: str, tau: float, phi: float, kappa: float, pi: float) -> FP5Element:
    total = tau + phi + kappa + pi
    if total > 1.0 + config.TOLERANCE:
        raise ConstraintViolationError(
            element,
            f"tau+phi+kappa+pi = {total:.12g} exceeds 1",
            {"tau": tau, "phi": phi, "kappa": kappa, "pi": pi},
        )
    return FP5Element(element=element, tau=tau, phi=phi, kappa=kappa, pi=pi)


def _combine(
    a: FP5Set,
    b: FP5Set,
    truth: Callable[[float, float], float],
    falsity: Callable[[float, float], float],
    couple: NormCouple,
) -> FP5Set:
    _require_same_universe(a, b)
    out = []
    for ea, eb in zip(a.elements, b.elements):
        out.append(_checked_element(
            ea.element,
            truth(ea.tau, eb.tau),
            falsity(ea.phi, eb.phi),
            couple.tnorm(ea.kappa, eb.kappa),
            couple.tnorm(ea.pi, eb.pi),
        ))
    return FP5Set(elements=tuple(out))


def union(a: FP5Set, b: FP5Set, couple: NormCouple = MINMAX) -> FP5Set:
    logger.debug("union of %d element(s) under %s", len(a), couple.name)
    return _combine(a, b, couple.tconorm, couple.tnorm, couple)


def intersection(a: FP5Set, b: FP5Set, couple: NormCouple = MINMAX) -> FP5Set:
    logger.debug("intersection of %d element(s) under %s", len(a), couple.name)
    return _combine(a, b, couple.tnorm, couple.tconorm, couple)


def complement(a: FP5Set) -> FP5Set:
    return FP5Set(elements=tuple(
        FP5Element(element=e.element, tau=e.phi, phi=e.tau, kappa=e.kappa, pi=e.pi)
        for e in a.elements
    ))


# ─────────────────────────────────────────────────────────────────────────────
# TRANSLATORS
# ─────────────────────────────────────────────────────────────────────────────

def _element_from_coords(element: str, coords: PentaCoords) -> FP5Element:
    return FP5Element(
        element=element, tau=coords.tau, phi=coords.phi, kappa=coords.kappa, pi=coords.pi
    )


def from_bipolar(data: BipolarInputSet, s: Optional[ParamLike] = None) -> FP5Set:
    """Element-wise decomposition; the closed s = 0 form unless s is given."""
    out = []
    for r in data.records:
        coords = decompose_lg((r.mu, r.nu)) if s is None else decompose((r.mu, r.nu), s)
        out.append(_element_from_coords(r.element, coords))
    return FP5Set(elements=tuple(out))


def from_fuzzy(memberships: Mapping[str, float]) -> FP5Set:
    """tau = (2mu-1)+, phi = (1-2mu)+, kappa = pi = 0."""
    out = []
    for element, mu in memberships.items():
        mu = unit_value(mu, "mu")
        out.append(FP5Element(
            element=element,
            tau=max(0.0, 2.0 * mu - 1.0),
            phi=max(0.0, 1.0 - 2.0 * mu),
            kappa=0.0,
            pi=0.0,
        ))
    return FP5Set(elements=tuple(out))


def from_intuitionistic(data: BipolarInputSet) -> FP5Set:
    out = []
    for r in data.records:
        if r.mu + r.nu > 1.0 + config.TOLERANCE:
            raise ConstraintViolationError(
                r.element, f"mu+nu = {r.mu + r.nu:.12g} exceeds 1", {"mu": r.mu, "nu": r.nu}
            )
        out.append(FP5Element(
            element=r.element,
            tau=max(0.0, r.mu - r.nu),
            phi=max(0.0, r.nu - r.mu),
            kappa=0.0,
            pi=max(0.0, 1.0 - r.mu - r.nu),
        ))
    return FP5Set(elements=tuple(out))


def from_paraconsistent(data: BipolarInputSet) -> FP5Set:
    out = []
    for r in data.records:
        if r.mu + r.nu < 1.0 - config.TOLERANCE:
            raise ConstraintViolationError(
                r.element, f"mu+nu = {r.mu + r.nu:.12g} is below 1", {"mu": r.mu, "nu": r.nu}
            )
        out.append(FP5Element(
            element=r.element,
            tau=max(0.0, r.mu - r.nu),
            phi=max(0.0, r.nu - r.mu),
            kappa=max(0.0, r.mu + r.nu - 1.0),
            pi=0.0,
        ))
    return FP5Set(elements=tuple(out))


def to_bipolar(a: FP5Set) -> BipolarInputSet:
    """mu = tau + kappa + iota/2, nu = phi + kappa + iota/2."""
    out = []
    for e in a.elements:
        iota = 1.0 - e.tau - e.phi - e.kappa - e.pi
        check_partition(e.tau, e.phi, e.kappa, e.pi, max(0.0, iota))
        half = max(0.0, iota) / 2.0
        out.append(BipolarRecord(
            element=e.element,
            mu=min(1.0, e.tau + e.kappa + half),
            nu=min(1.0, e.phi + e.kappa + half),
        ))
    return BipolarInputSet(records=tuple(out))


# ─────────────────────────────────────────────────────────────────────────────
# VALIDATION
# ─────────────────────────────────────────────────────────────────────────────

def _index(kind: SetKind, mu: float, nu: float) -> float:
    if kind is SetKind.IFS:
        return 1.0 - mu - nu
    if kind in (SetKind.PFS, SetKind.FUZZY):
        return mu + nu - 1.0
    return 0.0


def derived_indices(data: BipolarInputSet, kind: SetKind) -> Dict[str, float]:
    """pi = 1-mu-nu for ifs, kappa = mu+nu-1 for pfs, mu+nu-1 for fuzzy, 0 for bipolar."""
    kind = SetKind(kind)
    return {r.element: _index(kind, r.mu, r.nu) for r in data.records}


def _violation_detail(kind: SetKind, mu: float, nu: float) -> Optional[str]:
    total = mu + nu
    if kind is SetKind.FUZZY and abs(total - 1.0) > config.TOLERANCE:
        return f"mu+nu = {total:.12g}, expected 1"
    if kind is SetKind.IFS and total > 1.0 + config.TOLERANCE:
        return f"mu+nu = {total:.12g} exceeds 1"
    if kind is SetKind.PFS and total < 1.0 - config.TOLERANCE:
        return f"mu+nu = {total:.12g} is below 1"
    return None


def validate(data: BipolarInputSet, kind: SetKind) -> List[Violation]:
    kind = SetKind(kind)
    violations = []
    for r in data.records:
        detail = _violation_detail(kind, r.mu, r.nu)
        if detail is not None:
            violations.append(Violation(
                element=r.element, kind=kind, detail=detail, index=_index(kind, r.mu, r.nu)
            ))
    if violations:
        logger.debug("%d of %d element(s) violate the %s constraint",
                     len(violations), len(data), kind.value)
    return violations


def translate(data: BipolarInputSet, kind: SetKind, s: Optional[ParamLike] = None) -> FP5Set:
    """Validate against `kind` and convert with the matching translator."""
    kind = SetKind(kind)
    violations = validate(data, kind)
    if violations:
        first = violations[0]
        rec = next(r for r in data.records if r.element == first.element)
        raise ConstraintViolationError(first.element, first.detail, {"mu": rec.mu, "nu": rec.nu})

    if kind is SetKind.FUZZY:
        return from_fuzzy({r.element: r.mu for r in data.records})
    if kind is SetKind.IFS:
        return from_intuitionistic(data)
    if kind is SetKind.PFS:
        return from_paraconsistent(data)
    return from_bipolar(data, s)


def label(element: FP5Element) -> str:
    """T/I/U/C/F for a crisp element, empty otherwise."""
    value = element.truth_value()
    return value.symbol if value is not None else ""


def as_rows(a: FP5Set) -> List[Tuple[str, float, float, float, float, float]]:
    return [(e.element, e.tau, e.phi, e.kappa, e.pi, e.iota) for e in a.elements]
