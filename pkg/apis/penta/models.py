"""Value types shared across the penta toolkit."""
from enum import Enum
from typing import Annotated, Dict, Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from apis.penta import config
from apis.penta.five_logic import PentaTruthValue

UnitValue = Annotated[float, Field(ge=0.0, le=1.0, allow_inf_nan=False)]


class SetKind(str, Enum):
    FUZZY    = "fuzzy"
    IFS      = "ifs"
    PFS      = "pfs"
    BIPOLAR  = "bipolar"


class BipolarPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: UnitValue = Field(..., description="Membership / agreement")
    y: UnitValue = Field(..., description="Non-membership / non-agreement")


class PentaCoords(BaseModel):
    model_config = ConfigDict(frozen=True)

    tau:   UnitValue = Field(..., description="Truth")
    phi:   UnitValue = Field(..., description="Falsity")
    kappa: UnitValue = Field(..., description="Contradiction")
    pi:    UnitValue = Field(..., description="Undefinedness")
    iota:  UnitValue = Field(..., description="Indeterminacy")

    @model_validator(mode="after")
    def _partition_of_unity(self) -> "PentaCoords":
        total = self.tau + self.phi + self.kappa + self.pi + self.iota
        if abs(total - 1.0) > config.TOLERANCE:
            raise ValueError(f"coordinates sum to {total:.12g}, expected 1")
        return self

    def as_tuple(self) -> Tuple[float, float, float, float, float]:
        return (self.tau, self.phi, self.kappa, self.pi, self.iota)


# (tau, phi, kappa, pi) of the five crisp values
VERTICES: Dict[PentaTruthValue, Tuple[float, float, float, float]] = {
    PentaTruthValue.T: (1.0, 0.0, 0.0, 0.0),
    PentaTruthValue.F: (0.0, 1.0, 0.0, 0.0),
    PentaTruthValue.C: (0.0, 0.0, 1.0, 0.0),
    PentaTruthValue.U: (0.0, 0.0, 0.0, 1.0),
    PentaTruthValue.I: (0.0, 0.0, 0.0, 0.0),
}


class FP5Element(BaseModel):
    model_config = ConfigDict(frozen=True)

    element: str
    tau:     UnitValue
    phi:     UnitValue
    kappa:   UnitValue
    pi:      UnitValue

    @model_validator(mode="after")
    def _bounded(self) -> "FP5Element":
        total = self.tau + self.phi + self.kappa + self.pi
        if total > 1.0 + config.TOLERANCE:
            raise ValueError(
                f"element {self.element!r}: tau+phi+kappa+pi = {total:.12g} exceeds 1"
            )
        return self

    @property
    def iota(self) -> float:
        return max(0.0, 1.0 - self.tau - self.phi - self.kappa - self.pi)

    @classmethod
    def vertex(cls, element: str, value: PentaTruthValue) -> "FP5Element":
        tau, phi, kappa, pi = VERTICES[PentaTruthValue(value)]
        return cls(element=element, tau=tau, phi=phi, kappa=kappa, pi=pi)

    def truth_value(self) -> Optional[PentaTruthValue]:
        """The crisp value this element sits on, or None off the vertices."""
        point = (self.tau, self.phi, self.kappa, self.pi)
        for value, vertex in VERTICES.items():
            if point == vertex:
                return value
        return None

    def coords(self) -> PentaCoords:
        return PentaCoords(
            tau=self.tau, phi=self.phi, kappa=self.kappa, pi=self.pi, iota=self.iota
        )


def _first_duplicate(ids: Iterable[str]) -> Optional[str]:
    seen = set()
    for element in ids:
        if element in seen:
            return element
        seen.add(element)
    return None


class FP5Set(BaseModel):
    model_config = ConfigDict(frozen=True)

    elements: Tuple[FP5Element, ...] = ()

    @model_validator(mode="after")
    def _unique_ids(self) -> "FP5Set":
        dup = _first_duplicate(e.element for e in self.elements)
        if dup is not None:
            raise ValueError(f"duplicate element identifier {dup!r}")
        return self

    @property
    def universe(self) -> Tuple[str, ...]:
        return tuple(e.element for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def get(self, element: str) -> FP5Element:
        for e in self.elements:
            if e.element == element:
                return e
        raise KeyError(element)


class BipolarRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    element: str
    mu:      UnitValue = Field(..., description="Membership")
    nu:      UnitValue = Field(..., description="Non-membership")


class BipolarInputSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    records: Tuple[BipolarRecord, ...] = ()

    @model_validator(mode="after")
    def _unique_ids(self) -> "BipolarInputSet":
        dup = _first_duplicate(r.element for r in self.records)
        if dup is not None:
            raise ValueError(f"duplicate element identifier {dup!r}")
        return self

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, float, float]]) -> "BipolarInputSet":
        return cls(records=tuple(
            BipolarRecord(element=element, mu=mu, nu=nu) for element, mu, nu in pairs
        ))

    @property
    def universe(self) -> Tuple[str, ...]:
        return tuple(r.element for r in self.records)

    def __len__(self) -> int:
        return len(self.records)


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    element: str
    kind:    SetKind
    detail:  str
    index:   float = Field(..., description="Derived index (pi for ifs, kappa for pfs, mu+nu-1 for fuzzy)")
