from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, List, Optional
from enum import Enum


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    LINES = "lines"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INFO = "info"
    NON_CLOSED = "non-closed"


class UnitStatus(str, Enum):
    CLOSED = "closed"
    NON_CLOSED = "non-closed"


SUITES = ("lie", "signs", "colie", "models", "bar", "lifts", "edqx", "basis", "unit")


class RunConfig(BaseModel):
    max_weight: int = Field(ge=1)
    seed: int = 42
    sample_count: int = Field(default=100, ge=1)
    format: OutputFormat = OutputFormat.JSON
    suites: List[str] = Field(default_factory=lambda: list(SUITES))
    max_weight_cap: int = 8
    allow_large: bool = False

    @field_validator("suites")
    @classmethod
    def known_suites(cls, value: List[str]) -> List[str]:
        unknown = sorted(set(value) - set(SUITES))
        if unknown:
            raise ValueError(f"unknown suites: {unknown}")
        return [s for s in SUITES if s in value]

    @model_validator(mode="after")
    def weight_within_cap(self) -> "RunConfig":
        if self.max_weight > self.max_weight_cap and not self.allow_large:
            raise ValueError(
                f"max_weight {self.max_weight} exceeds the cap {self.max_weight_cap}; pass --allow-large to override"
            )
        return self


class CoefficientEntry(BaseModel):
    W: str
    U: str
    V: str
    value: str


class GeneratorInfo(BaseModel):
    name: str
    degree: int
    weight: int


class MonomialTerm(BaseModel):
    monomial: List[str]
    coeff: str


class PresentationDump(BaseModel):
    space: str
    max_weight: int
    generators: List[GeneratorInfo]
    differential: Dict[str, List[MonomialTerm]]


class WedgeTerm(BaseModel):
    left: str
    right: str
    coeff: str


class CobracketResult(BaseModel):
    tag: str
    basis: str
    terms: List[WedgeTerm]


class TreeInfo(BaseModel):
    index: int
    leaves: int
    bracket: str


class BarTerm(BaseModel):
    slots: List[List[str]]
    coeff: str


class CheckResult(BaseModel):
    check: str
    weight: int
    status: CheckStatus
    witness: Optional[str] = None
    statement: str = ""


class LiftReport(BaseModel):
    word: str
    variant: str
    method: str
    path: str
    generator: str
    solution_dimension: Optional[int] = None
    terms: List[BarTerm]
    checks: List[CheckResult] = []


class UnitAuditEntry(BaseModel):
    word: str
    variant: str
    weight: int
    claim_constants: List[str]
    claim_closed: bool
    claim_status: UnitStatus
    convention: str
    solved_constants: Optional[List[str]] = None
    solved_closed: bool = False
    solved_match_half_wedge: bool = False
    agrees_with_oracle: bool = False


class VerificationReport(BaseModel):
    suites: List[str]
    max_weight: int
    seed: int
    passed: bool
    checks: List[CheckResult]
