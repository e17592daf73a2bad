from enum import Enum
from typing import Any, Dict, List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class LeftArc(str, Enum):
    """Which open arc of a self chord is its left part"""
    OVER_TO_UNDER = "over_to_under"
    UNDER_TO_OVER = "under_to_over"


class EndpointSignConvention(BaseModel):
    """
    Endpoint sign rule and left-arc choice used by every index computation.

    sign(e) is over_sign_factor * w(d) when e is the Over endpoint of chord d and
    -over_sign_factor * w(d) when it is the Under endpoint.
    """
    model_config = ConfigDict(frozen=True)

    over_sign_factor: int = Field(-1, description="Sign factor applied to Over endpoints")
    left_arc: LeftArc = Field(LeftArc.UNDER_TO_OVER, description="Arc read as left(c)")

    @field_validator('over_sign_factor')
    def validate_factor(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("over_sign_factor must be +1 or -1")
        return v

    @classmethod
    def preset(cls, name: str) -> "EndpointSignConvention":
        """
        Look up a named convention.

        Args:
            name: One of default, a, b, c, d

        Returns:
            EndpointSignConvention: The preset
        """
        try:
            factor, arc = CONVENTION_PRESETS[name]
        except KeyError:
            raise ValueError(f"Unknown convention {name!r}; expected one of {sorted(CONVENTION_PRESETS)}")
        return cls(over_sign_factor=factor, left_arc=arc)


# "default" is the combination that reproduces the published Kishino data.
CONVENTION_PRESETS: Dict[str, Tuple[int, LeftArc]] = {
    "a": (1, LeftArc.OVER_TO_UNDER),
    "b": (1, LeftArc.UNDER_TO_OVER),
    "c": (-1, LeftArc.OVER_TO_UNDER),
    "d": (-1, LeftArc.UNDER_TO_OVER),
    "default": (-1, LeftArc.UNDER_TO_OVER),
}


class VlinkSettings(BaseModel):
    """Runtime configuration, filled from VLINK_* environment variables"""
    convention: str = Field("default", description="Endpoint sign convention preset")
    log_level: str = Field("WARNING", description="Level for the vlink logger")
    fuzz_steps: int = Field(50, description="Moves applied per fuzz trial", gt=0)
    fuzz_seed: int = Field(0, description="Default fuzz seed")
    fuzz_trials: int = Field(1000, description="Trials run by the property suites", gt=0)
    insert_bias: float = Field(0.55, description="Probability that a fuzz step inserts", ge=0, le=1)
    max_chords: int = Field(40, description="Chord count above which the fuzzer stops inserting", gt=0)

    @field_validator('convention')
    def validate_convention(cls, v: str) -> str:
        if v not in CONVENTION_PRESETS:
            raise ValueError(f"Unknown convention {v!r}")
        return v

    @field_validator('log_level')
    def validate_log_level(cls, v: str) -> str:
        v = v.upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Invalid log level: {v}")
        return v

    def sign_convention(self) -> EndpointSignConvention:
        return EndpointSignConvention.preset(self.convention)


class MoveKind(str, Enum):
    """Gauss-diagram rewrite templates"""
    R1_INSERT = "R1_insert"
    R1_DELETE = "R1_delete"
    R2A_INSERT = "R2a_insert"
    R2A_DELETE = "R2a_delete"
    R3A_APPLY = "R3a_apply"
    R3_APPLY = "R3_apply"


class MoveTemplate(BaseModel):
    """One applied move with all of its placement parameters"""
    model_config = ConfigDict(frozen=True)

    kind: MoveKind
    circle: Optional[int] = Field(None, description="R1 circle index", ge=0)
    gap: Optional[int] = Field(None, description="R1 gap position", ge=0)
    sign: Optional[int] = Field(None, description="Sign of the (first) inserted chord")
    head_first: bool = Field(False, description="R1: Under endpoint precedes Over endpoint")
    over_circle: Optional[int] = Field(None, ge=0)
    over_gap: Optional[int] = Field(None, ge=0)
    under_circle: Optional[int] = Field(None, ge=0)
    under_gap: Optional[int] = Field(None, ge=0)
    parallel: bool = Field(True, description="R2: Under pair in the same order as the Over pair")
    corrupt: bool = Field(False, description="R2: give both chords the same sign (negative control only)")
    chords: List[str] = Field(default_factory=list, description="Chord labels a deletion or R3 acts on")

    @field_validator('sign')
    def validate_sign(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return v

    @model_validator(mode='after')
    def validate_parameters(self) -> "MoveTemplate":
        if self.kind == MoveKind.R1_INSERT:
            if self.circle is None or self.gap is None or self.sign is None:
                raise ValueError("R1_insert needs circle, gap and sign")
        elif self.kind == MoveKind.R2A_INSERT:
            if None in (self.over_circle, self.over_gap, self.under_circle, self.under_gap, self.sign):
                raise ValueError("R2a_insert needs over/under circle and gap and a sign")
        else:
            expected = {MoveKind.R1_DELETE: 1, MoveKind.R2A_DELETE: 2,
                        MoveKind.R3A_APPLY: 3, MoveKind.R3_APPLY: 3}[self.kind]
            if len(self.chords) != expected:
                raise ValueError(f"{self.kind.value} needs {expected} chord label(s)")
        return self


class MoveTrace(BaseModel):
    """Replayable record of a fuzz run"""
    initial: str = Field(..., description="Gauss code of the starting diagram")
    templates: List[MoveTemplate] = Field(default_factory=list)
    final: str = Field("", description="Gauss code of the last diagram")
    seed: Optional[int] = None


class CorpusFixture(BaseModel):
    """A committed Gauss code with its provenance notes"""
    name: str
    code: str
    notes: List[str] = Field(default_factory=list, description="Comment lines of the fixture file")


class InvariantReport(BaseModel):
    """Every invariant computed for one diagram"""
    input: str
    components: int
    spans: List[int]
    writhe: int
    linking_writhe: int
    W: List[List[int]]
    Wbar: List[List[int]]
    W_i: List[List[List[int]]]
    W_mod_span: List[List[int]]
    P: Optional[List[List[int]]] = None
    f: Optional[List[List[int]]] = None
    L_ts: List[Dict[str, Any]]
    B: List[Dict[str, Any]]
    Bbar: List[Dict[str, Any]]
    self_crossing_lower_bound: int
    self_crossing_bound_from_W: int
    self_crossing_bound_from_B: int
    real_crossing_lower_bound: int
    nonclassical: bool
    nontrivial_flat: bool


class VerifyResult(BaseModel):
    """Outcome of an invariance check along one fuzz trace"""
    input: str
    steps: int
    seed: int
    verdicts: Dict[str, bool]
    trace: MoveTrace

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def failures(self) -> List[str]:
        return [name for name, ok in self.verdicts.items() if not ok]
