"""
Pydantic models for serialized graphs, layouts and verification reports.
"""
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from workbench.services.graph_core import RoleKind


def _check_bits(v: str) -> str:
    if any(ch not in "01" for ch in v):
        raise ValueError("bits must be a string over {0,1}")
    return v


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class RoleRecord(BaseModel):
    kind: RoleKind = RoleKind.PLAIN
    ix: List[int] = Field(default_factory=list, max_length=3)


class VertexRecord(BaseModel):
    id: int = Field(..., ge=0)
    role: RoleRecord = Field(default_factory=RoleRecord)


class GraphDocument(BaseModel):
    """JSON wire form of a graph; edges sorted lexicographically with u < v."""
    vertices: List[VertexRecord]
    edges: List[Tuple[int, int]]


class HighwayRecord(BaseModel):
    vertices: List[int]
    length: int
    end_degrees: Tuple[int, int]
    cyclic: bool = False


class EmbeddingRecord(BaseModel):
    """Pattern vertex i maps to host vertex images[i]."""
    images: List[int]


class ChainLayout(BaseModel):
    """Where each role of a bridge chain landed."""
    n: int = Field(..., ge=1)
    bits: str
    hub: int
    special_highway: List[int]
    cliques: List[List[int]]
    left_exits: List[int]
    right_exits: List[int]
    connectors: List[List[int]]
    terminal: int

    @field_validator("bits")
    @classmethod
    def validate_bits(cls, v: str) -> str:
        return _check_bits(v)


class DriveThroughLayout(BaseModel):
    n: int = Field(..., ge=1)
    clique: List[int]
    dead_end_hubs: List[int]
    left_exit: int
    right_exit: int


class TowerLayout(BaseModel):
    """
    Corners are indexed [level][i]; midpoints [level][side][j - 1].
    Ids below tower_size belong to the tower itself.
    """
    k: int = Field(..., ge=2)
    levels: int = Field(..., ge=0)
    tower_size: int
    corners: List[List[int]]
    midpoints: List[List[List[int]]]
    spread: List[int] = Field(default_factory=list)
    helpers: Dict[int, int] = Field(default_factory=dict)
    bits: Optional[str] = None


class Fingerprint(BaseModel):
    """Structure-only isomorphism invariant of a bridge chain."""
    n: int
    bits: str
    degrees: List[Tuple[int, int]] = Field(default_factory=list)
    census: List[Tuple[int, int, int, int]]

    def key(self) -> Tuple:
        return (self.n, self.bits, tuple(self.degrees), tuple(self.census))


class AugmentationKind(str, Enum):
    EDGE = "edge"
    PENDANT = "pendant"


class AugmentationOutcome(BaseModel):
    kind: AugmentationKind
    endpoints: Tuple[int, int]
    protected: bool
    witness: Optional[List[int]] = None

    @property
    def safe(self) -> bool:
        return self.witness is None


class RigidityReport(BaseModel):
    gadget: str
    n: int
    exempt: List[int]
    checked: int
    witnessed: int
    outcomes: List[AugmentationOutcome]
    unwitnessed_protected: List[Tuple[int, int]] = Field(default_factory=list)
    verdict: Verdict


class CheckResult(BaseModel):
    name: str
    verdict: Verdict
    gating: bool = True
    detail: str = ""


class MemberResult(BaseModel):
    bits: str
    vertex_count: int
    edge_count: int
    forbidden_free: bool
    girth: Optional[int] = None
    decoded: Optional[str] = None
    round_trip: bool = False
    fingerprint: Optional[Fingerprint] = None
    corner_counts: List[int] = Field(default_factory=list)
    error: Optional[str] = None


class MergeWitness(BaseModel):
    position: int
    cycle: List[int]


class FamilyKind(str, Enum):
    BRIDGE = "bridge"
    GIRTH = "girth"


class FamilyReport(BaseModel):
    family: FamilyKind
    n: Optional[int] = None
    k: Optional[int] = None
    length: int
    levels: Optional[int] = None
    members: List[MemberResult]
    distinct_count: int
    expected_distinct: int
    checks: List[CheckResult] = Field(default_factory=list)
    verdict: Verdict
