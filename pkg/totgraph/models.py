"""totgraph.models.py"""
from typing import Dict, List, Optional

from pydantic import BaseModel, validator


class MaximalIdealInfo(BaseModel):
    """
    Maximal ideal of a ring, by element index.
    """

    members: List[int]
    residue_size: int
    residue_char: int


class RingInfo(BaseModel):
    """
    Ring summary used by `ring info --json`.
    """

    ring: str
    order: int
    blocks: List[str]
    zero_divisors: List[int]
    units: List[int]
    jacobson: List[int]
    maximal_ideals: List[MaximalIdealInfo]
    labels: List[str] = []


class GraphExport(BaseModel):
    """
    Graph on `n` vertices with vertex labels.
    """

    n: int
    edges: List[List[int]]
    labels: List[str]


class ColoringExport(BaseModel):
    """
    Coloring as a list of color classes (element indices).
    """

    ring: str
    graph_kind: str
    k: int
    classes: List[List[int]]
    provenance: str


class LatinExport(BaseModel):
    """
    Latin-sum array with its checker verdict.
    """

    rows: List[str]
    cols: List[str]
    entries: List[List[int]]
    alphabet_size: int
    valid: bool
    display: Dict[int, str] = {}


class SolveResult(BaseModel):
    """
    Result of an exact solver run; `value` is set only when the search completed.
    """

    value: Optional[int] = None
    bracket: Optional[List[int]] = None
    witness: List[int]
    nodes_explored: int
    elapsed_ms: int
    status: str


class StructureReport(BaseModel):
    """
    Connected-component structure of T(Γ(R)) when Z(R) is an ideal.
    """

    ring: str
    two_in_z: bool
    z_size: int
    quotient_size: int
    component_count: int
    complete_components: int
    bipartite_components: int
    expected_complete: int
    expected_bipartite: int
    component_sizes: List[int]
    passed: bool


class Witnesses(BaseModel):
    """
    Serialized certificate data of a verification row.
    """

    coloring_classes: List[List[int]] = []
    clique: List[int] = []


class VerificationRow(BaseModel):
    """
    One ring / graph kind of a verification run.
    """

    ring: str
    order: int
    kind: str
    branch: str
    predicted: Optional[int] = None
    constructed_k: Optional[int] = None
    omega: Optional[int] = None
    solver: Optional[int] = None
    status: str
    provenance: str = ""
    note: str = ""
    witnesses: Witnesses = Witnesses()

    @validator("status")
    @classmethod
    def known_status(cls, value):
        """Only the four report statuses are allowed."""
        if value not in STATUSES:
            raise ValueError(f"unknown status {value!r}")
        return value


class ReportConfig(BaseModel):
    """
    Inputs of a verification run.
    """

    suite: str
    pool: List[str]
    max_order: int
    solver_cap: int
    budgets: Dict[str, float]


class ReportSummary(BaseModel):
    """
    Status counts of a verification run.
    """

    pass_: int = 0
    exception: int = 0
    open: int = 0
    fail: int = 0

    class Config:
        fields = {"pass_": "pass"}
        allow_population_by_field_name = True


class VerificationReport(BaseModel):
    """
    Full verification report.
    """

    version: str
    config: ReportConfig
    rows: List[VerificationRow] = []
    summary: ReportSummary = ReportSummary()

    @validator("rows")
    @classmethod
    def sort_rows(cls, value):
        """Rows are kept in (ring, kind) order."""
        return sorted(value, key=lambda row: (row.order, row.ring, KIND_ORDER.get(row.kind, 9)))

    def summarize(self) -> "VerificationReport":
        """Recount the summary from the rows."""
        counts = {status: 0 for status in STATUSES}
        for row in self.rows:
            counts[row.status] += 1
        self.summary = ReportSummary(
            pass_=counts["PASS"],
            exception=counts["EXCEPTION"],
            open=counts["OPEN"],
            fail=counts["FAIL"],
        )
        return self

    def serialize(self):
        """
        Serialize the report into a dict, `pass` spelled as in the JSON schema.
        """
        return self.dict(by_alias=True)


STATUSES = ("PASS", "FAIL", "EXCEPTION", "OPEN")
KIND_ORDER = {"total": 0, "zdiv": 1, "reg": 2}
