"""Wire formats shared by the HTTP service and the command line client.

Scalars travel as exact rational strings such as "-7/4" or "3". Matrices
travel sparsely: block sizes plus a list of (row, column, value) entries.
Every model converts to and from the core types, so neither the service nor
the client ever does arithmetic on the wire representation.
"""

from __future__ import annotations

from typing import Annotated

from pydantic import BaseModel, Field, field_validator

from .blocks import BlockStructure, Root
from .canonical import CanonicalPoint
from .linalg import Matrix, ZERO, format_scalar, parse_scalar
from .nilrad import from_entries, support
from .verify import CheckResult, VerifyReport

BlockList = Annotated[list[Annotated[int, Field(ge=1)]], Field(min_length=1)]


class Entry(BaseModel):
    """One matrix position with an exact rational value."""

    i: int = Field(ge=1)
    j: int = Field(ge=1)
    value: str

    @field_validator("value")
    @classmethod
    def _rational(cls, text: str) -> str:
        try:
            parse_scalar(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational {text!r}") from exc
        return text


def _entry_list(mat: Matrix) -> list[Entry]:
    return [
        Entry(i=i, j=j, value=format_scalar(mat.at(i, j)))
        for (i, j) in sorted(support(mat))
    ]


class MatrixFile(BaseModel):
    """A nilradical element: block sizes plus its nonzero entries."""

    blocks: BlockList
    entries: list[Entry] = Field(default_factory=list)

    def structure(self) -> BlockStructure:
        return BlockStructure(tuple(self.blocks))

    def matrix(self) -> Matrix:
        values: dict[Root, object] = {}
        for entry in self.entries:
            pos = (entry.i, entry.j)
            if pos in values:
                raise ValueError(f"duplicate entry at {pos}")
            values[pos] = parse_scalar(entry.value)
        return from_entries(self.structure(), values)

    @classmethod
    def from_matrix(cls, bs: BlockStructure, mat: Matrix) -> "MatrixFile":
        return cls(blocks=list(bs.sizes), entries=_entry_list(mat))


class GroupElement(BaseModel):
    """Upper unitriangular matrix, stored by its above-diagonal entries."""

    n: int = Field(ge=1)
    entries: list[Entry] = Field(default_factory=list)

    @classmethod
    def from_matrix(cls, g: Matrix) -> "GroupElement":
        entries = [
            Entry(i=i, j=j, value=format_scalar(g.at(i, j)))
            for i in range(1, g.rows + 1)
            for j in range(i + 1, g.cols + 1)
            if g.at(i, j) != ZERO
        ]
        return cls(n=g.rows, entries=entries)

    def matrix(self) -> Matrix:
        g = Matrix.identity(self.n)
        for entry in self.entries:
            if not entry.i < entry.j <= self.n:
                raise ValueError(f"entry at ({entry.i}, {entry.j}) is not above the diagonal")
            g.set_at(entry.i, entry.j, parse_scalar(entry.value))
        return g


class CanonicalPointFile(BaseModel):
    """Canonical representative: one coefficient per generator position."""

    blocks: BlockList
    coeffs: list[Entry]

    @classmethod
    def from_point(cls, point: CanonicalPoint) -> "CanonicalPointFile":
        coeffs = [
            Entry(i=i, j=j, value=format_scalar(value))
            for (i, j), value in point.coeffs
        ]
        return cls(blocks=list(point.sizes), coeffs=coeffs)


# ---------------------------------------------------------------------------
# requests and responses


class DiagramRequest(BaseModel):
    blocks: BlockList
    layers: list[str] = Field(default_factory=lambda: ["s", "phi"])


class DiagramResponse(BaseModel):
    ok: bool = True
    text: str
    data: dict


class InvariantsRequest(BaseModel):
    matrix: MatrixFile


class InvariantsResponse(BaseModel):
    ok: bool = True
    base: list[Entry]
    derived: list[Entry]


class CanonicalizeRequest(BaseModel):
    matrix: MatrixFile
    witness: bool = False
    check: bool = False


class CanonicalizeResponse(BaseModel):
    ok: bool = True
    point: CanonicalPointFile
    zero_coefficients: list[list[int]]
    witness: GroupElement | None = None
    check_passed: bool | None = None


class VerifyRequest(BaseModel):
    max_n: int = Field(default=5, ge=1, le=8)
    trials: int = Field(default=10, ge=1, le=1000)
    seed: int = 0
    suites: list[str] = Field(default_factory=lambda: ["all"])


class CheckModel(BaseModel):
    suite: str
    name: str
    trials: int
    seed: int
    passed: bool
    detail: str = ""
    counterexample: dict | None = None

    @classmethod
    def from_check(cls, check: CheckResult) -> "CheckModel":
        return cls(
            suite=check.suite,
            name=check.name,
            trials=check.trials,
            seed=check.seed,
            passed=check.passed,
            detail=check.detail,
            counterexample=check.counterexample,
        )


class VerifyResponse(BaseModel):
    ok: bool
    max_n: int
    trials: int
    seed: int
    checks: list[CheckModel]

    @classmethod
    def from_report(cls, report: VerifyReport) -> "VerifyResponse":
        return cls(
            ok=report.ok,
            max_n=report.max_n,
            trials=report.trials,
            seed=report.seed,
            checks=[CheckModel.from_check(check) for check in report.checks],
        )


class SweepRequest(BaseModel):
    n: int = Field(ge=1, le=10)


class SweepResponse(BaseModel):
    ok: bool = True
    n: int
    rows: list[dict]


class ErrorInfo(BaseModel):
    type: str
    message: str
    stage: str | None = None
    position: list[int] | None = None


class ErrorResponse(BaseModel):
    ok: bool = False
    error: ErrorInfo
