from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class CheckReport(BaseModel):
    """Outcome of a report-style verification.

    Failed checks are data, not exceptions: `passed` is False and `witness`
    names the first violating input.

    Attributes:
        check: name of the verification
        passed: whether every tested identity held
        witness: first violation found, if any
        details: check-specific numbers (ranks, dimensions, parameters)
    """
    check: str
    passed: bool
    witness: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def ok(cls, check: str, **details: Any) -> "CheckReport":
        return cls(check=check, passed=True, details=details)

    @classmethod
    def fail(cls, check: str, witness: Dict[str, Any], **details: Any) -> "CheckReport":
        return cls(check=check, passed=False, witness=witness, details=details)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "check": "braid_equation",
                "passed": True,
                "witness": None,
                "details": {"invertible": True}
            }
        }
    )


class DegreeReport(BaseModel):
    """Per-degree numbers of a graded computation."""
    degree: int = Field(..., ge=0)
    dimension: Optional[int] = Field(default=None, ge=0, description="Dimension of the graded piece")
    relations: Optional[int] = Field(default=None, ge=0, description="Dimension of the relation space")
    passed: Optional[bool] = None
    extra: Dict[str, Any] = Field(default_factory=dict)


class CommandReport(BaseModel):
    """Top-level JSON document emitted by the command line.

    Attributes:
        command: command name
        inputs: the run configuration echoed back
        passed: overall verdict (drives the exit status)
        results: command-specific payload
        checks: individual verification reports
        wall_time_seconds: present only when timing output is enabled
    """
    command: str
    inputs: Dict[str, Any]
    passed: bool
    results: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckReport] = Field(default_factory=list)
    wall_time_seconds: Optional[float] = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "command": "nichols-hilbert",
                "inputs": {"truncation": 5},
                "passed": True,
                "results": {"dimensions": [1, 3, 4, 3, 1, 0]},
                "checks": []
            }
        }
    )
