from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from core.exceptions import BraidEquationError, CompatibilityError
from models.reports import CheckReport
from services.braided.operators import (
    braid_equation_check,
    braiding_dim,
    compatibility_failure,
    leg_braiding,
)
from services.linalg.matrix import Matrix
from services.linalg.tensor import on_legs


@dataclass
class Semibraiding:
    """Psi_Pi^{m,n}: V^{(x)m} (x) V^{(x)n} -> V^{(x)n} (x) V^{(x)m} for a compatible set Pi.

    Attributes:
        braidings: the set Pi
        report: outcome of the braid and compatibility checks
        maps: (m, n) -> assembled matrix
    """
    braidings: List[Matrix]
    report: CheckReport
    maps: Dict[Tuple[int, int], Matrix] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return braiding_dim(self.braidings[0])

    def one_past(self, n: int) -> Matrix:
        """Psi_Pi^{1,n} = sum over Pi of Psi_{n,n+1} ... Psi_{12}."""
        d = self.dim
        fld = self.braidings[0].field
        total = Matrix.zeros((d ** (n + 1), d ** (n + 1)), fld)
        for psi in self.braidings:
            term = Matrix.identity(d ** (n + 1), fld)
            for i in range(1, n + 1):
                term = leg_braiding(psi, i, n + 1) @ term
            total = total + term
        return total

    def map(self, m: int, n: int) -> Matrix:
        """Right-hexagon composite: move v_m past the block, then v_{m-1}, ..., then v_1."""
        key = (m, n)
        if key not in self.maps:
            d = self.dim
            fld = self.braidings[0].field
            block = self.one_past(n)
            result = Matrix.identity(d ** (m + n), fld)
            for i in range(m, 0, -1):
                result = on_legs(block, d, i - 1, m - i) @ result
            self.maps[key] = result
        return self.maps[key]


def semibraiding_from_compatible(braidings: Sequence[Matrix], requests: Sequence[Tuple[int, int]] = ()) -> Semibraiding:
    """Check a set of braidings for the braid equation and pairwise compatibility,
    then assemble the requested Psi_Pi^{m,n}."""
    braidings = list(braidings)
    for k, psi in enumerate(braidings):
        report = braid_equation_check(psi)
        if not report.passed:
            raise BraidEquationError(f"braiding {k} at {report.witness}")
    failure = compatibility_failure(braidings)
    if failure is not None:
        logger.warning(f"Braidings {failure[0]} and {failure[1]} are not compatible")
        raise CompatibilityError(*failure)
    result = Semibraiding(braidings=braidings, report=CheckReport.ok("compatibility", count=len(braidings)))
    for m, n in requests:
        result.map(m, n)
    return result


def compatibility_report(braidings: Sequence[Matrix]) -> CheckReport:
    failure = compatibility_failure(list(braidings))
    if failure is not None:
        return CheckReport.fail("compatibility", {"pair": list(failure)})
    return CheckReport.ok("compatibility", count=len(braidings))
