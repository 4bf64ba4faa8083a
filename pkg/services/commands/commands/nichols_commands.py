from typing import List

from core.config import settings
from models.reports import CheckReport
from services.braided.genericity import specialized_deformed_factorial
from services.braided.operators import braid_equation_check, braided_factorial, trivial_braiding, woronowicz_oracle
from services.nichols.algebra import deformed_nichols_hilbert, nichols_algebra, relations_are_stable
from services.nichols.bosonisation import (
    bosonisation_check,
    central_pairing_report,
    kaplansky_algebra,
    kaplansky_report,
)
from services.qyd.semibraiding import compatibility_report, semibraiding_from_compatible
from ..base_command import BaseCommand, CommandOutcome
from ..context import CommandContext


def oracle_report(psi, N: int) -> CheckReport:
    """Product-form factorial against the sum over all permutations."""
    top = min(N, settings.ORACLE_CAP)
    for n in range(1, top + 1):
        if braided_factorial(psi, n).matrix != woronowicz_oracle(psi, n).matrix:
            return CheckReport.fail("woronowicz_oracle", {"degree": n})
    return CheckReport.ok("woronowicz_oracle", degrees=top)


class NicholsHilbertCommand(BaseCommand):
    """Graded dimensions of the Nichols algebra of a Yetter-Drinfeld module."""

    name = "nichols-hilbert"
    operations = [
        "yd_module_check",
        "braiding_from_yd",
        "braid_equation_check",
        "nichols_algebra",
        "braided_factorial",
        "woronowicz_oracle",
        "relations_are_stable",
    ]

    def execute(self, context: CommandContext) -> CommandOutcome:
        y, N = context.yd, context.truncation
        checks = [y.check()]
        psi = y.braiding()
        checks.append(braid_equation_check(psi))
        algebra = nichols_algebra(y, N)
        dims = algebra.dims
        checks.append(oracle_report(psi, N))
        stable = relations_are_stable(y.base, algebra.relations)
        checks.append(CheckReport.ok("relations_stable") if stable else CheckReport.fail("relations_stable", {"module": y.name}))
        results = {
            "name": algebra.name,
            "dimensions": dims,
            "relation_dims": [space.dim for space in algebra.relations],
            "finite": 0 in dims,
            "total": sum(dims) if 0 in dims else None,
        }
        return CommandOutcome(results=results, checks=checks, table=self.hilbert_rows({"dimension": dims}))


class DeformedHilbertCommand(BaseCommand):
    """Nichols algebra deformed by the flip: generic u, and an explicit u when given."""

    name = "deformed-hilbert"
    operations = [
        "compatibility_report",
        "semibraiding_from_compatible",
        "braided_integer",
        "deformed_factorial",
        "deformed_nichols_hilbert",
        "nichols_hilbert",
        "specialized_deformed_factorial",
    ]

    def execute(self, context: CommandContext) -> CommandOutcome:
        y, N = context.yd, context.truncation
        psi = y.braiding()
        tau = trivial_braiding(y.dim, context.field)
        checks = [compatibility_report([psi, tau])]
        if not checks[0].passed:
            return CommandOutcome(results={"compatible": False}, checks=checks)
        semi = semibraiding_from_compatible([psi, tau], [(1, 1), (1, 2)])
        if semi.map(1, 1) == psi + tau:
            checks.append(CheckReport.ok("semibraiding", blocks=[list(key) for key in sorted(semi.maps)]))
        else:
            checks.append(CheckReport.fail("semibraiding", {"block": [1, 1]}))
        generic = deformed_nichols_hilbert(y, N, context.generic)
        results = {"generic": generic, "trials": context.generic.trials, "seed": context.generic.seed}
        series = {"generic": generic}
        u = context.config.u
        if u is not None:
            specialized: List[int] = [1]
            for n in range(1, N + 1):
                specialized.append(specialized_deformed_factorial(psi, n, [u] * max(n - 1, 0)).kernel().codim)
            results["u"] = u
            results["specialized"] = specialized
            series["specialized"] = specialized
        return CommandOutcome(results=results, checks=checks, table=self.hilbert_rows(series))


class KaplanskyCommand(BaseCommand):
    """Lambda(V) # kZ_2 and the central pairing (y^n, x^n)_H = n! a^n over it."""

    name = "kaplansky"
    operations = ["kaplansky_algebra", "nichols_product", "bosonisation_check", "central_pairing"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        n, fld = context.config.yd.dim, context.field
        checks = [kaplansky_report(n, fld)]
        algebra = kaplansky_algebra(n, fld)
        checks.append(bosonisation_check(algebra.y, n + 1))
        omega = {(w, algebra.group.identity): x for w, x in algebra.nichols.normal(tuple(range(n))).items()}
        top = context.config.degree or context.truncation
        if algebra.is_central(omega):
            checks.extend(central_pairing_report(algebra, omega, k) for k in range(1, top + 1))
        results = {"n": n, "dimension": algebra.dim, "nichols_dims": algebra.nichols.dims}
        return CommandOutcome(results=results, checks=checks)
