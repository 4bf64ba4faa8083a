from loguru import logger

from core.exceptions import ConfigurationError
from models.reports import CheckReport
from services.braided.operators import braid_equation_check
from services.cherednik.algebra import commutativity_classification_check, delta_tc_shape
from services.doubles.pairing import yd_pairing_check
from services.qyd.perfect import (
    perfect_subquotient_check,
    right_perfect_subquotient_check,
    yd_intertwiner_check,
    yv_factorial_identity,
)
from services.qyd.structure import QYDStructure, build_YV, classify_1dim_check, induce_subquotient, qyd_check
from ..base_command import BaseCommand, CommandOutcome
from ..context import CommandContext


class CheckQYDCommand(BaseCommand):
    """Validates a quasi-YD structure and the Yetter-Drinfeld module Y(V) it induces."""

    name = "check-qyd"
    operations = [
        "group_from_generators",
        "qyd_check",
        "yd_pairing_check",
        "yd_intertwiner_check",
        "build_YV",
        "kron",
        "braid_equation_check",
        "yd_module_check",
        "yv_factorial_identity",
        "commutativity_classification_check",
        "irreducibility_report",
        "delta_tc_shape",
    ]

    def execute(self, context: CommandContext) -> CommandOutcome:
        q = context.structure
        fld = context.field
        checks = [qyd_check(q), yd_pairing_check(q), yd_intertwiner_check(q)]
        results = {"structure": q.to_json(), "dimension": q.dim, "group_order": q.group.order}
        if not checks[0].passed:
            return CommandOutcome(results=results, checks=checks)

        y, _ = build_YV(q)
        checks.append(y.check())
        checks.append(braid_equation_check(y.braiding()))
        checks.append(yv_factorial_identity(q, context.truncation))
        checks.append(commutativity_classification_check(q.module, q, context.config.cherednik.assume_irreducible))

        shape = delta_tc_shape(q.module, q)
        if shape is not None:
            results["delta_tc"] = {
                "t": fld.to_json(shape["t"]),
                "c": {q.group.label(s): fld.to_json(x) for s, x in shape["c"].items()},
            }
        results["yd_dimension"] = y.dim
        return CommandOutcome(results=results, checks=checks)


class ClassifyOneDimCommand(BaseCommand):
    """One-dimensional quasi-YD modules from a character and a central element."""

    name = "classify-1dim"
    operations = ["classify_1dim_check"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        group, cfg = context.group, context.config.one_dim
        alpha = cfg.alpha or [1] * group.order
        if len(alpha) != group.order:
            raise ConfigurationError("one_dim.alpha", f"{len(alpha)} values for a group of order {group.order}")
        p = {group.element(label): value for label, value in cfg.p.items()}
        report = classify_1dim_check(group, alpha, p, context.field)
        return CommandOutcome(results={"support": report.details.get("support", [])}, checks=[report])


class PerfectSubquotientCommand(BaseCommand):
    """V inside Y(V) through (delta, epsilon (x) id): identity, perfection and induction."""

    name = "perfect-subquotient"
    operations = [
        "build_YV",
        "perfect_subquotient_check",
        "right_subquotient",
        "right_perfect_subquotient_check",
        "induce_subquotient",
    ]

    def execute(self, context: CommandContext) -> CommandOutcome:
        q = context.structure
        y, pair = build_YV(q)
        w = QYDStructure.from_yd(y)
        report = perfect_subquotient_check(q, w, pair, context.truncation)
        right = right_perfect_subquotient_check(q, w, pair, context.truncation)

        induced = induce_subquotient(w, pair)
        if induced.L == q.L:
            recovered = CheckReport.ok("induced_structure", support=[q.group.label(h) for h in q.support])
        else:
            logger.warning("Structure induced from Y(V) differs from the original")
            recovered = CheckReport.fail("induced_structure", {"expected": q.to_json(), "induced": induced.to_json()})
        results = {"ambient_dimension": y.dim, "dimension": q.dim, "degrees": report.details.get("degrees", [])}
        # the dual pair need not be perfect; reported, not asserted
        results["dual_perfect"] = right.passed
        return CommandOutcome(results=results, checks=[report, recovered])
