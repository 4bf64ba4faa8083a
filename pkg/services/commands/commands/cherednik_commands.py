from loguru import logger

from core.exceptions import ConfigurationError
from models.reports import CheckReport
from models.run_config import GroupKind
from services.cherednik.algebra import cherednik_algebra, commutator_relation_check, dunkl_check, dunkl_commutator
from services.cherednik.embedding import embed_Mc_check, embed_Pi_check
from services.cherednik.fomin_kirillov import fomin_kirillov_dims
from services.cherednik.reflections import covariance_check, find_reflections
from services.cherednik.restricted import restricted_dims
from services.doubles.double import DoubleEngine, associativity_witnesses
from services.doubles.pbw import pbw_slices
from ..base_command import BaseCommand, CommandOutcome
from ..context import CommandContext


def parameter_summary(context: CommandContext) -> dict:
    module, fld = context.module, context.field
    reflections = find_reflections(module)
    values = context.params.values(module, reflections)
    return {
        "t": fld.to_json(context.params.t_value(fld)),
        "c": {module.group.label(s): fld.to_json(x) for s, x in sorted(values.items())},
        "reflections": len(reflections),
    }


class CherednikPBWCommand(BaseCommand):
    """PBW slices, associativity and the commutator formula of H_{t,c}(G)."""

    name = "cherednik-pbw"
    operations = [
        "conjugacy_classes",
        "find_reflections",
        "covariance_check",
        "delta_tc",
        "cherednik_algebra",
        "pbw_slices",
        "associativity_witnesses",
        "commutator_relation_check",
    ]

    def execute(self, context: CommandContext) -> CommandOutcome:
        module = context.module
        spec = cherednik_algebra(module, context.params, context.truncation)
        engine = DoubleEngine(spec)
        checks = [
            covariance_check(module, find_reflections(module)),
            pbw_slices(spec, engine=engine),
            associativity_witnesses(spec, seed=context.config.seed, samples=context.config.samples, engine=engine),
            commutator_relation_check(spec, engine=engine),
        ]
        results = {"group_order": spec.group.order, "dimension": spec.dim, **parameter_summary(context)}
        return CommandOutcome(results=results, checks=checks)


class DunklCheckCommand(BaseCommand):
    """[phi, v] by straightening against the Dunkl-type closed formula."""

    name = "dunkl-check"
    operations = ["dunkl_commutator", "dunkl_check", "commutator_relation_check"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        spec = cherednik_algebra(context.module, context.params, context.truncation)
        engine = DoubleEngine(spec)
        checks = [commutator_relation_check(spec, engine=engine), dunkl_check(spec, degree=context.config.degree, engine=engine)]
        results = parameter_summary(context)
        top = checks[1].details.get("degree", 0)
        if checks[1].passed and top > 0:
            # y_1^top, the highest power covered by the check
            exps = tuple([top] + [0] * (spec.dim - 1))
            results["example"] = dunkl_commutator(spec, {exps: 1}, 0, engine=engine).to_json(spec.group, spec.field)
        return CommandOutcome(results=results, checks=checks)


class RestrictedDimsCommand(BaseCommand):
    """Coinvariant dimensions and the dimension of the restricted algebra at t = 0."""

    name = "restricted-dims"
    operations = ["restricted_spec", "restricted_dims", "minimality_check"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        module = context.module
        result = restricted_dims(module, context.params, context.truncation, minimality_degree=context.config.degree)
        checks = [result.minimality]
        p = module.field.characteristic
        if result.stabilized and (p == 0 or result.group_order % p):
            if result.total == result.group_order:
                checks.append(CheckReport.ok("coinvariant_dimension", total=result.total))
            else:
                checks.append(CheckReport.fail("coinvariant_dimension", {"total": result.total, "group_order": result.group_order}))
        elif not result.stabilized:
            logger.info(f"Raise the truncation above {context.truncation} to see the coinvariant algebra end")
        table = self.hilbert_rows({"coinvariant": result.coinvariant_dims})
        return CommandOutcome(results=result.to_json(), checks=checks, table=table)


class EmbedCheckCommand(BaseCommand):
    """H_{t,c}(G) inside the double of Y_G, with t' = t / kappa."""

    name = "embed-check"
    operations = [
        "build_reflection_yd",
        "proportionality_scalar",
        "dual_module",
        "embed_Mc_check",
        "reflection_subquotient",
        "embed_Pi_check",
    ]

    def execute(self, context: CommandContext) -> CommandOutcome:
        report = embed_Mc_check(context.module, context.params, context.truncation)
        results = {key: report.details[key] for key in ("t_prime", "kappa", "target_dim") if key in report.details}
        subquotient = embed_Pi_check(context.module, context.params, context.truncation)
        results["y_pi_dim"] = subquotient.details.get("target_dim")
        results.update(parameter_summary(context))
        return CommandOutcome(results=results, checks=[report, subquotient])


class FominKirillovCommand(BaseCommand):
    """E_n, U(tr_n) and B(Y_{S_n}) side by side."""

    name = "fomin-kirillov"
    operations = ["fomin_kirillov_dims", "fomin_kirillov_relations", "mixed_relations", "quadratic_dims_from"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        cfg = context.config
        if cfg.group.kind != GroupKind.SYMMETRIC:
            raise ConfigurationError("group.kind", "fomin-kirillov needs a symmetric group")
        result = fomin_kirillov_dims(cfg.group.n, context.truncation, context.field, cfg.u)
        details = {"degree_two_relations": result.degree_two}
        if not result.relations_match:
            check = CheckReport.fail("fomin_kirillov", {"reason": "quadratic relations differ from ker(id + Psi)"}, **details)
        elif not result.agree:
            check = CheckReport.fail("fomin_kirillov", {"reason": "quadratic cover larger than the Nichols algebra"}, **details)
        else:
            check = CheckReport.ok("fomin_kirillov", **details)
        series = {"fomin_kirillov": result.fomin_kirillov, "transposition_lie": result.transposition_lie, "nichols": result.nichols}
        if result.specialized is not None:
            series["specialized"] = result.specialized
        return CommandOutcome(results=result.to_json(), checks=[check], table=self.hilbert_rows(series))
