from typing import Any, Dict, List

from loguru import logger

from models.reports import CheckReport
from models.run_config import StructureKind
from services.braided.genericity import generic_mixture_kernels
from services.braided.quasibraided import quasibraided_factorial, right_quasibraided_factorial
from services.doubles.double import DoubleEngine, DoubleSpec, associativity_witnesses
from services.doubles.minimality import minimality_check
from services.doubles.pairing import harish_chandra_formula, harish_chandra_gram
from services.doubles.pbw import pbw_slices
from services.doubles.relations import minimal_relations, quadratic_double_dims, triangular_ideal_check
from services.doubles.standard_module import standard_module_matrices
from services.modules.gmodule import trivial_module
from services.nichols.algebra import relations_are_stable
from ..base_command import BaseCommand, CommandOutcome
from ..context import CommandContext


def stability_report(context: CommandContext, relations) -> CheckReport:
    if relations_are_stable(context.structure.module, relations):
        return CheckReport.ok("relations_stable", degrees=len(relations) - 1)
    return CheckReport.fail("relations_stable", {"side": "left"})


def factorial_kernel_report(q, left, right, top: int) -> CheckReport:
    """The degree-by-degree recursion against the kernels of the full factorials."""
    for n in range(1, top + 1):
        if quasibraided_factorial(q, n, check=False).kernel() != left[n]:
            return CheckReport.fail("factorial_kernels", {"side": "left", "degree": n})
        if right_quasibraided_factorial(q, n, check=False).kernel() != right[n]:
            return CheckReport.fail("factorial_kernels", {"side": "right", "degree": n})
    return CheckReport.ok("factorial_kernels", degrees=top)


class FreeDoublePBWCommand(BaseCommand):
    """T(V) # kG # T(V*): slice dimensions and associativity of the straightening."""

    name = "free-double-pbw"
    operations = ["DoubleSpec.free", "straighten", "pbw_slices", "associativity_witnesses"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        spec = DoubleSpec.free(context.structure, context.truncation)
        engine = DoubleEngine(spec)
        checks = [
            pbw_slices(spec, engine=engine),
            associativity_witnesses(spec, seed=context.config.seed, samples=context.config.samples, engine=engine),
        ]
        results = {"name": spec.name, "left_dims": spec.quotient_dims("left"), "right_dims": spec.quotient_dims("right")}
        return CommandOutcome(results=results, checks=checks)


class MinimalRelationsCommand(BaseCommand):
    """Relations of the minimal double, or of a generic mixture of structures."""

    name = "minimal-relations"
    operations = [
        "minimal_relations",
        "quasibraided_factorial",
        "right_quasibraided_factorial",
        "kernel_basis",
        "triangular_ideal_check",
        "relations_are_stable",
        "tensor_module",
        "generic_mixture_kernels",
        "mix_structures",
    ]

    def execute(self, context: CommandContext) -> CommandOutcome:
        q, N = context.structure, context.truncation
        if context.config.structure.kind == StructureKind.MIXTURE:
            kernels = generic_mixture_kernels(context.mixture_parts, N, context.generic)
            relation_dims = [space.dim for space in kernels]
            dims = [space.codim for space in kernels]
            results = {"relation_dims": relation_dims, "dims": dims, "trials": context.generic.trials, "generic": True}
            return CommandOutcome(results=results, table=self.hilbert_rows({"relations": relation_dims, "dimension": dims}))

        left, right = minimal_relations(q, N)
        spec = DoubleSpec(qyd=q, truncation=N, left_relations=left, right_relations=right, name=f"minimal double of {q.name}")
        checks = [
            triangular_ideal_check(q, left, "left"),
            triangular_ideal_check(q, right, "right"),
            spec.ideal_growth_check(),
            stability_report(context, left),
            factorial_kernel_report(q, left, right, min(N, 3)),
        ]
        results = {
            "left_relation_dims": [space.dim for space in left],
            "right_relation_dims": [space.dim for space in right],
            "left_dims": spec.quotient_dims("left"),
            "right_dims": spec.quotient_dims("right"),
        }
        table = self.hilbert_rows({"left": results["left_dims"], "right": results["right_dims"]})
        return CommandOutcome(results=results, checks=checks, table=table)


class QuadraticDimsCommand(BaseCommand):
    """Quadratic cover of the minimal double against the minimal double itself."""

    name = "quadratic-dims"
    operations = ["quadratic_double_dims", "minimal_relations"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        q, N = context.structure, context.truncation
        quadratic = quadratic_double_dims(q, N)
        minimal = [space.codim for space in minimal_relations(q, N)[0]]
        check = CheckReport.ok("quadratic_cover", quadratic=quadratic, minimal=minimal)
        if any(a < b for a, b in zip(quadratic, minimal)):
            check = CheckReport.fail("quadratic_cover", {"quadratic": quadratic, "minimal": minimal})
        results = {"quadratic_dims": quadratic, "minimal_dims": minimal, "quadratic": quadratic == minimal}
        return CommandOutcome(results=results, checks=[check], table=self.hilbert_rows({"quadratic": quadratic, "minimal": minimal}))


class MinimalityCommand(BaseCommand):
    """Elements of U- or U+ commuting with all of V* (resp. V)."""

    name = "minimality"
    operations = ["minimality_check"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        spec = context.double
        report = minimality_check(spec, N=context.config.degree)
        results = {"double": context.double_kind.value, "name": spec.name, "minimal": report.passed}
        return CommandOutcome(results=results, checks=[report])


class HCGramCommand(BaseCommand):
    """Harish-Chandra Gram matrices by straightening, compared with the factorial formula."""

    name = "hc-gram"
    operations = ["harish_chandra_gram", "harish_chandra_formula"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        spec = context.double
        engine = DoubleEngine(spec)
        top = min(context.config.degree or context.truncation, spec.truncation)
        grams: List[Dict[str, Any]] = []
        checks: List[CheckReport] = []
        mismatch = None
        degenerate = []
        for n in range(1, top + 1):
            gram = harish_chandra_gram(spec, n, engine=engine)
            formula = harish_chandra_formula(spec.qyd, n, gram.left_basis, gram.right_basis)
            blocks = {g: m for g, m in gram.blocks.items() if not m.is_zero()}
            expected = {g: m for g, m in formula.items() if not m.is_zero()}
            if blocks != expected and mismatch is None:
                mismatch = n
            if not gram.nondegenerate:
                degenerate.append(n)
            grams.append(gram.to_json(spec.group))
        if mismatch is None:
            checks.append(CheckReport.ok("harish_chandra_formula", degrees=top))
        else:
            logger.warning(f"Harish-Chandra Gram and factorial formula differ in degree {mismatch}")
            checks.append(CheckReport.fail("harish_chandra_formula", {"degree": mismatch}))
        if degenerate:
            checks.append(CheckReport.fail("harish_chandra_nondegenerate", {"degree": degenerate[0]}, degenerate=degenerate))
        else:
            checks.append(CheckReport.ok("harish_chandra_nondegenerate", degrees=top))
        return CommandOutcome(results={"double": context.double_kind.value, "grams": grams}, checks=checks)


class StandardModuleCommand(BaseCommand):
    """Generator matrices of U- (x) k, the standard module of the trivial representation."""

    name = "standard-module"
    operations = ["standard_module_matrices"]

    def execute(self, context: CommandContext) -> CommandOutcome:
        spec = context.double
        rho = trivial_module(spec.group, spec.field)
        module = standard_module_matrices(spec, rho)
        results = {
            "double": context.double_kind.value,
            "dimension": len(module.basis),
            "degrees": module.degrees,
            "matrices": {name: m.to_rows() for name, m in module.matrices(spec.group).items()},
        }
        checks = [module.report] if module.report is not None else []
        return CommandOutcome(results=results, checks=checks)
