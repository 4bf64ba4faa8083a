import warnings

import pydantic
import pytest

from core.config import Settings, settings
from core.exceptions import ConfigurationError, UnknownCommandError
from models.reports import CheckReport
from models.run_config import RunConfig
from services.commands import CommandFactory, execute, exit_status, register_commands
from services.commands.context import CommandContext


@pytest.fixture(autouse=True)
def commands():
    register_commands()


def config(**values):
    return RunConfig.model_validate(values)


def test_every_command_is_registered():
    names = CommandFactory.supported_commands()
    assert len(names) == 17
    assert {"nichols-hilbert", "cherednik-pbw", "fomin-kirillov", "hc-gram"} <= set(names)
    assert "nichols_algebra" in CommandFactory.operations()["nichols-hilbert"]


def test_unknown_command():
    with pytest.raises(UnknownCommandError) as info:
        CommandFactory.get_command("crawl")
    assert info.value.exit_code == 2
    assert "kaplansky" in info.value.details["available"]


def test_run_config_validation():
    with pytest.raises(pydantic.ValidationError):
        config(field={"characteristic": 4})
    with pytest.raises(pydantic.ValidationError):
        config(group={"kind": "permutations"})
    with pytest.raises(pydantic.ValidationError):
        config(truncation=13)
    with pytest.raises(pydantic.ValidationError):
        config(structure={"kind": "mixture"})
    assert RunConfig.model_validate(RunConfig.model_config["json_schema_extra"]["example"]).command == "cherednik-pbw"


def test_models_validate_without_deprecated_pydantic_api():
    with warnings.catch_warnings():
        warnings.simplefilter("error", pydantic.PydanticDeprecatedSince20)
        run = config(command="nichols-hilbert", field={"characteristic": 5}, module={"kind": "matrices", "matrices": [[[0, 1], [1, 0]]]})
        assert run.field.characteristic == 5
        assert RunConfig.model_json_schema()["example"]["command"] == "cherednik-pbw"
        assert CheckReport.model_json_schema()["example"]["check"] == "braid_equation"
        assert Settings.model_config["case_sensitive"]


def test_context_builds_explicit_groups_and_modules():
    context = CommandContext(config(
        group={"kind": "permutations", "degree": 4, "generators": ["(1 2 3 4)"]},
        module={"kind": "permutation"},
    ))
    assert context.group.order == 4
    assert context.module.dim == 4


def test_context_rejects_mismatched_inputs():
    context = CommandContext(config(module={"kind": "matrices", "matrices": [[[1]]]}))
    with pytest.raises(ConfigurationError):
        context.module
    context = CommandContext(config(yd={"kind": "degrees", "degrees": ["()"]}))
    with pytest.raises(ConfigurationError):
        context.yd


def test_default_double_follows_the_structure():
    assert CommandContext(config()).double_kind.value == "cherednik"
    assert CommandContext(config(structure={"kind": "yd"})).double_kind.value == "minimal"


def test_nichols_hilbert_command():
    settings.ORACLE_CAP = 3
    report, outcome = execute(config(command="nichols-hilbert", truncation=5))
    assert report.passed
    assert report.results["dimensions"] == [1, 3, 4, 3, 1, 0]
    assert report.results["total"] == 12
    assert outcome.table[2] == {"degree": 2, "dimension": 4}
    assert exit_status(report) == 0


def test_cherednik_pbw_command():
    report, _ = execute(config(command="cherednik-pbw", truncation=3, samples=10))
    assert report.passed
    assert report.results["reflections"] == 3
    assert report.results["t"] == 1
    assert report.results["c"] == {"(1 2)": 1, "(1 3)": 1, "(2 3)": 1}
    assert report.wall_time_seconds is None


def test_kaplansky_command():
    report, outcome = execute(config(command="kaplansky", yd={"dim": 2}, truncation=3))
    assert report.passed
    assert report.results["dimension"] == 8
    assert outcome.table is None


def test_restricted_dims_command():
    report, _ = execute(config(command="restricted-dims", cherednik={"t": 0}, truncation=4, degree=3))
    assert report.passed
    assert [check.check for check in report.checks][-1] == "coinvariant_dimension"


def test_fomin_kirillov_command():
    report, _ = execute(config(command="fomin-kirillov", truncation=4))
    assert report.passed
    assert report.results["fomin_kirillov"] == [1, 3, 4, 3, 1]


def test_fomin_kirillov_needs_a_symmetric_group():
    with pytest.raises(ConfigurationError):
        execute(config(command="fomin-kirillov", group={"kind": "cyclic", "n": 3}))


def test_failed_checks_are_reported_not_raised():
    report, _ = execute(config(command="minimality", structure={"kind": "zero"}, double="free", truncation=2))
    assert not report.passed
    assert report.checks[0].witness["degree"] == 1
    assert exit_status(report) == 1


LIBRARY_OPERATIONS = {
    "associativity_witnesses", "bosonisation_check", "braid_equation_check", "braided_factorial",
    "braided_integer", "braiding_from_yd", "build_YV", "build_reflection_yd", "central_pairing",
    "cherednik_algebra", "classify_1dim_check", "commutativity_classification_check", "conjugacy_classes",
    "deformed_factorial", "deformed_nichols_hilbert", "delta_tc", "dual_module", "dunkl_check",
    "dunkl_commutator", "embed_Mc_check", "embed_Pi_check", "find_reflections", "fomin_kirillov_dims",
    "group_from_generators", "harish_chandra_formula", "harish_chandra_gram", "induce_subquotient",
    "irreducibility_report", "kaplansky_algebra", "kernel_basis", "kron", "minimal_relations",
    "minimality_check", "mix_structures", "mixed_relations", "nichols_hilbert", "nichols_product",
    "pbw_slices", "perfect_subquotient_check", "quadratic_double_dims", "quasibraided_factorial",
    "qyd_check", "relations_are_stable", "restricted_dims", "restricted_spec", "right_perfect_subquotient_check",
    "right_quasibraided_factorial", "right_subquotient", "semibraiding_from_compatible",
    "specialized_deformed_factorial", "standard_module_matrices", "straighten", "tensor_module",
    "triangular_ideal_check", "woronowicz_oracle", "yd_intertwiner_check", "yd_module_check",
    "yd_pairing_check", "yv_factorial_identity",
}


def test_commands_reach_every_library_operation():
    declared = {operation for operations in CommandFactory.operations().values() for operation in operations}
    assert LIBRARY_OPERATIONS - declared == set()


def test_embed_check_command():
    report, _ = execute(config(command="embed-check", truncation=3))
    assert report.passed
    assert [check.check for check in report.checks] == ["embedding", "embed_pi"]
    assert report.results["t_prime"] == "1/3"
    assert report.results["y_pi_dim"] == 5


def test_deformed_hilbert_command_assembles_the_semibraiding():
    report, _ = execute(config(command="deformed-hilbert", truncation=3))
    assert report.passed
    assert [check.check for check in report.checks] == ["compatibility", "semibraiding"]
    assert report.checks[1].details["blocks"] == [[1, 1], [1, 2]]


def test_minimal_relations_command():
    report, _ = execute(config(command="minimal-relations", truncation=3))
    assert report.passed
    assert report.results["left_relation_dims"] == [0, 0, 1, 4]
    assert report.checks[-1].check == "factorial_kernels"
    assert report.checks[-1].details == {"degrees": 3}


def test_perfect_subquotient_command():
    report, _ = execute(config(command="perfect-subquotient", truncation=2))
    assert report.passed
    assert report.results["ambient_dimension"] == 12
    assert isinstance(report.results["dual_perfect"], bool)
