from functools import cached_property
from typing import Dict, List

from loguru import logger

from core.config import settings
from core.exceptions import ConfigurationError, InvalidStructureError
from models.run_config import DoubleKind, GroupKind, ModuleKind, RunConfig, StructureKind, YDKind
from services.braided.genericity import GenericParams
from services.cherednik.algebra import CherednikParams, cherednik_algebra, class_parameters, delta_tc
from services.cherednik.embedding import build_reflection_yd
from services.cherednik.restricted import restricted_spec
from services.doubles.double import DoubleSpec
from services.doubles.relations import minimal_double
from services.groups.fin_group import (
    FinGroup,
    cyclic_group,
    dihedral_group,
    group_from_generators,
    parse_permutation,
    symmetric_group,
    trivial_group,
)
from services.linalg.field import FieldSpec
from services.linalg.matrix import Matrix
from services.modules.gmodule import (
    GModule,
    permutation_module,
    reflection_module,
    sign_module,
    trivial_module,
)
from services.modules.yd_module import YDModule
from services.nichols.bosonisation import kaplansky_module
from services.qyd.structure import QYDStructure, mix_structures


class CommandContext:
    """Objects described by a RunConfig, built on first use.

    Config errors surface as BraidedDoubleException subclasses with exit code 2.
    """

    def __init__(self, config: RunConfig):
        self.config = config

    @property
    def truncation(self) -> int:
        return self.config.truncation

    @cached_property
    def field(self) -> FieldSpec:
        return FieldSpec(self.config.field.characteristic)

    @cached_property
    def group(self) -> FinGroup:
        cfg = self.config.group
        cap = settings.MAX_GROUP_ORDER
        if cfg.kind == GroupKind.SYMMETRIC:
            group = symmetric_group(cfg.n, cap)
        elif cfg.kind == GroupKind.CYCLIC:
            group = cyclic_group(cfg.n, cap)
        elif cfg.kind == GroupKind.DIHEDRAL:
            group = dihedral_group(cfg.n, cap)
        elif cfg.kind == GroupKind.TRIVIAL:
            group = trivial_group()
        else:
            perms = [parse_permutation(spec, cfg.degree) for spec in cfg.generators]
            group = group_from_generators(perms, cfg.degree, cap, name="G")
        logger.info(f"Group {group.name or 'G'} of order {group.order}")
        return group

    @cached_property
    def module(self) -> GModule:
        cfg = self.config.module
        group, fld = self.group, self.field
        if cfg.kind == ModuleKind.REFLECTION:
            return reflection_module(group, fld)
        if cfg.kind == ModuleKind.PERMUTATION:
            return permutation_module(group, fld)
        if cfg.kind == ModuleKind.SIGN:
            return sign_module(group, fld)
        if cfg.kind == ModuleKind.TRIVIAL:
            return trivial_module(group, fld, cfg.dim)
        if len(cfg.matrices) != len(group.generators):
            raise ConfigurationError("module.matrices", f"{len(cfg.matrices)} matrices for {len(group.generators)} generators")
        images = [Matrix.from_rows(rows, fld) for rows in cfg.matrices]
        return GModule.from_generator_images(group, images, fld, name="V")

    @cached_property
    def params(self) -> CherednikParams:
        cfg = self.config.cherednik
        labels = class_parameters(self.module, cfg.c)
        return CherednikParams(t=cfg.t, c=labels, default_c=cfg.c_default)

    @cached_property
    def generic(self) -> GenericParams:
        return GenericParams.from_settings(names=["u"], trials=self.config.trials, seed=self.config.seed)

    def _maps(self, entries) -> Dict[int, Matrix]:
        out: Dict[int, Matrix] = {}
        for entry in entries:
            h = self.group.element(entry.element)
            m = Matrix.from_rows(entry.matrix, self.field)
            if m.shape != (self.module.dim, self.module.dim):
                raise InvalidStructureError("quasicoaction", f"L_{entry.element} has shape {m.shape}")
            out[h] = out[h] + m if h in out else m
        return out

    @cached_property
    def structure(self) -> QYDStructure:
        cfg = self.config.structure
        if cfg.kind == StructureKind.CHEREDNIK:
            return delta_tc(self.module, self.params)
        if cfg.kind == StructureKind.EXPLICIT:
            return QYDStructure(module=self.module, L=self._maps(cfg.maps), name="explicit")
        if cfg.kind == StructureKind.MIXTURE:
            return mix_structures([(part.coefficient, self.mixture_part(part)) for part in cfg.parts])
        if cfg.kind == StructureKind.YD:
            return QYDStructure.from_yd(self.yd)
        return QYDStructure.zero(self.module)

    def mixture_part(self, part) -> QYDStructure:
        return QYDStructure(module=self.module, L=self._maps(part.maps), name="part")

    @property
    def mixture_parts(self) -> List[QYDStructure]:
        return [self.mixture_part(part) for part in self.config.structure.parts]

    @cached_property
    def yd(self) -> YDModule:
        cfg = self.config.yd
        if cfg.kind == YDKind.REFLECTION:
            return build_reflection_yd(self.module).y_g
        if cfg.kind == YDKind.DEGREES:
            if len(cfg.degrees) != self.module.dim:
                raise ConfigurationError("yd.degrees", f"{len(cfg.degrees)} degrees for a module of dimension {self.module.dim}")
            return YDModule.from_degrees(self.module, [self.group.element(label) for label in cfg.degrees])
        if cfg.kind == YDKind.EXTERIOR:
            return kaplansky_module(cfg.dim, self.field)
        base = trivial_module(trivial_group(), self.field, cfg.dim)
        return YDModule.trivially_graded(base)

    @property
    def double_kind(self) -> DoubleKind:
        if self.config.double is not None:
            return self.config.double
        if self.config.structure.kind == StructureKind.CHEREDNIK:
            return DoubleKind.CHEREDNIK
        return DoubleKind.MINIMAL

    @cached_property
    def double(self) -> DoubleSpec:
        kind, N = self.double_kind, self.truncation
        if kind == DoubleKind.CHEREDNIK:
            return cherednik_algebra(self.module, self.params, N)
        if kind == DoubleKind.RESTRICTED:
            return restricted_spec(self.module, self.params, N)
        if kind == DoubleKind.FREE:
            return DoubleSpec.free(self.structure, N)
        return minimal_double(self.structure, N)
