from enum import Enum
from typing import Dict, List, Optional, Union

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

ScalarText = Union[int, str]


class GroupKind(str, Enum):
    SYMMETRIC = "symmetric"
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    TRIVIAL = "trivial"
    PERMUTATIONS = "permutations"


class ModuleKind(str, Enum):
    REFLECTION = "reflection"
    PERMUTATION = "permutation"
    SIGN = "sign"
    TRIVIAL = "trivial"
    MATRICES = "matrices"


class StructureKind(str, Enum):
    CHEREDNIK = "cherednik"
    EXPLICIT = "explicit"
    MIXTURE = "mixture"
    YD = "yd"
    ZERO = "zero"


class DoubleKind(str, Enum):
    FREE = "free"
    MINIMAL = "minimal"
    CHEREDNIK = "cherednik"
    RESTRICTED = "restricted"


class YDKind(str, Enum):
    REFLECTION = "reflection"
    DEGREES = "degrees"
    SYMMETRIC = "symmetric"
    EXTERIOR = "exterior"


class FieldConfig(BaseModel):
    """Ground field: characteristic 0 for the rationals, a prime p for GF(p)."""
    characteristic: int = Field(default=0, ge=0, description="0 or a prime")

    @field_validator("characteristic")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        if v != 0 and not sympy.isprime(v):
            raise ValueError(f"{v} is neither 0 nor a prime")
        return v


class GroupConfig(BaseModel):
    """A named permutation group or explicit permutation generators.

    Attributes:
        kind: symmetric / cyclic / dihedral / trivial / permutations
        n: parameter of the named families
        degree: number of points for explicit generators
        generators: cycle strings ("(1 2 3)"), cycle lists or one-line images, 1-based
    """
    kind: GroupKind = GroupKind.SYMMETRIC
    n: int = Field(default=3, ge=1, le=10, description="Parameter of the named family")
    degree: Optional[int] = Field(default=None, ge=1, le=64, description="Points moved by explicit generators")
    generators: List[Union[str, List[int], List[List[int]]]] = Field(default=[], description="Explicit permutation generators")

    @model_validator(mode="after")
    def validate_generators(self):
        if self.kind == GroupKind.PERMUTATIONS and (self.degree is None or not self.generators):
            raise ValueError("explicit groups need a degree and at least one generator")
        return self


class ModuleConfig(BaseModel):
    """The G-module V: a named module or explicit generator images (rows of entries)."""
    kind: ModuleKind = ModuleKind.REFLECTION
    dim: int = Field(default=1, ge=1, le=64, description="Dimension of the trivial module")
    matrices: List[List[List[ScalarText]]] = Field(default=[], description="One matrix per group generator")

    @field_validator("matrices")
    @classmethod
    def validate_square(cls, v: List[List[List[ScalarText]]]) -> List[List[List[ScalarText]]]:
        for m in v:
            if any(len(row) != len(m) for row in m):
                raise ValueError("generator images must be square")
        return v


class LMapConfig(BaseModel):
    element: str = Field(..., description="Group element label in cycle notation, '()' for e")
    matrix: List[List[ScalarText]]


class MixturePart(BaseModel):
    coefficient: ScalarText = 1
    maps: List[LMapConfig] = []


class StructureConfig(BaseModel):
    """The quasi-YD structure on V: delta_{t,c}, explicit maps L_h, a mixture, the
    coaction of the YD module, or zero."""
    kind: StructureKind = StructureKind.CHEREDNIK
    maps: List[LMapConfig] = []
    parts: List[MixturePart] = []

    @model_validator(mode="after")
    def validate_parts(self):
        if self.kind == StructureKind.MIXTURE and not self.parts:
            raise ValueError("a mixture needs at least one part")
        return self


class YDConfig(BaseModel):
    """A Yetter-Drinfeld module: Y_G of the module, the module with explicit degrees,
    or k^dim with braiding tau (symmetric) or -tau (exterior)."""
    kind: YDKind = YDKind.REFLECTION
    degrees: List[str] = Field(default=[], description="Degree label of each basis vector")
    dim: int = Field(default=3, ge=1, le=12)


class CherednikConfig(BaseModel):
    """Parameters of H_{t,c}: c keyed by the label of any element of a reflection class."""
    t: ScalarText = 1
    c: Dict[str, ScalarText] = {}
    c_default: Optional[ScalarText] = 1
    assume_irreducible: bool = False


class OneDimConfig(BaseModel):
    """A character alpha (value per element, in element order) and central p."""
    alpha: List[ScalarText] = []
    p: Dict[str, ScalarText] = {}


class RunConfig(BaseModel):
    """One CLI run: the command and everything it needs.

    Attributes:
        command: registered command name
        truncation: N, the largest degree computed
        degree: degree of single-degree commands (HC Gram matrix)
        seed: seed of every random choice
        trials: independent specializations for generic parameters
        u: explicit deformation parameter for the Fomin-Kirillov family
        output: file receiving the report (stdout when absent)
        double: free / minimal / cherednik / restricted; cherednik structures default
            to the Cherednik algebra, everything else to the minimal double
    """
    command: str = Field(default="nichols-hilbert", description="Command to run")
    field: FieldConfig = FieldConfig()
    group: GroupConfig = GroupConfig()
    module: ModuleConfig = ModuleConfig()
    structure: StructureConfig = StructureConfig()
    yd: YDConfig = YDConfig()
    cherednik: CherednikConfig = CherednikConfig()
    one_dim: OneDimConfig = OneDimConfig()
    double: Optional[DoubleKind] = Field(default=None, description="Double used by minimality, hc-gram and standard-module")
    truncation: int = Field(default=4, ge=1, le=12, description="Truncation degree N")
    degree: Optional[int] = Field(default=None, ge=1, le=12, description="Degree for single-degree commands")
    seed: int = Field(default=0, ge=0)
    trials: int = Field(default=3, ge=2, le=20)
    samples: int = Field(default=100, ge=0, le=10000, description="Random words for associativity checks")
    u: Optional[ScalarText] = None
    output: Optional[str] = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "command": "cherednik-pbw",
                "field": {"characteristic": 0},
                "group": {"kind": "symmetric", "n": 3},
                "module": {"kind": "reflection"},
                "structure": {"kind": "cherednik"},
                "cherednik": {"t": 1, "c": {"(1 2)": 1}},
                "truncation": 3,
                "seed": 0
            }
        }
    )
