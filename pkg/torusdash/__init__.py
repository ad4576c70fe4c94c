from .liegroups import (
    GroupFactor,
    GroupSpec,
    PsiHom,
    normalize_spec,
    orbit_space_dim,
    possible_F_sizes,
    min_rep_dims,
    max_rank_subgroup,
)
from .loaders import parse_spec
from .fivetuples import (
    AdmissibleFiveTuple,
    CatalogBase,
    validate,
    equivalent,
    reduce,
    expand,
    extend,
    realize,
    propagate_flags,
)
from .classify import (
    base_catalog,
    enumerate_tuples,
    classify,
    family_answer,
    reference_tables,
)
from .manifolds import canonical_name, dim, euler
from .utils import frame_to_tsv, frame_to_json_lines
from . import weyl

__all__ = [
    "GroupFactor",
    "GroupSpec",
    "PsiHom",
    "normalize_spec",
    "orbit_space_dim",
    "possible_F_sizes",
    "min_rep_dims",
    "max_rank_subgroup",
    "parse_spec",
    "AdmissibleFiveTuple",
    "CatalogBase",
    "validate",
    "equivalent",
    "reduce",
    "expand",
    "extend",
    "realize",
    "propagate_flags",
    "base_catalog",
    "enumerate_tuples",
    "classify",
    "family_answer",
    "reference_tables",
    "canonical_name",
    "dim",
    "euler",
    "frame_to_tsv",
    "frame_to_json_lines",
    "weyl",
]
