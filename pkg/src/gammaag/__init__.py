"""Finite Gamma-AG-groupoids, their crisp and intuitionistic fuzzy ideals,
and an executable catalog of the ideal theorems with a counterexample hunter."""

from .carrier import (
    GammaGroupoid,
    IntraRegularityReport,
    IntraRegularWitness,
    LawId,
    LawReport,
    LawWitness,
    check_law,
    derive_power_gamma,
    evaluate_law,
    holds,
    intra_regular_witness,
    intra_regular_witnesses,
    intra_regularity,
    law_violations,
    product,
    validate_groupoid,
)
from .crisp import CrispKind, CrispSubset, CrispVerdict, CrispWitness, DuoVerdict, is_crisp, is_duo, level_cut, subset_product
from .documents import (
    FIXTURES,
    dumps,
    load_fixture,
    load_groupoid,
    load_ifs,
    save_groupoid,
    save_ifs,
    verdict_document,
)
from .errors import GammaAGError
from .ideals import IfsKind, IfsVerdict, IfsWitness, characterize_by_composition, is_if, is_if_all, largest_ideal_below
from .ifs import (
    IFS,
    compose,
    constant_ifs,
    contains,
    delta,
    equals,
    format_grade,
    intersect,
    is_idempotent,
    make_ifs,
    parse_grade,
    random_ifs,
    union,
)
from .lab import (
    CATALOG,
    GRAND_PREDICATES,
    HuntConfig,
    HuntReport,
    InstanceBundle,
    TheoremId,
    TheoremVerdict,
    TheoremWitness,
    enumerate_groupoids,
    grand_predicates,
    hunt,
    semilattice_check,
    verify,
)

__version__ = "0.1.0"
