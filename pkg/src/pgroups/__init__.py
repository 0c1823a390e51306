"""Exact computation with finite p-groups and their modular
representations: enumeration, characteristic-subgroup series, offender
and quadratic-action analysis, and instance checkers for a family of
structural conjectures, all at desk scale.

The natural entry points are :func:`blueprint_from_spec` for building a
group from a construction expression, :func:`load_catalog` for the
bundled small-group tables, and the ``pgroups`` command-line tool.
"""

from .errors import (
    PGroupsError, CapExceeded, SubgroupCapExceeded, ScanBudgetExceeded,
    NotPGroup, MixedRealization, WrongRealization, NotNormal,
    OddPrimeRequired, NotCoprime, NotApplicable, NotHomomorphism,
    NotInvertible, DimensionMismatch, NotWreathGroup, NotInBase,
    NoDeepest, SpecSyntaxError, InconsistencyError,
)
from .gf import GF, gf
from .realizations import (
    Realization, PermRealization, MatRealization, TableRealization,
)
from .core import (
    FiniteGroup, Subgroup, enumerate_group,
    DEFAULT_ELEMENT_CAP, DEFAULT_SUBGROUP_CAP, DEFAULT_SCAN_BUDGET,
    TABLE_CAP,
)
from .constructions import (
    Blueprint, ThompsonHint, cyclic, dihedral, direct_product,
    wreath_cyclic, iterated_wreath, sylow_symmetric, unitriangular,
    nij_generators, sylow_gl_coprime, jordan_extension,
)
from .specdsl import (
    SpecNode, parse_spec, blueprint_from_node, blueprint_from_spec,
    load_group_file, save_group_file,
)
from .reports import (
    CheckResult, result_line, write_report_lines, exit_code_for,
    word_str, parse_word, element_witness, subgroup_witness,
    subgroup_from_witness,
)
from .analysis import (
    maximal_elementary_abelians, all_elementary_abelians,
    thompson_subgroup, is_weakly_closed, abelian_normal_span,
    support_profile, lemma56_check,
)
from .series import (
    KSeriesCertificate, is_k_chain, admitting_set, y_subgroup,
    x_subgroup, y_certificate, check_y1, thm19_conditions,
)
from .modrep import (
    JExponent, Representation, MatrixRep, PermRep,
    build_representation, regular_representation, permutation_module,
    natural_module, load_module_file, fixed_subspace, j_exponent,
    offenders, best_offenders, is_f_module, mfs_check,
    is_quadratic_element, unipotency_degree, ghl_bound_check,
    quadratic_elements, is_orthogonal, perp_subgroup,
    is_quadratic_subgroup, prop46_search, check_y2, check_ghl,
    check_weak_closure, hypothesis_instance, r0, deepest_commutators,
    locally_deepest, QuadReport, classify_quadratics, lemma83_check,
    lemma84_check, thm17_check, prop91_premise, thm92_check,
)
from .catalog import CatalogEntry, load_catalog, catalog_entry

__version__ = "1.0.0"
