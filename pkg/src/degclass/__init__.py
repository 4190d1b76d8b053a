"""degclass: exact character-degree and class-size invariants of finite
permutation groups, verified against independently computed group structure."""

__version__ = "0.1.0"

from .arith import PrimeSet, prime_set, primes_of
from .chardeg import (
    ClassAlgebraData,
    DegreeFrequency,
    DixonPrimeSearchError,
    EigensplitError,
    character_degrees,
    class_algebra,
)
from .corpus import CorpusError, GroupRecord, builtin_corpus, parse_corpus, serialize_corpus
from .criteria import CriterionVerdict, GroupData, run_all_criteria
from .families import FAMILIES, standard_group
from .group import (
    DEFAULT_ENUMERATION_CAP,
    Group,
    GroupTooLargeError,
    build_group,
    direct_product,
    enumerate_elements,
)
from .metrics import (
    ClassSizeFrequency,
    class_size_frequency,
    is_pi_number,
    pi_complement,
    pi_part,
    s_pi_size,
    u_pi,
)
from .perm import Permutation, compose, format_cycles, identity, inverse, parse_cycles
from .report import Report, ReportOptions, run_report
from .structure import (
    ConjugacyClassSet,
    Subgroup,
    centralizer,
    centre,
    commutator_subgroup_of,
    conjugacy_classes,
    derived_subgroup,
    has_central_hall,
    has_normal_abelian_hall,
    hypercentre,
    is_direct_product_p,
    lower_central_last,
    normalizer,
    p_prime_residual,
    p_residual,
    pi_elements_subgroup,
    q_r_elements_commute,
    sylow_subgroup,
)

__all__ = [
    "__version__",
    "PrimeSet",
    "prime_set",
    "primes_of",
    "Permutation",
    "compose",
    "inverse",
    "identity",
    "parse_cycles",
    "format_cycles",
    "Group",
    "GroupTooLargeError",
    "DEFAULT_ENUMERATION_CAP",
    "build_group",
    "enumerate_elements",
    "direct_product",
    "FAMILIES",
    "standard_group",
    "ConjugacyClassSet",
    "Subgroup",
    "conjugacy_classes",
    "centralizer",
    "centre",
    "normalizer",
    "derived_subgroup",
    "lower_central_last",
    "hypercentre",
    "commutator_subgroup_of",
    "p_residual",
    "p_prime_residual",
    "sylow_subgroup",
    "pi_elements_subgroup",
    "is_direct_product_p",
    "has_central_hall",
    "has_normal_abelian_hall",
    "q_r_elements_commute",
    "DegreeFrequency",
    "ClassAlgebraData",
    "DixonPrimeSearchError",
    "EigensplitError",
    "class_algebra",
    "character_degrees",
    "ClassSizeFrequency",
    "class_size_frequency",
    "pi_part",
    "is_pi_number",
    "pi_complement",
    "u_pi",
    "s_pi_size",
    "CriterionVerdict",
    "GroupData",
    "run_all_criteria",
    "CorpusError",
    "GroupRecord",
    "parse_corpus",
    "serialize_corpus",
    "builtin_corpus",
    "Report",
    "ReportOptions",
    "run_report",
]
