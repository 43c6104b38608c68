"""GF(2) homology layer GF(2) 同调层

Symplectic spaces with an involution, Smith discrepancy, characteristic element, quadratic
functions, Arf invariants, difference classes and quotient isometries
带对合的辛空间、Smith 差、特征元、二次函数、Arf 不变量、差类与商等距
"""

from .space import QuadSpace, arf, arf_by_majority, shifted_arfs
from .lattice import SubgroupLattice, subgroup_lattice, symmetrizer
from .models import (
    CLASS_INVARIANTS,
    ClassInvariants,
    class_invariants,
    conjugate,
    dump_model,
    random_symplectic,
    standard_model,
    standard_models,
)
from .quotient import (
    CASE_I0,
    CASE_I1,
    CASE_K_MINUS_I,
    DifferenceClasses,
    DifferenceMode,
    Quotient,
    admissible_difference_classes,
    contact_class_parity,
    quotient_by,
    quotient_discrepancy,
    theta_quotient_class,
)
from .suite import PROPERTIES, check_model, verify_suite

__all__ = [
    # Spaces
    "QuadSpace",
    "arf",
    "arf_by_majority",
    "shifted_arfs",
    "SubgroupLattice",
    "subgroup_lattice",
    "symmetrizer",
    # Standard models
    "CLASS_INVARIANTS",
    "ClassInvariants",
    "class_invariants",
    "conjugate",
    "dump_model",
    "random_symplectic",
    "standard_model",
    "standard_models",
    # Quotients and difference classes
    "CASE_I0",
    "CASE_I1",
    "CASE_K_MINUS_I",
    "DifferenceClasses",
    "DifferenceMode",
    "Quotient",
    "admissible_difference_classes",
    "contact_class_parity",
    "quotient_by",
    "quotient_discrepancy",
    "theta_quotient_class",
    # Suite
    "PROPERTIES",
    "check_model",
    "verify_suite",
]
