"""Exact order calculus for pairs of elements in finite groups.

Mutual orders and their bounds, Hall collection in free nilpotent groups of
two generators, the class-2 ratio classification, and a verification harness
over a catalog of concrete groups.
"""

from .class2 import Class2Verdict, class2_identities_check, classify_pair, commutator_order_class2
from .elements import (
    GroupElement,
    commutator,
    conjugate,
    element_order,
    from_cycles,
    identity_like,
    inverse,
    multiply,
    permutation,
    power,
    unitriangular,
)
from .errors import (
    ConfigurationError,
    DomainError,
    GroupTooLarge,
    InternalInconsistency,
    MembershipError,
    NilorderError,
    PreconditionError,
    RepresentationMismatch,
    SpecFormatError,
    TheoremViolation,
)
from .groups import (
    FiniteGroup,
    IntersectionData,
    centralizer,
    cyclic_intersection,
    generate,
    lower_central_series,
    nilpotency_class,
)
from .hall.basis import hall_basis
from .hall.collector import NormalWord, collect
from .hall.constants import ClassConstants, class_constants
from .hall.polynomials import divisibility_check, hall_polynomials
from .order import (
    PairOrderReport,
    closed_form_value,
    commutator_exponent,
    deviation,
    jungnickel_data,
    mutual_order,
    mutual_order_closed_form,
    mutual_order_of_powers,
)

__version__ = "0.1.0"
