"""Exact Jones polynomials of rational knots and the moves that make them coincide."""

from .census import (
    CensusEntry,
    CoincidenceGroup,
    census,
    emit_report,
    enumerate_classes,
    find_coincidences,
)
from .classify import ClassificationResult, SearchBudget, classify_pair
from .errors import (
    BadParity,
    DomainError,
    IntegralityViolation,
    InvariantViolation,
    NoWitness,
    NonReal,
    NotAKnot,
    NotC0,
    NotDivisible,
    NotPivotEquivalent,
    OddPower,
)
from .jones import (
    canonical_jones,
    det_of,
    equal_up_to_unit,
    jones_even,
    jones_general,
    jones_knot,
    jones_span,
    jones_subsets,
    knot_sequence,
    product_identity_witness,
)
from .rationals import (
    INF,
    KnotClass,
    Rat,
    class_of,
    eval_cf,
    even_cf,
    make_q_even,
    mirror_class,
    schubert_canonical,
)
from .ring import LaurentT, LaurentU, qnumber, u_to_t
from .tangles import (
    Mat2U,
    TangleType,
    b_matrix,
    b_product,
    bracket_vector,
    c0_recognize,
    c_form,
    c_form_verify,
    tangle_type_of,
    writhe_vector,
)
from .templates import (
    TemplateInstance,
    pivot_check,
    pivot_generate,
    seq_star,
    template_one,
    template_pivot,
    template_two,
)

__version__ = "0.1.0"
