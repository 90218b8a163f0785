"""Exact differential calculi on finite sets, the finite T0 spaces they
generate, and simplicial coarse graining of their polyhedral realizations.

Everything is computed over exact Gaussian rationals; all operations are
pure functions over immutable values and safe to share between threads.
"""

from .scalars import GaussianRational
from .envelope import (
    EmptyWord,
    EqualAdjacentLetters,
    Form,
    IndexOutOfRange,
    Word,
    WordError,
    basis_words,
    bimodule_action,
    differential,
    differential_word,
    form_product,
    inner,
    is_subsequence,
    unit,
    word_product,
    word_validate,
)
from .ideals import BasicIdeal, GradeZeroGenerator, normalize_generators
from .automata import longest_avoiding_word
from .manifolds import (
    INFINITE,
    InfiniteDimensional,
    Manifold,
    NotAntisymmetric,
    Relation,
    StructureReport,
    StructureViolation,
    fully_ordered_sequences,
)
from .complexes import NotASimplex, SimplicialComplex
from .topology import (
    FiniteSpace,
    HasseDiagram,
    TooLarge,
    generated_space,
    hasse,
    is_t0,
    open_sets,
    poset_isomorphic,
    specialization_order,
    t0_quotient,
)
from .coarse import (
    CorrespondenceReport,
    Covering,
    NotACover,
    STANDARD_CIRCLE_ARCS,
    STANDARD_CIRCLE_EXTRA_POINTS,
    SamplePoint,
    UncoveredPoint,
    circle_covering,
    realize,
    sample,
    sampled_substitute,
    simplicial_substitute,
    trace_substitute,
    verify_correspondence,
)
from .errors import FinitaryError

__version__ = "0.1.0"

__all__ = [
    "BasicIdeal",
    "CorrespondenceReport",
    "Covering",
    "EmptyWord",
    "EqualAdjacentLetters",
    "FiniteSpace",
    "FinitaryError",
    "Form",
    "GaussianRational",
    "GradeZeroGenerator",
    "HasseDiagram",
    "INFINITE",
    "IndexOutOfRange",
    "InfiniteDimensional",
    "Manifold",
    "NotACover",
    "NotASimplex",
    "NotAntisymmetric",
    "Relation",
    "STANDARD_CIRCLE_ARCS",
    "STANDARD_CIRCLE_EXTRA_POINTS",
    "SamplePoint",
    "SimplicialComplex",
    "StructureReport",
    "StructureViolation",
    "TooLarge",
    "UncoveredPoint",
    "Word",
    "WordError",
    "basis_words",
    "bimodule_action",
    "circle_covering",
    "differential",
    "differential_word",
    "form_product",
    "fully_ordered_sequences",
    "generated_space",
    "hasse",
    "inner",
    "is_subsequence",
    "is_t0",
    "longest_avoiding_word",
    "normalize_generators",
    "open_sets",
    "poset_isomorphic",
    "realize",
    "sample",
    "sampled_substitute",
    "simplicial_substitute",
    "specialization_order",
    "t0_quotient",
    "trace_substitute",
    "unit",
    "verify_correspondence",
    "word_product",
    "word_validate",
]
