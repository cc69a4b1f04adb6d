"""Toric bases and family classification for numerical semigroups."""

from .binomial import BasisSet, KernelBinomial, binomial_from_parts, make_binomial
from .census import (
    ScanJob,
    brute_force_with_frobenius,
    census_row,
    enumerate_free_with_frobenius,
    scan,
)
from .classify import (
    ClassificationReport,
    RobustnessFlags,
    UniqueWriting,
    circuits,
    family_report,
    free_arrangement_witness,
    is_betti_divisible,
    is_circuit_semigroup,
    is_free,
    is_free_for_arrangement,
    is_telescopic,
    is_universally_free,
    robustness_flags,
    unique_writing,
    universally_free_witness,
)
from .config import Budget
from .ed3 import Ed3Parameters, classify_ed3, closed_form_bases
from .errors import (
    InternalConsistencyError,
    ResourceLimitError,
    TorbaseError,
    ValidationError,
)
from .graver import graver, is_primitive
from .groebner import (
    MarkedBasis,
    MonomialOrder,
    groebner_fan,
    initial_ideal_generator_counts,
    reduced_groebner,
    universal_groebner,
    universal_groebner_by_fiber_edges,
)
from .markov import (
    betti_elements,
    critical_binomials,
    critical_exponents,
    is_complete_intersection,
    minimal_markov,
    universal_markov,
)
from .semigroup import Fiber, NumericalSemigroup, semigroup

__version__ = "0.1.0"
