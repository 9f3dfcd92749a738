"""Exact graded characters and Hilbert series of involution matrix loci.

A closed-formula layer (partitions, Schur series, Pieri products, the
even plethysm) computes the graded Frobenius images and Hilbert series
of the quotients attached to involutions, perfect matchings, and
fixed-point-count conjugacy classes; an independent linear-algebra
oracle recomputes everything from evaluation-matrix ranks and projection
traces over the finite loci.
"""

from .characters import (
    CharacterTable,
    ClassFunction,
    character_table,
    decompose_class_function,
    equivariant_log_concave,
    kronecker_multiplicities,
    schur_to_class_function,
)
from .errors import DomainError, InternalCheckError, ResourceLimitError
from .formulas import (
    DegreeHistogram,
    conjugacy_schur_coefficient,
    first_row_stratification_identity,
    grfrob_conjugacy,
    grfrob_matchings,
    grfrob_pm,
    hilb_conjugacy,
    hilb_matchings,
    hilb_pm,
    matchings_degree_histogram,
    paired_truncation_identity,
    pm_degree_histogram,
    pm_lds_histogram,
    ungraded_frob_conjugacy,
)
from .loci import (
    Involution,
    LocusSpec,
    conjugate_involution,
    enumerate_locus,
    fixed_count,
    involution_count,
    locus_size,
    matching_monomial,
    matchings,
    perfect_matchings,
)
from .oracle import (
    EvaluationMatrix,
    IdealComparison,
    IdealGenerators,
    compare_ideal_with_locus,
    graded_character_oracle,
    graded_hilbert_oracle,
    grfrob_oracle,
    ideal_generators,
    ideal_quotient_hilbert,
    symmetrizer_annihilation_check,
)
from .partitions import Partition, conjugate, even_partitions, partitions_of
from .schur import (
    QPoly,
    SchurSeries,
    pieri_multiply,
    plethysm_sd_s2,
    schur_coefficient,
    truncate_first_row,
)
from .tableaux import count_syt, lds, odd_column_count, schensted

__version__ = "0.1.0"
