"""Exact growth computations for finitely presented associative algebras.

The package splits into exact arithmetic cores (fields, magnitude), the
free-algebra workbench (words, elements, parser, subspace), dimension
series and infinite-dimension certificates (series), the subspace ladder
construction (ladder), dyadic relation schedules and growth bounds
(schedule), truncated-ideal certificates (quotient), and a CLI (cli).
"""

from .fields import GF2, GF3, QQ, Field, FieldError, field_by_name
from .limits import CapacityError, memory_limit_bytes
from .magnitude import ComparisonUndecided, Magnitude, MagnitudeError, magnitude_cmp
from .words import num_words, parse_word, word_str
from .elements import Element
from .parser import ParseError, parse_expression, parse_relation, parse_relations
from .subspace import Subspace
from .series import (Certificate, DegreeProfile, EntropyEstimate, GSReport,
                     SearchParams, certify_infinite, entropy_estimate, gs_check,
                     gs_min_series, hilbert_quotient)
from .ladder import (AbsorptionReport, BinaryDecomposition, Ladder, LadderError,
                     LadderLevel, WindowSpanReport, WitnessReport, absorption_check,
                     build_ladder, compute_E, cover_bound_check, decompose_binary,
                     e_sets_consistent, ladder_from_levels, relation_window_span,
                     survivor_witness, v_bound_check)
from .schedule import (ConditionEntry, DyadicProfile, GrowthBounds, Schedule,
                       ScheduleError, ValidationReport, bracket_exponent,
                       check_cumulative_gap, compute_schedule,
                       cumulative_gap_report, dyadic_profile,
                       exponential_exceeds_quasipoly, growth_bounds,
                       sample_valid_profile, tower_class_checks, tower_profile,
                       validate_profile, verify_schedule, window_of)
from .quotient import (AuditReport, CommutativityStatus, FinDimCertificate,
                       QuotientError, ThresholdInfo, TruncatedIdeal,
                       audit_soundness, certify_finite_dimensional,
                       commutative_construction, commutativity_status,
                       relation_threshold, sample_presentation,
                       truncated_ideal_basis)

__version__ = "0.1.0"
