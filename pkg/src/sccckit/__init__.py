"""Strongly compact closed categories over concrete matrix models.

The package builds dagger-compact structure (units, names, yanking), the
global-phase quotient with its three equality criteria, the partial additive
ortho-structure with derived sums, and the Born-rule axioms as executable
checks, together with a categorical teleportation protocol.
"""

from .errors import (AbsorptionMismatch, CriterionDisagreement,
                     DegenerateSample, InvariantViolation, NotPhaseEquivalent,
                     NotProjector, NotUnitary, RootUnavailable, SccckitError,
                     SemiringLawViolation, TypeMismatch)
from .objects import (Dual, Gen, ObjectExpr, Oplus, Tensor, UNIT, Unit, ZERO,
                      Zero, dim, dual, format_object, normalize, obj_equal,
                      parse_object)
from .semirings import BOOLEAN, COMPLEX, NONNEG, InvolutiveSemiring
from .morphisms import (Morphism, compose, dagger, direct_sum, distance,
                        equal, identity, lower_star, morphism, scalar,
                        scalar_value, star, tensor, zeros)
from .core import (born_prob, born_probability_value, bipartite_projector,
                   coname, double, hs_inner, hs_norm_sq, name, partial_trace,
                   phase_witnesses, scalar_mult, trace, unit, yanking_composite)
from .ortho import (OplusDecomposition, decomposition, derived_sum, dist_left,
                    dist_right, oplus_illdefined_witness, pseudo_component,
                    pseudo_injection, pseudo_projection, zero_morphism)
from .models import (ModelHandle, copairing, fdhilb, pairing, random_unitary,
                     rel_model, resolve_model, semiring_model,
                     verify_model_axioms, weight_model)
from .wproj import (WMorphism, WProjModel, canonical_rep, check_prep_state,
                    lift, wcompose, wdagger, wequal, wtensor)
from .born import (Valuation, check_born_decomposition, check_diagonal_axiom,
                   check_ortho_bornian, check_theorem_equivalence,
                   check_trace_linearity, corrupted_trace, is_positive,
                   pseudo_diagonal, scalar_sum, valuation_norm)
from .protocols import (BranchTuple, MeasurementSpec, cc_map,
                        measurement_probabilities, nondestructive_measurement,
                        qubit, run_teleportation, weighted_bit_collapse_witness)
from .report import CheckResult, VerificationReport, from_json
from .suites import SUITE_NAMES, run_suite

__version__ = "0.1.0"
