"""Analysis of finitely represented Euclidean frames.

Families of vectors in F^n on a weighted point set (discrete frames or
quadrature discretizations of continuous frames): Gramians, optimal frame
bounds, frame/Parseval predicates, extended analysis/synthesis operators,
and frame-preserving paths and perturbations.
"""

from .errors import (CapacityError, DegenerateFamilyWarning, FrameDomainError, FrameError,
                     FrameInputError, GenerationError)
from .family import (FieldTag, WeightedFamily, component, family_from_components, gramian,
                     total_energy, weighted_inner)
from .linalg import hermitian_eigenvalues, hermitian_eigh
from .frame_analysis import (BesselReport, FrameVerdict, QuotientForm, analyze,
                             default_frame_tol, extremal_vectors, f2_sufficient, frame_bounds,
                             is_bessel, is_frame, is_parseval, parseval_deviation, quotient_N,
                             quotient_N_extended, trace_mean_bounds_check)
from .operators import (CoefficientField, ExtensionReport, analysis, coefficient_inner,
                        delta_embedding, extended_frame_matrix, extended_frame_operator,
                        extension_equivalence_check, family_inner, frame_operator_apply,
                        indicator_embedding, synthesis)
from .topology import (AuxMode, Leg, PathCertificate, PathMode, PathSpec, auxiliary_family,
                       build_path, certify_path, cross_gramian, density_perturb,
                       effective_dimension, path_eval, path_invariant_violations)
from .generators import (circle_frame, dirichlet_example, mercedes_benz, random_family,
                         random_parseval_family, standard_basis)
from .io import read_family, write_family

__version__ = "0.1.0"
