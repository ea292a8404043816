"""Hensel lifting of solutions of polynomial matrix equations over Z/p^l and F_p[u]/(u^l)."""

from .centralizer import (CentralizerCoords, CyclicFrame, coords_to_matrix, express_in_powers,
                          find_cyclic_frame, is_cyclic, min_poly_residue, verify_null_ideal_small)
from .errors import MatliftError
from .lift import (DerivativeProfile, LiftProblem, LiftTranscript, hensel_step, lift_to_length,
                   stream_levels, validate_hypotheses)
from .matrix import Matrix, UniPoly, charpoly, det, invert_matrix
from .polynomial import MultiPoly, eval_at_tuple, taylor_linear_residual
from .ring import Family, RingElement, RingSpec
from .search import (Mode, SearchBudget, cross_check_lift, exhaustive_solutions_over_ring,
                     residue_solutions)

__version__ = "0.1.0"
