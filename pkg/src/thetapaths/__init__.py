"""Bijections between quadrant lattice paths and standard Young tableaux
of shape (n+2, 2, 1^n), with exhaustive verification tooling."""

from .bijections import BijectionId, apply, phi, psi, psi_swapped, psi_t, xi, xi_inverse, xi_t
from .enumeration import CountReport, count_paths_closed_form, count_tableaux_closed_form, cross_check
from .errors import ContractViolation, DomainMismatchError, ResourceLimitError, ShapeMismatchError
from .harness import (
    VerificationReport,
    certify_inverse,
    reproduce_figure1,
    verify_all,
    verify_bijection,
)
from .lattice_paths import (
    LatticePath,
    Step,
    backward_step_index,
    enumerate_paths,
    render_path_text,
    trace_positions,
    validate_path,
)
from .tableaux import (
    RegionAssignment,
    StandardTableau,
    ThetaShape,
    enumerate_tableaux,
    hook_length_count,
    regions,
    transpose,
    validate_tableau,
)

__version__ = "0.1.0"
