"""su(N) algebra, polynomial positivity tests, and qudit orbit-space geometry."""

from .invariants import (
    CasimirValues,
    TraceInvariants,
    bezoutian,
    bezoutian_rank,
    casimirs,
    char_coefficients,
    discriminant,
    grad_matrix,
    newton_extend,
    qutrit_t3_bloch,
    qutrit_t3_from_angles,
    quatrit_trace_from_angles,
    trace_invariants,
    traces_from_casimirs,
)
from .orbit_space import (
    ANGLE_CONVENTION,
    OrbitCoordinates,
    OrbitSpectrum,
    StratumReport,
    cartan_moduli,
    darboux_point,
    effective_radius,
    intersection_polyhedron,
    orbit_from_spectrum,
    ordered_domain_check,
    polyhedron_transition_radii,
    quatrit_rank3_cos_theta,
    rank2_curve_radius,
    rank_strata,
    spectrum_from_orbit,
    trisectrix_residual,
    unit_vector,
)
from .state_space import (
    StateClassification,
    bloch_scale,
    check_state_bloch,
    check_state_traces,
    dim_from_bloch,
    eig_oracle,
    from_bloch,
    haar_unitary,
    jacobi_eigh,
    random_hermitian_unit_trace,
    sample_states,
    to_bloch,
    uniform_simplex,
)
from .su_algebra import (
    BasisSet,
    StructureTensors,
    WeightSystem,
    algebra_tensors,
    darboux_frame,
    gell_mann_basis,
    structure_constants,
    vee_product,
    weight_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "ANGLE_CONVENTION",
    "BasisSet",
    "CasimirValues",
    "OrbitCoordinates",
    "OrbitSpectrum",
    "StateClassification",
    "StratumReport",
    "StructureTensors",
    "TraceInvariants",
    "WeightSystem",
    "algebra_tensors",
    "bezoutian",
    "bezoutian_rank",
    "bloch_scale",
    "cartan_moduli",
    "casimirs",
    "char_coefficients",
    "check_state_bloch",
    "check_state_traces",
    "darboux_frame",
    "darboux_point",
    "dim_from_bloch",
    "discriminant",
    "effective_radius",
    "eig_oracle",
    "from_bloch",
    "gell_mann_basis",
    "grad_matrix",
    "haar_unitary",
    "intersection_polyhedron",
    "jacobi_eigh",
    "newton_extend",
    "orbit_from_spectrum",
    "ordered_domain_check",
    "polyhedron_transition_radii",
    "quatrit_rank3_cos_theta",
    "quatrit_trace_from_angles",
    "qutrit_t3_bloch",
    "qutrit_t3_from_angles",
    "random_hermitian_unit_trace",
    "rank2_curve_radius",
    "rank_strata",
    "sample_states",
    "spectrum_from_orbit",
    "structure_constants",
    "to_bloch",
    "trace_invariants",
    "traces_from_casimirs",
    "trisectrix_residual",
    "uniform_simplex",
    "unit_vector",
    "vee_product",
    "weight_vectors",
]
