"""Rotational manifolds of spin-s systems and the magnetic-field brachistochrone."""

from .brachistochrone import (
    SweepRow,
    TransferProblem,
    TransferSolution,
    compatible_azimuth,
    evolution_speed,
    optimal_transfer,
    path_length,
    speed_from_variance,
    sweep_tilt,
    transfer_at_tilt,
    transfer_time,
)
from .errors import NoCompatibleFieldError, OffManifoldError, SpinGeometryError, UnreachableTargetError
from .evolution import (
    EvolutionSample,
    FieldSpec,
    evolve,
    evolved_angles,
    field_hamiltonian,
    global_phase,
    propagator,
    trace,
)
from .fubini import (
    MetricTensor2,
    TangentPair,
    distinct_manifold_count,
    fubini_study_distance,
    m0_overlap,
    manifold_radii,
    manifold_radius,
    metric_from_tangents,
    metric_tensor_closed,
    metric_tensor_numeric,
    state_derivatives,
)
from .halfint import HalfInt, projections
from .rotor import (
    exp_spin_generator,
    fidelity,
    relative_phase,
    rotate_eigenstate,
    rotation_operator,
    spectral_exponential,
)
from .spin import SpinOperatorTriple, basis_eigenstate, projection_operator, spin_operators, unit_vector

__version__ = "0.1.0"
