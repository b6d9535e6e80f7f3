"""Two-level atom wave packets in a plane travelling wave.

Closed-form evolution of momentum families, per-level observables, an
independent RK4 oracle and a scenario-driven command line.
"""

from .errors import (
    AccuracyError,
    ConservationError,
    InvalidParameterError,
    InvalidStateError,
    RabiPacketsError,
    ScenarioError,
)
from .grid import MomentumGrid, build_grid, integrate
from .observables import (
    DistributionSnapshot,
    ObservableRecord,
    conservation_residuals,
    distribution,
    level_kinetic,
    level_momenta,
    normalized_kinetic,
    normalized_momenta,
    populations,
    record,
)
from .oracle import OdeSettings, compare_propagators, integrate_family
from .propagator import (
    DressedSpectrum,
    dressed_spectrum,
    evolve,
    family_matrix,
    generalized_detuning,
    generalized_rabi,
)
from .scenario import Scenario, list_presets, load_scenario, preset, run_scenario, verify_scenario
from .states import TwoLevelState, assemble_state, gaussian_amplitudes, normalize
from .units import PhysicalParams, RecoilScales, SimParams, recoil_scales, to_dimensionless

__version__ = "0.1.0"
