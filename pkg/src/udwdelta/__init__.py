"""Nonperturbative final states of two delta-switched Unruh-DeWitt detectors
in the (3+1)-dimensional Minkowski vacuum, and their entanglement and
mutual information."""

from .density import (
    SingleDetectorState,
    TwoQubitXState,
    assemble_xstate,
    assemble_xstate_coefficients,
    operator_sum_density,
    reduce_a,
    reduce_b,
)
from .errors import (
    AccuracyError,
    ConsistencyError,
    DomainError,
    OrderingError,
    PositivityError,
    RangeError,
    UDWError,
    ValidationError,
)
from .kernels import (
    DetectorParams,
    Geometry,
    KernelValues,
    compute_kernels,
    f_kernel,
    omega_kernel,
    theta_kernel,
)
from .measures import (
    CorrelationReport,
    concurrence_wootters_general,
    concurrence_xstate,
    correlation_report,
    entropy_joint,
    entropy_single,
    mutual_information,
)
from .pipeline import Evaluation, evaluate, kernels_for
from .scenario import Family, InitialState, Scenario, interference_phase, make_scenario, validate
from .specfun import dawson

__version__ = "0.1.0"
