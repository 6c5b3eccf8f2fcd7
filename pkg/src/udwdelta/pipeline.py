"""Scenario -> kernels -> density matrix -> correlation measures."""

from dataclasses import dataclass

from .density import TwoQubitXState, assemble_xstate
from .kernels import KernelValues, compute_kernels
from .measures import CorrelationReport, correlation_report
from .scenario import Scenario, validate


@dataclass(frozen=True)
class Evaluation:
    scenario: Scenario
    kernels: KernelValues
    state: TwoQubitXState
    report: CorrelationReport


def kernels_for(s):
    return compute_kernels(s.detector_a, s.detector_b, s.geometry)


def evaluate(s):
    """Run the whole closed-form pipeline for one validated scenario."""
    validate(s)
    k = kernels_for(s)
    x = assemble_xstate(s, k)
    return Evaluation(s, k, x, correlation_report(x, s.initial.family))
