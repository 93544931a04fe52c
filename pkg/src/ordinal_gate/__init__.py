"""Monte Carlo Likert scores checked against the axioms of dense linear order."""

from .axioms import AxiomId, AxiomMatrix, AxiomVerdict, FiniteRelation, check_all, check_numeric, check_relation
from .simulate import DEFAULT_THEMES, SampleSet, SimulationConfig, ThemeSpec, run_simulation

__all__ = [
    "AxiomId",
    "AxiomMatrix",
    "AxiomVerdict",
    "FiniteRelation",
    "DEFAULT_THEMES",
    "SampleSet",
    "SimulationConfig",
    "ThemeSpec",
    "check_all",
    "check_numeric",
    "check_relation",
    "run_simulation",
]
