"""Exact analysis of the universalized Prisoner's Dilemma and its risk variant."""
from .closed_form import ClosedFormResult, closed_form_upd, closed_form_updr, ev_quadratic, obligation_strength
from .dynamics import Trajectory, is_rest_point, random_interior, replicator_step, simulate
from .equilibria import (
    Certificate,
    EquilibriumFinding,
    Family,
    InternalFault,
    SupportReportRow,
    TwoSidedProfile,
    support_report,
    symmetric_equilibria,
    two_sided_equilibria,
    verify_equilibrium,
)
from .game import (
    MixedStrategy,
    PdParams,
    SymmetricGame,
    ValidationError,
    as_rational,
    expected_payoff,
    make_pd,
    pd_from_sentences,
    pure_payoffs_vs,
)
from .transforms import RiskLevel, add_risk, make_upd, universalize

__version__ = "0.1.0"
