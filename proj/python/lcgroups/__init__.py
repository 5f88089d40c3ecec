"""Finite-group computation engine for lcm-closure invariants.

The heavy lifting lives in the compiled extension ``lcgroups._core``; this
package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    Caps,
    CapExceededError,
    Cp2Verdict,
    EngineError,
    Epimorphism,
    Group,
    InvalidArgumentError,
    InvariantViolationError,
    LatticeCapExceededError,
    LcBoundCheck,
    LcSeries,
    NlcmReport,
    ParseError,
    Perm,
    Subgroup,
    __version__,
    all_subgroups,
    build_group,
    campaign_description,
    campaign_ids,
    center,
    corpus_names,
    derived_subgroup,
    enumerate_group,
    fitting_subgroup,
    is_cp2,
    is_lcm_group,
    is_nilpotent,
    is_solvable,
    is_supersolvable,
    lc_class_bound_check,
    lc_series,
    lc_subgroup,
    lcm_set,
    lcm_set_fast,
    nilpotency_class,
    nlcm_check,
    normal_subgroups,
    quotient,
    run_all_campaigns,
    run_campaign,
    run_cli,
    subgroup_generated,
    sylow_subgroup,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
