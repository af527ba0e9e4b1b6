"""Non-generators and Frattini elements of finite posets with a maximum."""

from .closure import (
    ClosureContext,
    MooreFamily,
    check_closure_reduction,
    is_p_nongenerator,
    moore_to_context,
    p_generates,
    smallest_closed_above,
)
from .errors import PosetError
from .frattini import (
    check_coatom_characterization,
    check_finite_collapse,
    check_frattini_laws,
    frattini_analysis,
    frattini_element,
    is_1_compact,
    is_very_weakly_1_compact,
    is_weakly_1_compact,
    nongenerator_join,
)
from .nongen import (
    LawReport,
    by_chains,
    by_coatoms,
    by_nonextendable_chains,
    check_characterizations,
    check_ideal_laws,
    is_nongenerator,
    nongenerators,
    verdict,
    zorn_gadget,
)
from .poset import (
    Chain,
    Poset,
    build_poset,
    chain_unbounded_lt1,
    enumerate_chains,
    gen_is_top,
    join_is_top,
    maximal_below_top,
    partial_join,
    partial_meet,
)

__version__ = "0.1.0"
