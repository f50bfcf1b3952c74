"""Detection and elicitation of harmful random utility models.

A harmful RUM is a stochastic choice generated by a preference together with
random "harmful distortions" of it, in which the top ``i`` items are moved to
the bottom in reverse order.
"""

from .data import (
    StochasticChoice,
    format_probability,
    is_regular,
    load,
    loads_csv,
    parse_probability,
    support_set,
    validate,
)
from .degree import (
    DegreeReport,
    degree_by_definition,
    degree_of_self_punishment,
    has_jth_ordered_composition,
)
from .detection import (
    CompositionWitness,
    brute_force_composing_orders,
    composes,
    composing_orders,
    composition_witness,
    is_harmful,
)
from .estimator import HarmfulRUM
from .exceptions import (
    DataError,
    ForeignItem,
    HarmfulRUMError,
    IdentificationMismatch,
    MissingMenu,
    NegativeProbability,
    NotHarmful,
    RowSumViolation,
    SizeGuardExceeded,
)
from .forward import (
    GeneralLottery,
    HarmfulWeights,
    as_lottery,
    choice_prob_cases,
    choice_prob_closed,
    choice_prob_direct,
    lemma_case,
    simulate,
    simulate_rum,
)
from .identification import (
    IdentificationClass,
    Justification,
    all_justifications,
    classify,
    weights_from_data,
)
from .orders import (
    GroundSet,
    LinearOrder,
    enumerate_orders,
    harm,
    harmful_distortion,
    is_single_peaked,
    star_order,
    undistort,
)
from .probes import (
    CorrelationIndex,
    RumFeasibility,
    correlation_bound,
    correlation_index,
    is_rum,
    single_peaked_support,
)

__version__ = "0.1.0"
