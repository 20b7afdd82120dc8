"""Symbolic computation for braid groups and link-homotopy string-link
groups over closed orientable surfaces: words, presentations,
homomorphisms, decision procedures, and randomized exactness suites.
"""

from .words import (
    Family,
    GroupContext,
    Kind,
    Letter,
    MissingImageError,
    ParseError,
    Word,
    WordError,
    admissible_letters,
    big_t,
    cap_a,
    commutator,
    concat,
    cyclic_reduce,
    expand_abbreviations,
    format_word,
    free_reduce,
    free_x,
    generator_alphabet,
    invert,
    parse_word,
    recontext,
    sigma,
    small_t,
    substitute,
    surf_a,
)
from .presentations import (
    LHSampler,
    Presentation,
    RelatorFamily,
    RelatorInstance,
    build_presentation,
    enumerate_relators,
    expand_big_t,
    expand_cap_a,
    expand_small_t,
)
from .pi1 import (
    SurfaceRelator,
    Verdict,
    dehn_reduce,
    is_trivial_pi1,
    tuple_is_trivial,
)
from .homs import (
    GeneratorMap,
    PermutationImage,
    PermutationMap,
    Pi1Tuple,
    Report,
    ThetaMap,
    corrupted_psi_map,
    corrupted_theta_map,
    inclusion_f,
    inclusion_f_hat,
    letterwise_map,
    permutation_of,
    projection_p,
    projection_p1,
    projection_p2,
    psi_map,
    theta_hat,
    theta_map,
    theta_preimage,
    verify_well_defined,
)
from .reduced_free import (
    MultilinearSeries,
    ReducedEndo,
    artin_act,
    artin_series,
    lh_trivial_disk,
    magnus_expand,
    rf_is_trivial,
    sample_hn_element,
)
from .lab import (
    CheckResult,
    SuiteConfig,
    SuiteReport,
    check_diagram_commutes,
    check_hn_sequence,
    check_im_in_ker,
    check_surjectivity,
    check_well_defined,
    random_pi1_tuple,
    random_reduced_word,
    run_all,
)

__version__ = "0.1.0"
