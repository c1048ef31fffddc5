"""Zero-divisor graphs of finite posets, their reduced graphs and annihilator primes."""

from .analysis import analysis_document, analysis_schema
from .annihilators import (
    acc_chain_profile,
    ann_family,
    annihilator_primes,
    annihilator_primes_bruteforce,
    maximal_annihilators,
    prime_signature,
    verify_cardinality_bound,
)
from .generators import enumerate_posets_with_zero, named_example, random_poset
from .graphs import (
    INF,
    ZdGraph,
    ann_classes,
    classify_shape,
    clique_number,
    degree,
    diameter,
    distance,
    gamma,
    gamma_e,
    girth,
    neighborhood,
    reduce_graph,
    to_dot,
)
from .kernels import BACKEND
from .poset import (
    ElementSet,
    IdealSet,
    Poset,
    annihilator,
    build_poset,
    down_set,
    enumerate_ideals,
    format_poset,
    is_ideal,
    is_prime_ideal,
    lower_cone,
    minimal_elements,
    parse_poset,
    zero_divisors,
)
from .theorems import check_poset, sweep

__version__ = "0.1.0"
