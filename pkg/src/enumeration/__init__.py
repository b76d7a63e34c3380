from .base import ReverseSearchEnumerator, SolutionSink, initial_solution
from .bounds import (
    count_upper_bound,
    delay_bound,
    exact_small_degree_count,
    neighborhood_size_bound,
    solution_count_bound,
)
from .dictionary import OrderedSolutionDictionary, SolutionDictionary, create_dictionary
from .irwd import IRwDEnumerator, enumerate_irwd, neighbors_in_supergraph
from .oracle import enumerate_brute, iter_connected_subsets, oracle_bruteforce
from .rwd import RwDEnumerator, enumerate_rwd
from .state import EnumerationState, EnumerationStats

__all__ = [
    "EnumerationState",
    "EnumerationStats",
    "IRwDEnumerator",
    "OrderedSolutionDictionary",
    "ReverseSearchEnumerator",
    "RwDEnumerator",
    "SolutionDictionary",
    "SolutionSink",
    "count_upper_bound",
    "create_dictionary",
    "delay_bound",
    "enumerate_brute",
    "enumerate_irwd",
    "enumerate_rwd",
    "exact_small_degree_count",
    "initial_solution",
    "iter_connected_subsets",
    "neighborhood_size_bound",
    "neighbors_in_supergraph",
    "oracle_bruteforce",
    "solution_count_bound",
]
