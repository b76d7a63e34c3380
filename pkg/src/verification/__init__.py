from .supergraph import (
    Lemma1Report,
    Supergraph,
    build_supergraph,
    check_lemma1,
    check_operator_equivalence,
    is_neighbor_pair,
)

__all__ = [
    "Lemma1Report",
    "Supergraph",
    "build_supergraph",
    "check_lemma1",
    "check_operator_equivalence",
    "is_neighbor_pair",
]
