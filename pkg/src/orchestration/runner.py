import sys
from pathlib import Path
from typing import List, Optional, Tuple

from ..benchmark.delay import ALGORITHMS, DelayReport, run_benchmark
from ..benchmark.generators import GraphRecipe, generate_graph
from ..enumeration.base import SolutionSink
from ..enumeration.irwd import IRwDEnumerator
from ..enumeration.oracle import enumerate_brute
from ..enumeration.rwd import RwDEnumerator
from ..graph.graph import Graph, VertexSet, parse_edge_list
from ..utils.config import Config
from ..utils.errors import ContractViolation, GraphValidationError, UnknownAlgorithmError
from ..utils.logging_config import bind_run_context, get_logger
from ..verification.supergraph import (
    Lemma1Report,
    build_supergraph,
    check_lemma1,
    check_operator_equivalence,
)


class EnumerationRunner:
    """Bind configuration to graph loading, enumeration, verification and benchmarking."""

    def __init__(self, config: Config):
        """
        Initialize runner.

        Args:
            config: Configuration object
        """
        self.config = config
        self.logger = get_logger(__name__)

    def _dictionary_cap(self, override: Optional[int]) -> int:
        cap = self.config.max_dict_entries if override is None else override
        if cap < 0:
            raise ContractViolation(f"dictionary cap must be >= 0 (0 = unlimited), got {cap}")
        return cap

    def load_graph(
        self,
        input_path: Optional[str] = None,
        recipe: Optional[str] = None,
        relabel: bool = False
    ) -> Tuple[Graph, str]:
        """
        Load a graph from an edge-list file ('-' for stdin) or a recipe.

        Args:
            input_path: Edge-list path or '-'
            recipe: Recipe text family:n[:p:seed]
            relabel: Remap sparse labels densely

        Returns:
            The graph and a label identifying it
        """
        if (input_path is None) == (recipe is None):
            raise GraphValidationError("exactly one of --input or --recipe is required")

        if recipe is not None:
            parsed = GraphRecipe.parse(recipe)
            graph = generate_graph(parsed)
            graph_id = parsed.label
        elif input_path == "-":
            graph = parse_edge_list(sys.stdin, relabel=relabel)
            graph_id = "stdin"
        else:
            path = Path(input_path)
            with open(path, "r", encoding="utf-8") as f:
                graph = parse_edge_list(f, relabel=relabel)
            graph_id = path.name

        bind_run_context(graph_id=graph_id)
        self.logger.info(
            "Graph loaded", graph_id=graph_id, n=graph.n, m=graph.m, max_degree=graph.max_degree
        )
        return graph, graph_id

    def enumerate(
        self,
        graph: Graph,
        k: int,
        algorithm: str,
        sink: SolutionSink,
        max_dict_entries: Optional[int] = None,
        traversal: Optional[str] = None,
        dictionary_backend: Optional[str] = None
    ) -> int:
        """
        Stream all connected induced k-subgraphs to ``sink``.

        Unset options fall back to the configuration.

        Returns:
            Number of solutions
        """
        if k < 1:
            raise ContractViolation(f"order k must be >= 1, got {k}")
        cap = self._dictionary_cap(max_dict_entries)
        if algorithm == "brute":
            return enumerate_brute(graph, k, sink, max_n=self.config.oracle_max_n)
        enumerators = {"irwd": IRwDEnumerator, "rwd": RwDEnumerator}
        if algorithm not in enumerators:
            raise UnknownAlgorithmError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")

        enumerator = enumerators[algorithm](
            graph,
            k,
            dictionary_backend=dictionary_backend or self.config.dictionary_backend,
            max_dict_entries=cap,
            traversal=traversal or self.config.traversal,
        )
        return enumerator.run(sink)

    def verify(
        self,
        graph: Graph,
        k: int,
        operator: str = "irwd",
        check_operator: bool = False
    ) -> Tuple[Lemma1Report, List[VertexSet]]:
        """
        Build the supergraph and check connectivity and the diameter bound.

        Args:
            graph: Connected host graph within the oracle cap
            k: Order (>= 2)
            operator: Neighbor operator of the supergraph
            check_operator: Also compare generated against definitional neighbors

        Returns:
            The report and the nodes whose generated neighbors disagree
        """
        if k < 2:
            raise ContractViolation(f"supergraph verification needs k >= 2, got {k}")
        if k > graph.n:
            raise ContractViolation(f"k={k} exceeds n={graph.n}")
        if len(graph.connected_components()) != 1:
            raise GraphValidationError("supergraph verification needs a connected host graph")

        supergraph = build_supergraph(graph, k, operator, max_n=self.config.oracle_max_n)
        report = check_lemma1(supergraph, graph.n, k)
        mismatches = check_operator_equivalence(graph, supergraph) if check_operator else []
        return report, mismatches

    def bench(
        self,
        graph: Graph,
        k: int,
        algorithm: str,
        graph_id: str,
        repeat: Optional[int] = None,
        max_dict_entries: Optional[int] = None
    ) -> List[DelayReport]:
        """
        Run the delay benchmark ``repeat`` times.

        Returns:
            One report per run
        """
        if k < 1:
            raise ContractViolation(f"order k must be >= 1, got {k}")
        repeat = self.config.bench_repeat if repeat is None else repeat
        if repeat < 1:
            raise ContractViolation(f"repeat must be >= 1, got {repeat}")
        cap = self._dictionary_cap(max_dict_entries)

        reports = []
        for run in range(repeat):
            reports.append(run_benchmark(
                graph,
                k,
                algorithm,
                graph_id=graph_id,
                run=run,
                dictionary_backend=self.config.dictionary_backend,
                max_dict_entries=cap,
                traversal=self.config.traversal,
                oracle_max_n=self.config.oracle_max_n,
            ))
        return reports
