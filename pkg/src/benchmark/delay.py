"""
Delay measurement: time gaps between consecutive solution emissions.

Gaps are taken at the sink boundary with a monotonic clock. The first gap
runs from enumeration start to the first emission and the last from the
final emission to the end of enumeration, so dictionary work done after
an emission lands in the following gap.
"""

import time
from dataclasses import asdict, dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np
import pandas as pd

from ..enumeration.bounds import delay_bound
from ..enumeration.irwd import IRwDEnumerator
from ..enumeration.oracle import DEFAULT_ORACLE_MAX_N, enumerate_brute
from ..enumeration.rwd import RwDEnumerator
from ..enumeration.state import EnumerationStats
from ..graph.graph import Graph, VertexSet
from ..utils.errors import UnknownAlgorithmError
from ..utils.logging_config import get_logger

ALGORITHMS = ("irwd", "rwd", "brute")
_ENUMERATORS = {"irwd": IRwDEnumerator, "rwd": RwDEnumerator}

logger = get_logger(__name__)


@dataclass(frozen=True)
class DelayReport:
    """One benchmark run; durations are in seconds."""

    algorithm: str
    graph_id: str
    n: int
    m: int
    k: int
    delta: int
    run: int
    total_solutions: int
    total_time: float
    max_delay: float
    p50_delay: float
    p99_delay: float
    dict_lookups: int
    articulation_time: float
    common_neighborhood_time: float
    expansions: int
    peak_dictionary: int
    delay_bound: Optional[float]

    def to_key_value(self) -> str:
        return "".join(
            f"{key}={'' if value is None else value}\n" for key, value in asdict(self).items()
        )


class DelayRecorder:
    """Solution sink that records the gap before every emission."""

    def __init__(self, clock: Callable[[], int] = time.perf_counter_ns):
        self._clock = clock
        self._start = 0
        self._last = 0
        self.gaps: List[int] = []
        self.count = 0
        self.total = 0

    def start(self) -> None:
        self._start = self._last = self._clock()

    def __call__(self, solution: VertexSet) -> None:
        now = self._clock()
        self.gaps.append(now - self._last)
        self._last = now
        self.count += 1

    def finish(self) -> None:
        now = self._clock()
        self.gaps.append(now - self._last)
        self.total = now - self._start


def run_benchmark(
    g: Graph,
    k: int,
    algorithm: str,
    graph_id: str = "graph",
    run: int = 0,
    dictionary_backend: str = "hash",
    max_dict_entries: int = 0,
    traversal: str = "bfs",
    oracle_max_n: int = DEFAULT_ORACLE_MAX_N
) -> DelayReport:
    """
    Enumerate once and measure per-solution delays and phase costs.

    Args:
        g: Host graph
        k: Order
        algorithm: 'irwd', 'rwd' or 'brute'
        graph_id: Label recorded in the report
        run: Repetition index recorded in the report
        dictionary_backend: 'hash' or 'ordered'
        max_dict_entries: Dictionary cap, 0 for unlimited
        traversal: 'bfs' or 'dfs'
        oracle_max_n: Size cap for the brute-force enumerator

    Returns:
        DelayReport for the run

    Raises:
        UnknownAlgorithmError: If the algorithm name is not recognised
    """
    if algorithm not in ALGORITHMS:
        raise UnknownAlgorithmError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")

    stats = EnumerationStats()
    recorder = DelayRecorder()

    if algorithm == "brute":
        recorder.start()
        total = enumerate_brute(g, k, recorder, max_n=oracle_max_n)
        recorder.finish()
    else:
        enumerator = _ENUMERATORS[algorithm](
            g,
            k,
            dictionary_backend=dictionary_backend,
            max_dict_entries=max_dict_entries,
            traversal=traversal,
            stats=stats,
        )
        # enumerator setup stays outside the timed span
        recorder.start()
        total = enumerator.run(recorder)
        recorder.finish()

    # gaps are never empty: finish() always appends the trailing one
    gaps = np.asarray(recorder.gaps, dtype=np.float64) / 1e9
    p50, p99 = np.percentile(gaps, [50, 99])
    report = DelayReport(
        algorithm=algorithm,
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        k=k,
        delta=g.max_degree,
        run=run,
        total_solutions=total,
        total_time=recorder.total / 1e9,
        max_delay=float(gaps.max()),
        p50_delay=float(p50),
        p99_delay=float(p99),
        dict_lookups=stats.dict_lookups,
        articulation_time=stats.articulation_time,
        common_neighborhood_time=stats.common_neighborhood_time,
        expansions=stats.expansions,
        peak_dictionary=stats.peak_dictionary,
        delay_bound=delay_bound(algorithm, g.n, k, g.max_degree) if algorithm != "brute" else None,
    )
    logger.info(
        "Benchmark run completed",
        algorithm=algorithm,
        graph_id=graph_id,
        k=k,
        run=run,
        solutions=total,
        total_time=report.total_time,
        max_delay=report.max_delay,
    )
    return report


def reports_to_frame(reports: Sequence[DelayReport]) -> pd.DataFrame:
    columns = list(DelayReport.__dataclass_fields__)
    return pd.DataFrame([asdict(r) for r in reports], columns=columns)


def reports_to_csv(reports: Sequence[DelayReport]) -> str:
    """CSV with a header row and one row per run (minimal RFC 4180 quoting)."""
    return reports_to_frame(reports).to_csv(index=False, lineterminator="\n")
