from .delay import ALGORITHMS, DelayRecorder, DelayReport, reports_to_csv, reports_to_frame, run_benchmark
from .generators import FAMILIES, GraphRecipe, generate_graph

__all__ = [
    "ALGORITHMS",
    "FAMILIES",
    "DelayRecorder",
    "DelayReport",
    "GraphRecipe",
    "generate_graph",
    "reports_to_csv",
    "reports_to_frame",
    "run_benchmark",
]
