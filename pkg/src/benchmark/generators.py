"""
Deterministic graph recipes.

``gnp`` draws one uniform double per vertex pair (i < j, row-major order)
from NumPy's PCG64 bit generator seeded through ``SeedSequence(seed)``, and
keeps the edge when the draw is below p. The same (n, p, seed) therefore
yields the same edge set on every platform NumPy supports.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Tuple

import numpy as np

from ..graph.graph import Graph
from ..utils.errors import RecipeError

FAMILIES = ("path", "cycle", "complete", "star", "gnp")
_MIN_ORDER = {"path": 1, "cycle": 3, "complete": 1, "star": 1, "gnp": 1}
_SEED_LIMIT = 2 ** 64


@dataclass(frozen=True)
class GraphRecipe:
    """
    Reproducible description of a generated graph.

    ``n`` is the total vertex count (for ``star``: the center plus n-1
    leaves). ``p`` and ``seed`` only matter for ``gnp``.
    """

    family: str
    n: int
    p: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RecipeError(f"unknown graph family {self.family!r}; expected one of {FAMILIES}")
        if self.n < _MIN_ORDER[self.family]:
            raise RecipeError(f"{self.family} needs n >= {_MIN_ORDER[self.family]}, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise RecipeError(f"edge probability must be in [0, 1], got {self.p}")
        if not 0 <= self.seed < _SEED_LIMIT:
            raise RecipeError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @classmethod
    def parse(cls, text: str) -> "GraphRecipe":
        """
        Parse ``family:n[:p[:seed]]``, e.g. ``path:10`` or ``gnp:8:0.4:7``.

        Raises:
            RecipeError: On malformed text or invalid parameters
        """
        parts = text.strip().split(":")
        if not 2 <= len(parts) <= 4:
            raise RecipeError(f"expected family:n[:p:seed], got {text!r}")
        family = parts[0].lower()
        try:
            n = int(parts[1])
            p = float(parts[2]) if len(parts) > 2 else 0.0
            seed = int(parts[3]) if len(parts) > 3 else 0
        except ValueError:
            raise RecipeError(f"non-numeric recipe parameter in {text!r}")
        if family != "gnp" and len(parts) > 2:
            raise RecipeError(f"{family} takes no p/seed parameters: {text!r}")
        if family == "gnp" and len(parts) < 3:
            raise RecipeError(f"gnp needs an edge probability: {text!r}")
        return cls(family, n, p, seed)

    @property
    def label(self) -> str:
        if self.family == "gnp":
            return f"gnp:{self.n}:{self.p:g}:{self.seed}"
        return f"{self.family}:{self.n}"


def _family_edges(recipe: GraphRecipe) -> Iterable[Tuple[int, int]]:
    n = recipe.n
    if recipe.family == "path":
        return ((i, i + 1) for i in range(n - 1))
    if recipe.family == "cycle":
        return ((i, (i + 1) % n) for i in range(n))
    if recipe.family == "complete":
        return combinations(range(n), 2)
    if recipe.family == "star":
        return ((0, leaf) for leaf in range(1, n))

    rng = np.random.Generator(np.random.PCG64(recipe.seed))
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < recipe.p
    return zip(rows[keep].tolist(), cols[keep].tolist())


def generate_graph(recipe: GraphRecipe) -> Graph:
    """Build the graph a recipe describes."""
    return Graph.from_edges(recipe.n, _family_edges(recipe))
