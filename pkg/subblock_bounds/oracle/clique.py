"""
Exhaustive maximum-code search.

A code with minimum distance d is a clique in the graph joining words at
distance at least d. The search is a branch and bound over vertex bitsets,
pruned with greedy colouring bounds; vertices are taken in numeric word order
so that the witness code is reproducible.
"""

from typing import Optional, Union

import networkx as nx

from ..config import BoundsConfig, default_config
from ..logging import BoundsLogger
from ..metrics import BoundsFunctionName, BoundsMetrics, get_elapsed_ms, start_timer
from ..schemas import CodeFamily
from ..types.errors import DeskCapExceededError, InvalidParameterError
from .space import Word, enumerate_space


def compatibility_graph(words: list[Word], d: int) -> nx.Graph:
    """Vertices are word indices; edges join words at distance >= d."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(words)))
    for i, x in enumerate(words):
        for j in range(i + 1, len(words)):
            if x.distance(words[j]) >= d:
                graph.add_edge(i, j)
    return graph


class MaxCliqueSearch:
    """
    Colour-bounded branch and bound over a graph with integer vertices 0..n-1.

    A largest-first greedy colouring of the whole graph bounds the clique
    number from above; the search stops as soon as a clique of that size is
    found.
    """

    def __init__(self, graph: nx.Graph):
        self.n = graph.number_of_nodes()
        self.adjacency = [0] * self.n
        for i, j in graph.edges():
            self.adjacency[i] |= 1 << j
            self.adjacency[j] |= 1 << i
        colouring = nx.greedy_color(graph, strategy="largest_first")
        self.colour_bound = max(colouring.values(), default=-1) + 1
        self.best: list[int] = []
        self.nodes_expanded = 0

    def _colour_order(self, candidates: int) -> list[tuple[int, int]]:
        """Greedy colour classes; returns (vertex, colour) by increasing colour."""
        order = []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                low = available & -available
                v = low.bit_length() - 1
                available &= ~low & ~self.adjacency[v]
                uncoloured &= ~low
                order.append((v, colour))
        return order

    def _expand(self, clique: list[int], candidates: int) -> None:
        self.nodes_expanded += 1
        order = self._colour_order(candidates)
        for v, colour in reversed(order):
            if len(clique) + colour <= len(self.best):
                return
            if len(self.best) >= self.colour_bound:
                return
            grown = clique + [v]
            remaining = candidates & self.adjacency[v]
            if remaining:
                self._expand(grown, remaining)
            elif len(grown) > len(self.best):
                self.best = grown
            candidates &= ~(1 << v)

    def solve(self) -> list[int]:
        if self.n:
            self._expand([], (1 << self.n) - 1)
        return sorted(self.best)


def maximum_code(
    family: Union[CodeFamily, str],
    m: int,
    L: int,
    w: int,
    d: int,
    config: Optional[BoundsConfig] = None,
    logger: Optional[BoundsLogger] = None,
    metrics: Optional[BoundsMetrics] = None,
) -> list[Word]:
    """A largest code in the space with minimum distance at least d."""
    config = config or default_config
    if d < 1:
        raise InvalidParameterError(f"d must be >= 1, got {d}")
    words = enumerate_space(family, m, L, w, config)
    if d == 1:
        return words
    if len(words) > config.max_clique_vertices:
        raise DeskCapExceededError(
            "space size", len(words), config.max_clique_vertices
        )

    start = start_timer()
    search = MaxCliqueSearch(compatibility_graph(words, d))
    code = [words[i] for i in search.solve()]
    elapsed = get_elapsed_ms(start)
    if metrics is not None:
        metrics.update(BoundsFunctionName.CLIQUE, elapsed)
    if logger is not None:
        logger.debug(
            "Maximum code found",
            category="oracle",
            auxiliary={
                "space": len(words),
                "size": len(code),
                "nodes": search.nodes_expanded,
                "elapsed_ms": elapsed,
            },
        )
    return code


def exhaustive_code_size(
    family: Union[CodeFamily, str],
    m: int,
    L: int,
    w: int,
    d: int,
    config: Optional[BoundsConfig] = None,
    logger: Optional[BoundsLogger] = None,
    metrics: Optional[BoundsMetrics] = None,
) -> int:
    """A(mL, d; S) by exhaustive search."""
    return len(maximum_code(family, m, L, w, d, config, logger, metrics))
