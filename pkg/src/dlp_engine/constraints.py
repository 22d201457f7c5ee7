# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from pymodaq_utils.logger import set_logger, get_module_name

logger = set_logger(get_module_name(__file__))

ZERO = '__zero__'


class LevelConstraints:
    """Ordering constraints level(a) > level(b) and level(a) >= level(b) between hashable nodes

    The constraints have a solution in the natural numbers iff no strict constraint lies inside a strongly
    connected component of the constraint digraph. The solution returned is the least one, obtained by longest
    path layering.

    Parameters
    ----------
    nodes: iterable of hashable
    with_zero: bool
        if True, add the ZERO node standing for the constant 0 and constrain every node to be >= ZERO

    Examples
    --------
    >>> constraints = LevelConstraints(['p', 'q'])
    >>> constraints.greater('p', 'q')
    >>> constraints.solve()
    {'p': 1, 'q': 0}
    """

    def __init__(self, nodes: Iterable[Hashable] = (), with_zero: bool = False):
        self._index: Dict[Hashable, int] = {}
        self._nodes: List[Hashable] = []
        self._edges: List[Tuple[int, int, int]] = []
        self.with_zero = with_zero
        if with_zero:
            self.add_node(ZERO)
        for node in nodes:
            self.add_node(node)

    def add_node(self, node: Hashable) -> int:
        if node not in self._index:
            self._index[node] = len(self._nodes)
            self._nodes.append(node)
            if self.with_zero and node != ZERO:
                self.greater_equal(node, ZERO)
        return self._index[node]

    @property
    def nodes(self) -> List[Hashable]:
        return list(self._nodes)

    def greater(self, high: Hashable, low: Hashable):
        self._edges.append((self.add_node(high), self.add_node(low), 1))

    def greater_equal(self, high: Hashable, low: Hashable):
        self._edges.append((self.add_node(high), self.add_node(low), 0))

    def copy(self) -> 'LevelConstraints':
        other = LevelConstraints(with_zero=False)
        other.with_zero = self.with_zero
        other._index = dict(self._index)
        other._nodes = list(self._nodes)
        other._edges = list(self._edges)
        return other

    def is_feasible(self) -> bool:
        return self.solve() is not None

    def solve(self) -> Optional[Dict[Hashable, int]]:
        """Least levels satisfying every constraint, None if there is none"""
        n_nodes = len(self._nodes)
        if n_nodes == 0:
            return {}
        edges = np.array(self._edges, dtype=int).reshape((-1, 3))
        sources, targets, weights = edges[:, 0], edges[:, 1], edges[:, 2]
        if np.any((sources == targets) & (weights == 1)):
            return None
        graph = coo_matrix((np.ones(len(edges)), (sources, targets)), shape=(n_nodes, n_nodes))
        _, labels = connected_components(graph, directed=True, connection='strong')
        if np.any((labels[sources] == labels[targets]) & (weights == 1)):
            return None
        levels = np.zeros(n_nodes, dtype=int)
        for _ in range(n_nodes + 1):
            updated = levels.copy()
            np.maximum.at(updated, sources, levels[targets] + weights)
            if np.array_equal(updated, levels):
                break
            levels = updated
        if self.with_zero:
            levels = levels - levels[self._index[ZERO]]
        return {node: int(levels[ind]) for ind, node in enumerate(self._nodes) if node != ZERO}
