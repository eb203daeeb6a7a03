import os
import re
import math
import numpy as np

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from lib.util.errors import GraphFormatError, ParameterError

Edge = Tuple[int, int, float]

VERTEX_COUNT_DIRECTIVE = re.compile(r'#\s*n\s*=\s*(\d+)')


class GraphSpec:
    """A weighted undirected graph on the vertices 1..n."""

    def __init__(self, n: int, edges: Sequence[Tuple] = ()):
        if n < 1:
            raise GraphFormatError(f'Invalid "n" argument passed to GraphSpec, a graph needs at least one vertex.')

        self.n = n
        self.edges: List[Edge] = []
        seen = set()

        for edge in edges:
            i, j = int(edge[0]), int(edge[1])
            w = float(edge[2]) if len(edge) > 2 else 1.0

            if i == j:
                raise GraphFormatError(f'Invalid edge ({i}, {j}), self loops are not allowed.')

            i, j = min(i, j), max(i, j)

            if i < 1 or j > n:
                raise GraphFormatError(f'Invalid edge ({i}, {j}), vertices must lie in 1..{n}.')

            if (i, j) in seen:
                raise GraphFormatError(f'Invalid edge ({i}, {j}), the edge appears twice.')

            if not math.isfinite(w):
                raise GraphFormatError(f'Invalid weight {w} on edge ({i}, {j}), weights must be finite.')

            seen.add((i, j))
            self.edges.append((i, j, w))

        self.edges.sort()

    @property
    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges)

    @property
    def total_abs_weight(self) -> float:
        return sum(abs(w) for _, _, w in self.edges)

    def weight_matrix(self) -> np.ndarray:
        weights = np.zeros((self.n, self.n))

        for i, j, w in self.edges:
            weights[i - 1, j - 1] = weights[j - 1, i - 1] = w

        return weights

    def is_connected(self) -> bool:
        components, _ = connected_components(csr_matrix(self.weight_matrix() != 0), directed=False)

        return components == 1

    def to_dict(self) -> dict:
        return {'n': self.n, 'edges': [[i, j, w] for i, j, w in self.edges]}

    def __eq__(self, other):
        if not isinstance(other, GraphSpec):
            return NotImplemented

        return self.n == other.n and self.edges == other.edges

    def __repr__(self):
        return f'GraphSpec(n={self.n}, edges={len(self.edges)})'


def read_graph(path: str, n: Optional[int] = None) -> GraphSpec:
    """
    Read `i j [w]` lines, 1-indexed. `#` starts a comment, and a `# n = 7` comment fixes the
    vertex count, which otherwise is the largest vertex mentioned.
    """
    if not os.path.isfile(path):
        raise GraphFormatError(f'Invalid "graph" argument, cannot read "{path}".')

    edges = []
    declared = None

    with open(path) as graph_file:
        for number, line in enumerate(graph_file, start=1):
            directive = VERTEX_COUNT_DIRECTIVE.match(line.strip())

            if directive:
                declared = int(directive.group(1))

            tokens = line.split('#', 1)[0].split()

            if not tokens:
                continue

            if len(tokens) not in (2, 3):
                raise GraphFormatError(f'{path}:{number}: expected "i j [w]", got "{line.strip()}".')

            try:
                edges.append((int(tokens[0]), int(tokens[1]), float(tokens[2]) if len(tokens) == 3 else 1.0))
            except ValueError:
                raise GraphFormatError(f'{path}:{number}: expected "i j [w]", got "{line.strip()}".')

    n = n or declared or max((max(i, j) for i, j, _ in edges), default=1)

    return GraphSpec(n, edges)


def write_graph(g: GraphSpec, path: str):
    with open(path, 'w') as graph_file:
        graph_file.write(f'# n = {g.n}\n')

        for i, j, w in g.edges:
            graph_file.write(f'{i} {j} {w!r}\n')


def graph_family(name: str, n: int = None, k: int = None, parts: Sequence[int] = None, weight: float = 1.0) -> GraphSpec:
    """Clique, star, bipartite, multipartite, path and cycle graphs with uniform weight."""
    if name == 'multipartite':
        if not parts:
            raise ParameterError('Invalid "parts" argument passed to graph_family, multipartite needs part sizes.')

        n = sum(parts)
        labels = [index for index, size in enumerate(parts) for _ in range(size)]
        edges = [(i, j, weight) for i, j in combinations(range(1, n + 1), 2) if labels[i - 1] != labels[j - 1]]

        return GraphSpec(n, edges)

    if n is None or n < 1:
        raise ParameterError(f'Invalid "n" argument passed to graph_family, "{name}" needs a positive vertex count.')

    if name == 'clique':
        edges = [(i, j, weight) for i, j in combinations(range(1, n + 1), 2)]
    elif name == 'star':
        edges = [(1, j, weight) for j in range(2, n + 1)]
    elif name == 'bipartite':
        if k is None or not 1 <= k < n:
            raise ParameterError(f'Invalid "k" argument passed to graph_family, need 1 <= k < {n}.')

        return graph_family('multipartite', parts=[n - k, k], weight=weight)
    elif name == 'path':
        edges = [(i, i + 1, weight) for i in range(1, n)]
    elif name == 'cycle':
        edges = [(i, i + 1, weight) for i in range(1, n)] + ([(1, n, weight)] if n > 2 else [])
    else:
        raise ParameterError(f'Invalid "name" argument passed to graph_family, unknown family "{name}".')

    return GraphSpec(n, edges)


def random_graph(n: int, seed: int = 0, density: float = 0.5) -> GraphSpec:
    """Each pair is an edge with probability density, with a weight drawn from (0, 1]."""
    if not 0 < density <= 1:
        raise ParameterError(f'Invalid "density" argument passed to random_graph, {density} is not in (0, 1].')

    rng = np.random.default_rng(seed)
    edges = []

    for i, j in combinations(range(1, n + 1), 2):
        if rng.random() < density:
            edges.append((i, j, float(1.0 - rng.random())))

    return GraphSpec(n, edges)
