import os

from typing import Sequence

from lib.oracle.GraphSpec import GraphSpec, graph_family, random_graph, write_graph
from lib.util.errors import ParameterError

FAMILIES = ('clique', 'star', 'bipartite', 'multipartite', 'path', 'cycle', 'random')


def build_graph(family: str, n: int = None, k: int = None, parts: Sequence[int] = None, weight: float = 1.0,
                seed: int = 0, density: float = 0.5) -> GraphSpec:
    if family not in FAMILIES:
        raise ParameterError(f'Invalid "family" argument "{family}", expected one of {FAMILIES}.')

    if family == 'random':
        if n is None or n < 1:
            raise ParameterError('Invalid "n" argument, a random graph needs a positive vertex count.')

        return random_graph(n, seed=seed, density=density)

    return graph_family(family, n, k=k, parts=parts, weight=weight)


def default_graph_path(family: str, g: GraphSpec, directory: str = os.path.join('data', 'graphs')) -> str:
    return os.path.join(directory, f'{family}-{g.n}.txt')


def generate_graph(family: str, path: str = None, **params) -> dict:
    g = build_graph(family, **params)
    path = path or default_graph_path(family, g)

    directory = os.path.dirname(path)

    if directory:
        os.makedirs(directory, exist_ok=True)

    write_graph(g, path)

    return {'path': path, 'n': g.n, 'edges': len(g.edges), 'total_weight': g.total_weight}
