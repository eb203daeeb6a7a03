from fractions import Fraction
from typing import List

from lib.partitions import balanced, is_subpartition
from lib.util.errors import ParameterError


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class BipartiteParams:
    """
    Height parameters of K_{n-k,k} in dimension d, for 2k <= n and d < n.

    e0 is the largest height e with floor((n-k)/e) >= ceil(k/(d-e)), e1 the smallest with
    floor(k/(d-e)) >= ceil((n-k)/e) (d - 1 when there is none), e_star_real is the real
    maximizer d/2 + (n-2k)/(2(q+1)) and frak_E the heights e for which the balanced partition
    of n-k with e rows is a subpartition of the balanced partition of n with d rows.
    """

    def __init__(self, n: int, k: int, d: int):
        if k < 1 or 2 * k > n:
            raise ParameterError(f'Invalid "k" argument passed to bipartite_params, need 1 <= k <= n/2 (got k={k}, n={n}).')

        if not 2 <= d < n:
            raise ParameterError(f'Invalid "d" argument passed to bipartite_params, need 2 <= d < n (got d={d}, n={n}).')

        self.n, self.k, self.d = n, k, d
        self.q, self.r = divmod(n, d)
        heights = range(1, d)

        self.e0 = max(e for e in heights if (n - k) // e >= _ceil_div(k, d - e))

        upper = [e for e in heights if k // (d - e) >= _ceil_div(n - k, e)]
        self.e1 = min(upper) if upper else d - 1

        self.e_star_real = Fraction(d, 2) + Fraction(n - 2 * k, 2 * (self.q + 1))

        whole = balanced(n, d)
        self.frak_E: List[int] = [e for e in heights if e <= n - k and is_subpartition(balanced(n - k, e), whole)]

        self.balancing = any(k == s * (self.q + 1) + t * self.q
                             for s in range(self.r + 1)
                             for t in range(d - self.r + 1))

    def closest_feasible(self) -> List[int]:
        """Members of frak_E closest to e_star_real, both of them on a tie."""
        if not self.frak_E:
            return []

        distance = min(abs(e - self.e_star_real) for e in self.frak_E)

        return [e for e in self.frak_E if abs(e - self.e_star_real) == distance]

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'd': self.d,
            'e0': self.e0,
            'e1': self.e1,
            'e_star': f'{self.e_star_real.numerator}/{self.e_star_real.denominator}',
            'frak_E': list(self.frak_E),
            'balancing': self.balancing,
        }

    def __repr__(self):
        return f'BipartiteParams({self.to_dict()})'


def bipartite_params(n: int, k: int, d: int) -> BipartiteParams:
    return BipartiteParams(n, k, d)
