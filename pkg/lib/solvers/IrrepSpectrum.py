from typing import Dict, Iterable, Tuple

from lib.partitions import Partition
from lib.util.errors import InternalConsistencyError


class IrrepSpectrum:
    """The distinct eigenvalues of a Hamiltonian on one lambda-block."""

    def __init__(self, lam, eigenvalues: Iterable[int]):
        self.lam = Partition.coerce(lam)
        self.eigenvalues: Tuple[int, ...] = tuple(sorted(set(int(value) for value in eigenvalues)))

        if not self.eigenvalues:
            raise InternalConsistencyError(f'Empty block spectrum for {self.lam.parts}.')

    @property
    def max(self) -> int:
        return self.eigenvalues[-1]

    def to_dict(self) -> dict:
        return {'lambda': self.lam.to_list(), 'eigenvalues': list(self.eigenvalues)}

    def __eq__(self, other):
        if isinstance(other, IrrepSpectrum):
            return self.eigenvalues == other.eigenvalues

        if isinstance(other, (set, frozenset)):
            return set(self.eigenvalues) == other

        return NotImplemented

    def __repr__(self):
        return f'IrrepSpectrum({self.lam}: {set(self.eigenvalues)})'


class MaxResult:
    """A maximum eigenvalue together with the partitions that witness it."""

    def __init__(self, value: int, witness: Dict[str, Partition], **info):
        self.value = value
        self.witness = witness
        self.info = info

    def to_dict(self) -> dict:
        result = {'value': self.value, 'witness': {name: lam.to_list() for name, lam in self.witness.items()}}
        result.update(self.info)

        return result

    def __repr__(self):
        return f'MaxResult({self.value}, {self.witness})'
