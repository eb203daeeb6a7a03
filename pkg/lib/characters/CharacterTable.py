import pandas as pd

from math import factorial
from typing import Dict, List, Tuple

from lib.characters.ConjugacyClass import ConjugacyClass
from lib.characters.murnaghan_nakayama import chi
from lib.partitions import Partition, partitions_of, dim_sn
from lib.util.errors import CapExceededError


class CharacterTable:
    """Full character table of S_n; immutable once built."""

    def __init__(self, n: int, cap: int = 12):
        if n > cap:
            raise CapExceededError('n', n, cap)

        self.n = n
        self.partitions: List[Partition] = partitions_of(n)
        self.classes: List[ConjugacyClass] = [ConjugacyClass(cycle_type) for cycle_type in self.partitions]
        self.values: Dict[Tuple[Partition, ConjugacyClass], int] = {
            (lam, cls): chi(lam, cls) for lam in self.partitions for cls in self.classes
        }

    def value(self, lam, cls) -> int:
        lam = Partition.coerce(lam)

        if not isinstance(cls, ConjugacyClass):
            cls = ConjugacyClass(cls)

        return self.values[(lam, cls)]

    def row(self, lam) -> List[int]:
        return [self.value(lam, cls) for cls in self.classes]

    def check_orthogonality(self) -> bool:
        order = factorial(self.n)

        for lam in self.partitions:
            if self.value(lam, ConjugacyClass([1] * self.n)) != dim_sn(lam):
                return False

            for mu in self.partitions:
                inner = sum(cls.size * self.value(lam, cls) * self.value(mu, cls) for cls in self.classes)

                if inner != (order if lam == mu else 0):
                    return False

        for cls in self.classes:
            for other in self.classes:
                inner = sum(self.value(lam, cls) * self.value(lam, other) for lam in self.partitions)

                if inner != (cls.centralizer_order if cls == other else 0):
                    return False

        return True

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([self.row(lam) for lam in self.partitions],
                            index=[str(lam) for lam in self.partitions],
                            columns=[str(cls.cycle_type) for cls in self.classes])


def character_table(n: int, cap: int = 12) -> CharacterTable:
    return CharacterTable(n, cap=cap)
