import re
import numpy as np

from typing import List, Union

from lib.npo.MomentPencil import MomentPencil
from lib.npo.MomentSDP import MomentSDP
from lib.util.errors import SdpaFormatError

# entries below this are written as structural zeros
ZERO_TOL = 1e-14


class SdpaProblem:
    """
    An SDPA sparse problem: minimize c . x subject to sum_i x_i F_i - F_0 >> 0, single block.
    constant is carried in the leading comment so the original maximum is constant - min.
    """

    def __init__(self, c: np.ndarray, matrices: List[np.ndarray], block_size: int, constant: float = 0.0):
        self.c = np.asarray(c, dtype=float)
        self.matrices = matrices
        self.block_size = block_size
        self.constant = constant

    @property
    def m(self) -> int:
        return len(self.c)

    def to_maximization(self) -> MomentPencil:
        """Back to the moment pencil form: maximize constant - c . x with M(x) = -F_0 + sum x_i F_i."""
        size = self.block_size
        directions = np.column_stack([f.reshape(-1, order='F') for f in self.matrices[1:]]) if self.m else \
            np.zeros((size * size, 0))

        return MomentPencil(-self.matrices[0], directions, self.constant, -self.c)


def _format(value: float) -> str:
    return repr(float(value))


def emit_sdpa(sdp: Union[MomentSDP, MomentPencil], path: str):
    """
    Write the reduced relaxation in SDPA sparse format (.dat-s). The maximization of
    g0 + g . y over M0 + sum y_j M_j >> 0 becomes minimize -g . y with F_0 = -M0 and F_j = M_j.
    """
    pencil = sdp.reduce() if isinstance(sdp, MomentSDP) else sdp
    size = pencil.size

    lines = [
        f'" moment relaxation, objective constant {_format(pencil.objective_offset)}',
        f'{pencil.dim}',
        '1',
        f'{size}',
        ' '.join(_format(-value) for value in pencil.objective),
    ]

    matrices = [-pencil.offset] + [pencil.directions[:, j].reshape(size, size, order='F') for j in range(pencil.dim)]

    for matno, matrix in enumerate(matrices):
        for i in range(size):
            for j in range(i, size):
                if abs(matrix[i, j]) > ZERO_TOL:
                    lines.append(f'{matno} 1 {i + 1} {j + 1} {_format(matrix[i, j])}')

    with open(path, 'w') as handle:
        handle.write('\n'.join(lines) + '\n')


def read_sdpa(path: str) -> SdpaProblem:
    with open(path, 'r') as handle:
        raw = handle.read().splitlines()

    constant = 0.0
    lines = []

    for line in raw:
        if line.startswith(('"', '*')):
            match = re.search(r'objective constant (\S+)', line)

            if match:
                constant = float(match.group(1))

            continue

        lines.append(re.sub(r'[,{}()]', ' ', line).strip())

    if len(lines) < 4:
        raise SdpaFormatError(f'Invalid "path" argument passed to read_sdpa, {path} has no complete SDPA header.')

    try:
        m = int(lines[0].split()[0])
        blocks = int(lines[1].split()[0])
        sizes = [abs(int(token)) for token in lines[2].split()]
        c = np.array([float(token) for token in lines[3].split()])
    except (IndexError, ValueError) as error:
        raise SdpaFormatError(f'Invalid SDPA header in {path}: {error}')

    if blocks != 1 or len(sizes) != 1 or len(c) != m:
        raise SdpaFormatError(f'Invalid SDPA header in {path}: expected one block and {m} objective entries.')

    size = sizes[0]
    matrices = [np.zeros((size, size)) for _ in range(m + 1)]

    for number, line in enumerate(lines[4:], start=5):
        if not line:
            continue

        tokens = line.split()

        if len(tokens) != 5:
            raise SdpaFormatError(f'Invalid SDPA entry on line {number} of {path}: "{line}".')

        matno, _, i, j = (int(token) for token in tokens[:4])
        value = float(tokens[4])
        matrices[matno][i - 1, j - 1] = value
        matrices[matno][j - 1, i - 1] = value

    return SdpaProblem(c, matrices, size, constant)
