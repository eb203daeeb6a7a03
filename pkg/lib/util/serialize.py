import json
import numpy as np

from fractions import Fraction

from lib.partitions import Partition

SCHEMA = 'qmc/1'


def to_jsonable(value):
    """Exact integers stay integers, Fractions become "p/q" and floats decimal strings."""
    if isinstance(value, (bool, np.bool_)) or value is None or isinstance(value, str):
        return bool(value) if isinstance(value, np.bool_) else value

    if isinstance(value, (int, np.integer)):
        return int(value)

    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f'{value.numerator}/{value.denominator}'

    if isinstance(value, (float, np.floating)):
        return repr(float(value))

    if isinstance(value, Partition):
        return value.to_list()

    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}

    if isinstance(value, (list, tuple, set, frozenset, np.ndarray)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else list(value)

        return [to_jsonable(item) for item in items]

    raise TypeError(f'Cannot serialize {type(value).__name__} value {value!r}.')


def result_document(command: str, inputs: dict, result, runtime_ms: float) -> dict:
    return {
        'schema': SCHEMA,
        'command': command,
        'inputs': to_jsonable(inputs),
        'result': to_jsonable(result),
        'runtime_ms': int(round(runtime_ms)),
    }


def dumps(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2)
