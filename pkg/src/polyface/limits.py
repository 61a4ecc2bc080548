"""Size caps for lattices and GF(2) matrices.

Both caps can be overridden at once with the ``POLYFACE_SIZE_LIMIT``
environment variable.
"""
import os

from .errors import SizeLimit

DEFAULT_LATTICE_LIMIT = 200_000
DEFAULT_MATRIX_LIMIT = 20_000

ENV_VAR = "POLYFACE_SIZE_LIMIT"


def _override():
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


def lattice_limit() -> int:
    return _override() or DEFAULT_LATTICE_LIMIT


def matrix_limit() -> int:
    return _override() or DEFAULT_MATRIX_LIMIT


def check_lattice_size(n: int, what: str = "lattice") -> None:
    cap = lattice_limit()
    if n > cap:
        raise SizeLimit(f"{what} has {n} elements, cap is {cap} (set {ENV_VAR})")


def check_matrix_size(columns: int, what: str = "boundary matrix") -> None:
    cap = matrix_limit()
    if columns > cap:
        raise SizeLimit(f"{what} has {columns} columns, cap is {cap} (set {ENV_VAR})")
