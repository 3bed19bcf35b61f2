import os

from .errors import InfeasibleSizeError

ENV_VAR = "CLIFIS_MAX_N"


def size_limit(default: int) -> int:
    """Return the size guard, overridden by ``CLIFIS_MAX_N`` when set."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def check_size(n: int, default: int, what: str) -> None:
    limit = size_limit(default)
    if n > limit:
        raise InfeasibleSizeError(
            f"{what}: N={n} exceeds the size guard {limit} (set {ENV_VAR} to override)"
        )
