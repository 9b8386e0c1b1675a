"""
Engine configuration read from the environment.
"""
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import InvalidInput
from .models import ENUMERATION_LIMIT

DEFAULT_MAX_POINTS = 4


@dataclass(frozen=True)
class EngineConfig:
    """Limits and worker counts for exhaustive sweeps"""
    max_points: int = DEFAULT_MAX_POINTS
    workers: int = 1

    def __post_init__(self):
        if not 1 <= self.max_points <= ENUMERATION_LIMIT:
            raise InvalidInput(f"max_points must lie in 1..{ENUMERATION_LIMIT}, got {self.max_points}")
        if self.workers < 1:
            raise InvalidInput(f"workers must be positive, got {self.workers}")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "EngineConfig":
        """Build config from SEPAX_MAX_POINTS and SEPAX_WORKERS"""
        environ = os.environ if environ is None else environ
        return cls(
            max_points=_int_setting(environ, "SEPAX_MAX_POINTS", DEFAULT_MAX_POINTS),
            workers=_int_setting(environ, "SEPAX_WORKERS", 1),
        )

    def check_points(self, n: int):
        """Reject sweeps above the configured cap"""
        if n > self.max_points:
            raise InvalidInput(
                f"{n} points exceeds the enumeration cap of {self.max_points}; "
                f"set SEPAX_MAX_POINTS={min(n, ENUMERATION_LIMIT)} to allow it"
            )


def _int_setting(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"{name} must be an integer, got '{raw}'") from None
