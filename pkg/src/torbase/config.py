"""Resource budgets, configurable through the environment.

TORBASE_GRAVER_CAP      max completion candidates processed (default 10**6)
TORBASE_FAN_CAP         max cones visited during fan traversal (default 10**5)
TORBASE_TUPLE_TIMEOUT_MS  wall-clock budget for a single scan tuple (default 60000)
"""

import os
import time
from dataclasses import dataclass

GRAVER_CAP_DEFAULT = 10**6
FAN_CAP_DEFAULT = 10**5
TUPLE_TIMEOUT_MS_DEFAULT = 60000
GRAVER_DEGREE_CAP = 10**9


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


@dataclass
class Budget:
    """Caps checked inside the expensive loops (completion, fan BFS)."""

    graver_cap: int = GRAVER_CAP_DEFAULT
    fan_cap: int = FAN_CAP_DEFAULT
    degree_cap: int = GRAVER_DEGREE_CAP
    deadline: float | None = None  # time.monotonic() value, or None

    @classmethod
    def from_env(cls, **overrides):
        b = cls(
            graver_cap=_env_int("TORBASE_GRAVER_CAP", GRAVER_CAP_DEFAULT),
            fan_cap=_env_int("TORBASE_FAN_CAP", FAN_CAP_DEFAULT),
        )
        for key, val in overrides.items():
            setattr(b, key, val)
        return b

    @classmethod
    def with_timeout_ms(cls, ms=None):
        if ms is None:
            ms = _env_int("TORBASE_TUPLE_TIMEOUT_MS", TUPLE_TIMEOUT_MS_DEFAULT)
        b = cls.from_env()
        b.deadline = time.monotonic() + ms / 1000.0
        return b

    def check_deadline(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            from .errors import ResourceLimitError

            raise ResourceLimitError("deadline exceeded")


def default_budget():
    return Budget.from_env()
