import logging
import os
from dataclasses import dataclass, replace

from dotenv import load_dotenv

load_dotenv()

UNSAFE_SIGMA_GUARD = 32
UNSAFE_BRUTE_GUARD = 2 ** 34


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip())
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw.strip())
    except ValueError:
        raise ValueError(f"{name} must be a number, got {raw!r}")


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


@dataclass(frozen=True)
class Settings:
    trajectory_cap: int = 2 ** 20
    max_subsequences: int = 10000
    brute_guard: int = 2 ** 28
    brute_cross_check: int = 2 ** 20
    sigma_guard: int = 24
    tau_guard: int = 23
    threads: int = 1
    limit_tolerance: float = 1e-6
    log_level: str = "WARNING"
    progress: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            trajectory_cap=_env_int("COLLATZ_TRAJECTORY_CAP", cls.trajectory_cap),
            max_subsequences=_env_int("COLLATZ_MAX_SUBSEQUENCES", cls.max_subsequences),
            brute_guard=_env_int("COLLATZ_BRUTE_GUARD", cls.brute_guard),
            brute_cross_check=_env_int("COLLATZ_BRUTE_CROSS_CHECK", cls.brute_cross_check),
            sigma_guard=_env_int("COLLATZ_SIGMA_GUARD", cls.sigma_guard),
            tau_guard=_env_int("COLLATZ_TAU_GUARD", cls.tau_guard),
            threads=max(1, _env_int("COLLATZ_THREADS", cls.threads)),
            limit_tolerance=_env_float("COLLATZ_LIMIT_TOLERANCE", cls.limit_tolerance),
            log_level=(os.getenv("COLLATZ_LOG_LEVEL") or cls.log_level).upper(),
            progress=_env_bool("COLLATZ_PROGRESS", cls.progress),
        )

    def with_overrides(self, **changes) -> "Settings":
        changes = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **changes)

    def unsafe(self) -> "Settings":
        return replace(
            self,
            sigma_guard=max(self.sigma_guard, UNSAFE_SIGMA_GUARD),
            tau_guard=max(self.tau_guard, UNSAFE_SIGMA_GUARD),
            brute_guard=max(self.brute_guard, UNSAFE_BRUTE_GUARD),
        )


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
