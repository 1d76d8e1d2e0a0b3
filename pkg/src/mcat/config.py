from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _env(name: str, default: Optional[str] = None) -> Optional[str]:
    v = os.getenv(name, default)
    if v is None:
        return None
    v = v.strip()
    return v or default


def _env_int(name: str, default: int) -> int:
    v = os.getenv(name)
    if v is None or not v.strip():
        return default
    try:
        return int(v)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {v!r}") from e


def _env_bool(name: str, default: bool = False) -> bool:
    v = os.getenv(name)
    if v is None:
        return bool(default)
    return v.strip().lower() in ("1", "true", "yes", "y", "on")


@dataclass(frozen=True)
class KernelConfig:
    # Construction bounds
    dim_bound: int
    directions: int
    chiral_degree: int
    word_length: int
    nest_depth: int
    max_cells: int  # per multi-index enumeration budget

    # Logging
    log_level: str
    log_dir: str
    log_to_file: bool

    # Optional run archive (SQLAlchemy URL)
    db_url: Optional[str]

    slow_tests: bool

    @staticmethod
    def load() -> "KernelConfig":
        dim_bound = _env_int("MCAT_DIM_BOUND", 4)
        if dim_bound < 0:
            raise ValueError("MCAT_DIM_BOUND must be >= 0")

        directions = _env_int("MCAT_DIRECTIONS", 3)
        if directions < 1:
            raise ValueError("MCAT_DIRECTIONS must be >= 1")

        chiral_degree = _env_int("MCAT_CHIRAL_DEGREE", 3)
        if chiral_degree not in (2, 3):
            raise ValueError("MCAT_CHIRAL_DEGREE must be 2 or 3")

        word_length = _env_int("MCAT_WORD_LENGTH", 4)
        nest_depth = _env_int("MCAT_NEST_DEPTH", 3)
        if word_length < 0 or nest_depth < 1:
            raise ValueError("MCAT_WORD_LENGTH must be >= 0 and MCAT_NEST_DEPTH >= 1")

        max_cells = _env_int("MCAT_MAX_CELLS", 200_000)
        if max_cells <= 0:
            raise ValueError("MCAT_MAX_CELLS must be positive")

        log_level = (_env("MCAT_LOG_LEVEL", "INFO") or "INFO").upper()
        if log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError("MCAT_LOG_LEVEL must be a standard logging level name")

        return KernelConfig(
            dim_bound=dim_bound,
            directions=directions,
            chiral_degree=chiral_degree,
            word_length=word_length,
            nest_depth=nest_depth,
            max_cells=max_cells,
            log_level=log_level,
            log_dir=_env("MCAT_LOG_DIR", "logs") or "logs",
            log_to_file=_env_bool("MCAT_LOG_TO_FILE", False),
            db_url=_env("MCAT_DB_URL"),
            slow_tests=_env_bool("MCAT_SLOW_TESTS", False),
        )
