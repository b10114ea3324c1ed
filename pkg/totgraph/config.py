"""totgraph.config.py"""
import functools
import logging
from typing import List

from pydantic import BaseSettings

CFG_LOGGER = logging.getLogger("totgraph.config")

DEFAULT_POOL = [
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z7",
    "Z8",
    "Z9",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "Z2[x]/(x^2)",
    "Z3[x]/(x^2)",
]


class _Settings(BaseSettings):
    # Ring and graph size caps.
    arithmetic_cap: int = 4096
    block_cap: int = 1024
    graph_cap: int = 1024
    decompose_cap: int = 512
    # Verification pipelines.
    max_order: int = 64
    solver_cap: int = 32
    total_pool: List[str] = DEFAULT_POOL
    workers: int = 1
    # Solver budgets.
    solver_max_nodes: int = 10_000_000
    solver_time_limit: float = 30.0
    cache_size: int = 128
    # Sentry
    sentry_dsn: str = None


@functools.lru_cache()
def get_settings(**kwargs) -> BaseSettings:
    """
    Read settings from the environment or `.env` file.
    https://pydantic-docs.helpmanual.io/usage/settings/#dotenv-env-support

    Usage:
        import totgraph.config

        settings = totgraph.config.get_settings(_env_file="")
        cap = settings.arithmetic_cap
    """
    CFG_LOGGER.info("Loading Config settings from Environment ...")
    return _Settings(**kwargs)
