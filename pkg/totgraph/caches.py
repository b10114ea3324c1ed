"""totgraph.caches.py"""
import functools
import logging

import cachetools

from .config import get_settings

LOGGER = logging.getLogger(name="totgraph.caches")

SETTINGS = get_settings()


@functools.lru_cache()
def get_cache(namespace: str) -> cachetools.LRUCache:
    """Return the process-wide LRU cache for a namespace."""
    LOGGER.debug(f"creating LRUCache for `{namespace}` (maxsize={SETTINGS.cache_size})")
    return cachetools.LRUCache(maxsize=SETTINGS.cache_size)


def check_cache(data_id, namespace: str):
    """Check the data of a cache given an id."""
    result = get_cache(namespace).get(data_id)
    if result is not None:
        LOGGER.debug(f"{namespace}:{data_id} cache hit")
    return result


def load_cache(data_id, data, namespace: str):
    """Load data into the cache."""
    get_cache(namespace)[data_id] = data
    LOGGER.debug(f"{namespace}:{data_id} cache loaded")
    return data


def clear_caches():
    """Drop every namespaced cache (tests and long-running explorations)."""
    get_cache.cache_clear()
