"""
In-memory memo cache shared by the enumeration-heavy builders.
Values stored here are immutable (polynomials, tuples), so readers on
different threads may share them.
"""
import hashlib
import json
import logging
import threading
from collections import OrderedDict
from functools import wraps
from typing import Any, Dict, Optional

from .. import config

logger = logging.getLogger(__name__)


class CacheService:
    """
    Bounded LRU map from string keys to computed values. Every access holds
    one lock; the verify command reads it from its worker threads.
    """

    def __init__(self, max_entries: Optional[int] = None):
        """
        Args:
            max_entries: Capacity, defaults to CACHE_MAX_ENTRIES
        """
        self._max_entries = max_entries or config.CACHE_MAX_ENTRIES
        self._entries: "OrderedDict[str, Any]" = OrderedDict()
        self._lock = threading.Lock()
        self._hits = 0
        self._misses = 0

    def _make_key(self, namespace: str, *args, **kwargs) -> str:
        """
        Key for a call such as ('families', 'eulerian', 5).

        Arguments go through json with str() as fallback, so Fractions and
        enums key by their text form.
        """
        payload = json.dumps(
            [args, kwargs], sort_keys=True, default=str, separators=(',', ':')
        )
        digest = hashlib.sha256(payload.encode('utf-8')).hexdigest()
        return f"{namespace}:{digest[:16]}"

    def get(self, key: str) -> Optional[Any]:
        """Stored value, or None on a miss; a hit refreshes recency."""
        with self._lock:
            try:
                value = self._entries[key]
            except KeyError:
                self._misses += 1
                return None
            self._entries.move_to_end(key)
            self._hits += 1
            return value

    def set(self, key: str, value: Any) -> bool:
        with self._lock:
            self._entries[key] = value
            self._entries.move_to_end(key)
            while len(self._entries) > self._max_entries:
                evicted, _ = self._entries.popitem(last=False)
                logger.debug(f"Cache evicted {evicted}")
        return True

    def delete(self, key: str) -> bool:
        """True when the key was present."""
        with self._lock:
            return self._entries.pop(key, None) is not None

    def clear(self) -> bool:
        """Drop every entry and zero the counters."""
        with self._lock:
            self._entries.clear()
            self._hits = self._misses = 0
        return True

    def get_stats(self) -> Dict[str, Any]:
        with self._lock:
            return {
                'size': len(self._entries),
                'max_entries': self._max_entries,
                'hits': self._hits,
                'misses': self._misses,
            }


_cache_service: Optional[CacheService] = None
_cache_lock = threading.Lock()


def get_cache_service() -> CacheService:
    """Process-wide CacheService, created on first use."""
    global _cache_service
    if _cache_service is None:
        with _cache_lock:
            if _cache_service is None:
                _cache_service = CacheService()
    return _cache_service


def reset_cache_service():
    """Drop the global cache (useful for testing)."""
    global _cache_service
    _cache_service = None


def cached(namespace: str):
    """
    Memoize a pure builder through the global CacheService.

    Results equal to None are recomputed on every call.

    Args:
        namespace: Key prefix, one per builder
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            service = get_cache_service()
            key = service._make_key(namespace, *args, **kwargs)
            hit = service.get(key)
            if hit is not None:
                return hit
            value = func(*args, **kwargs)
            service.set(key, value)
            logger.debug(f"Cached {func.__name__}{args}")
            return value

        return wrapper

    return decorator
