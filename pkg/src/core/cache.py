"""
Computation Cache - Memoisation of deterministic p-adic tables

Implements:
- Dwork coefficient tables keyed by (p, count, pi_prec)
- Gamma_p doubling tables keyed by (p, N)
- Teichmueller-compatible moduli keyed by (p, f, N)
- Expiry after a TTL, least-used eviction at capacity, hit/miss counters
"""

from __future__ import annotations

import hashlib
import json
import logging
import threading
import time
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

logger = logging.getLogger("padic-desk")

TABLE_KINDS = ("dwork", "gamma", "modulus")


def table_key(params: Any) -> str:
    """SHA-256 of the canonical JSON form, so {"p": 5, "N": 4} and {"N": 4, "p": 5} agree."""
    text = params if isinstance(params, str) else json.dumps(params, sort_keys=True, default=str)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:32]


@dataclass
class TableEntry:
    value: Any
    created_at: float
    expires_at: float
    uses: int = 0

    def stale(self, now: float) -> bool:
        return now > self.expires_at


class ComputationCache:
    """One table store per kind; a table is computed once per parameter set and shared by all callers."""

    def __init__(self, max_entries: int = 256, default_ttl_seconds: int = 24 * 3600):
        self.max_entries = max_entries
        self.default_ttl = default_ttl_seconds
        self._tables: Dict[str, Dict[str, TableEntry]] = {kind: {} for kind in TABLE_KINDS}
        self._counts: Counter = Counter()
        self._lock = threading.Lock()

    def _store(self, kind: str) -> Dict[str, TableEntry]:
        try:
            return self._tables[kind]
        except KeyError:
            raise KeyError(f"unknown cache kind {kind!r}") from None

    def get(self, kind: str, params: Any) -> Optional[Any]:
        store = self._store(kind)
        key = table_key(params)
        with self._lock:
            entry = store.get(key)
            if entry is not None and entry.stale(time.time()):
                del store[key]
                entry = None
            if entry is None:
                self._counts["misses"] += 1
                return None
            entry.uses += 1
            self._counts["hits"] += 1
            return entry.value

    def set(self, kind: str, params: Any, value: Any, ttl: Optional[int] = None) -> None:
        store = self._store(kind)
        now = time.time()
        with self._lock:
            if len(store) >= self.max_entries:
                self._make_room(store, now)
            lifetime = self.default_ttl if ttl is None else ttl
            store[table_key(params)] = TableEntry(value, now, now + lifetime)

    def get_or_compute(self, kind: str, params: Any, compute: Callable[[], Any]) -> Any:
        value = self.get(kind, params)
        if value is None:
            value = compute()
            self.set(kind, params, value)
            logger.debug("cached %s table for %s", kind, params)
        return value

    def _make_room(self, store: Dict[str, TableEntry], now: float) -> None:
        for key in [k for k, e in store.items() if e.stale(now)]:
            del store[key]
            self._counts["evictions"] += 1
        if len(store) < self.max_entries:
            return
        # drop the least used tenth, oldest first among ties
        ranked = sorted(store, key=lambda k: (store[k].uses, store[k].created_at))
        for key in ranked[: max(1, len(ranked) // 10)]:
            del store[key]
            self._counts["evictions"] += 1

    def clear_all(self) -> None:
        with self._lock:
            for store in self._tables.values():
                store.clear()

    def get_stats(self) -> Dict[str, Any]:
        sizes = {f"{kind}_cache_size": len(store) for kind, store in self._tables.items()}
        lookups = self._counts["hits"] + self._counts["misses"]
        return {
            "total_entries": sum(sizes.values()),
            **sizes,
            "hits": self._counts["hits"],
            "misses": self._counts["misses"],
            "evictions": self._counts["evictions"],
            "hit_rate": self._counts["hits"] / lookups if lookups else 0.0,
        }


computation_cache = ComputationCache()
