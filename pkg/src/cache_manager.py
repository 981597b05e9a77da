"""
Cache Manager Module
Caches homology results in a SQLite database, keyed by the request
(algebra, ring, parameters). Each entry stores the SHA256 of the canonical
request document; a hash mismatch is treated as a miss.
"""

import hashlib
import json
import logging
import os
import sqlite3
from datetime import datetime
from typing import Any, Dict, Optional

from src.utils import canonical_json

logger = logging.getLogger(__name__)


class ResultCache:
    """
    Stores JSON results of expensive computations (Hochschild ranks,
    truncated negative cyclic homology) by request key.
    """

    def __init__(self, cache_db_path: str = "cache/results_cache.db"):
        """
        Initialize the cache.

        Args:
            cache_db_path (str): Path to SQLite database file
        """
        self.cache_db_path = cache_db_path

        directory = os.path.dirname(cache_db_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        self._init_database()
        logger.info("Result cache initialized with database: %s", cache_db_path)

    def _init_database(self) -> None:
        conn = sqlite3.connect(self.cache_db_path)
        cursor = conn.cursor()

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS results_cache (
                request_key TEXT PRIMARY KEY,
                payload TEXT NOT NULL,
                hash TEXT NOT NULL,
                updated_at TEXT NOT NULL
            )
        """)

        conn.commit()
        conn.close()

    @staticmethod
    def compute_hash(request: Dict[str, Any]) -> str:
        """
        SHA256 of the canonical JSON form of a request document.

        Args:
            request (Dict[str, Any]): The request, e.g. algebra document plus parameters

        Returns:
            str: Hexadecimal digest
        """
        return hashlib.sha256(canonical_json(request).encode("utf-8")).hexdigest()

    def save_result(self, request_key: str, request: Dict[str, Any], payload: Dict[str, Any]) -> None:
        """
        Save or replace the result for a request.

        Args:
            request_key (str): Short identifier, e.g. "hh:matrix:2:Q:3"
            request (Dict[str, Any]): Full request document (hashed)
            payload (Dict[str, Any]): JSON-serializable result
        """
        conn = sqlite3.connect(self.cache_db_path)
        cursor = conn.cursor()

        cursor.execute("""
            INSERT OR REPLACE INTO results_cache (request_key, payload, hash, updated_at)
            VALUES (?, ?, ?, ?)
        """, (request_key, canonical_json(payload), self.compute_hash(request), datetime.now().isoformat()))

        conn.commit()
        conn.close()
        logger.debug("Cached result for %s", request_key)

    def check_cache(self, request_key: str, request: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        """
        Return the cached payload if present and computed for this exact
        request, None otherwise.
        """
        conn = sqlite3.connect(self.cache_db_path)
        cursor = conn.cursor()
        cursor.execute(
            "SELECT payload, hash FROM results_cache WHERE request_key = ?",
            (request_key,)
        )
        result = cursor.fetchone()
        conn.close()

        if result is None:
            logger.info("Cache miss for %s", request_key)
            return None

        payload, cached_hash = result
        if cached_hash != self.compute_hash(request):
            logger.info("Stale cache entry for %s", request_key)
            return None

        logger.info("Cache hit for %s", request_key)
        return json.loads(payload)

    def get_all_cached_results(self) -> Dict[str, Dict[str, str]]:
        conn = sqlite3.connect(self.cache_db_path)
        cursor = conn.cursor()
        cursor.execute("SELECT request_key, hash, updated_at FROM results_cache")
        results = cursor.fetchall()
        conn.close()

        return {
            key: {"hash": hash_val, "updated_at": updated_at}
            for key, hash_val, updated_at in results
        }

    def delete_cache_entry(self, request_key: str) -> None:
        conn = sqlite3.connect(self.cache_db_path)
        cursor = conn.cursor()
        cursor.execute("DELETE FROM results_cache WHERE request_key = ?", (request_key,))
        conn.commit()
        conn.close()

    def clear_cache(self) -> None:
        conn = sqlite3.connect(self.cache_db_path)
        cursor = conn.cursor()
        cursor.execute("DELETE FROM results_cache")
        conn.commit()
        conn.close()
        logger.info("Result cache cleared")

    def get_cache_stats(self) -> Dict[str, Any]:
        """
        Returns:
            Dict[str, Any]: Entry count and database size
        """
        conn = sqlite3.connect(self.cache_db_path)
        cursor = conn.cursor()
        cursor.execute("SELECT COUNT(*) FROM results_cache")
        total_entries = cursor.fetchone()[0]
        conn.close()

        db_size = os.path.getsize(self.cache_db_path) if os.path.exists(self.cache_db_path) else 0
        return {
            "total_cached_results": total_entries,
            "database_size_bytes": db_size,
            "database_size_mb": round(db_size / (1024 * 1024), 2)
        }


# Example usage and testing
if __name__ == "__main__":
    cache = ResultCache("cache/test_results.db")
    request = {"algebra": "matrix:2", "ring": "Q", "max_degree": 3}
    cache.save_result("hh:matrix:2", request, {"dims": [1, 0, 0, 0]})
    print(f"Cache hit: {cache.check_cache('hh:matrix:2', request)}")
    print(f"Cache miss (other ring): {cache.check_cache('hh:matrix:2', {**request, 'ring': 'Z'}) is None}")
    print(f"Cache stats: {cache.get_cache_stats()}")
