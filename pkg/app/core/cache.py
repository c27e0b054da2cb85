"""
Sistema de cache para construtores puros (operadores mapeados, matrizes de Pauli)
"""
import threading

import cachetools
from cachetools import LRUCache
from cachetools.keys import hashkey

from app.core.config import CACHE_CONFIG

# Dicionário global de caches e das travas correspondentes
caches = {}
locks = {}


def cached(maxsize=None):
    """
    Decorator de memoização para funções puras com argumentos hasheáveis.

    Os resultados devem ser imutáveis (PauliSum, tuplas); arrays numpy
    não são devolvidos a partir do cache. Cada cache tem sua própria RLock,
    pois as rotas síncronas da API rodam no pool de threads.

    Args:
        maxsize: Tamanho máximo do cache (default: CACHE_CONFIG['default_maxsize'])
    """
    if maxsize is None:
        maxsize = CACHE_CONFIG["default_maxsize"]

    def decorator(func):
        cache_key = f"{func.__module__}.{func.__qualname__}"
        if cache_key not in caches:
            caches[cache_key] = LRUCache(maxsize=maxsize)
            locks[cache_key] = threading.RLock()
        return cachetools.cached(caches[cache_key], key=hashkey, lock=locks[cache_key])(func)

    return decorator


def clear_caches():
    """Esvazia todos os caches registrados."""
    for name, cache in caches.items():
        with locks[name]:
            cache.clear()


def cache_stats():
    """Retorna ocupação de cada cache registrado."""
    stats = {}
    for name, cache in caches.items():
        with locks[name]:
            stats[name] = {"size": cache.currsize, "maxsize": cache.maxsize}
    return stats
