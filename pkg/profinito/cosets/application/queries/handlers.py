# QUERY HANDLER SERVICE
import logging

from .enumerate_cosets_query import EnumerateCosetsQuery
from ...domain.enumeration import coset_enumerate
from ...domain.models import CapacityExceeded, CosetTable

logger = logging.getLogger(__name__)


def handle_enumerate_cosets(query: EnumerateCosetsQuery) -> CosetTable:
    """
    Handler para EnumerateCosetsQuery.
    Returns: CosetTable completa.
    Raises:
        CapacityExceeded: índice desconocido dentro de la capacidad pedida (se propaga tal cual).
        ValueError: palabras de subgrupo inválidas.
        RuntimeError: fallo interno de la enumeración.
    """
    logger.info("[.] Enumerating cosets of %d subgroup generator(s), max_cosets=%d",
                len(query.subgroup), query.max_cosets)
    try:
        return coset_enumerate(query.presentation, query.subgroup, query.max_cosets)
    except (CapacityExceeded, ValueError):
        raise
    except Exception as e:
        raise RuntimeError(f"Coset enumeration failed: {e}") from e
