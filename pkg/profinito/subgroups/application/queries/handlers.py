# QUERY HANDLER SERVICE
import logging
from typing import List

from profinito.cosets.domain.models import CosetTable
from .low_index_query import LowIndexQuery
from ...domain.executors import BranchExecutor
from ...domain.lowindex import low_index_subgroups
from ...domain.models import IndexCapExceeded

logger = logging.getLogger(__name__)


def handle_low_index(query: LowIndexQuery, executor: BranchExecutor) -> List[CosetTable]:
    """
    Handler para LowIndexQuery.
    Recibe el ejecutor de ramas ya resuelto (inyección de dependencias).
    Raises:
        IndexCapExceeded / ValueError: max_index fuera de rango.
        RuntimeError: fallo interno de la búsqueda.
    """
    logger.info("[.] Low-index search up to %d with %d worker(s)", query.max_index, executor.workers)
    try:
        return low_index_subgroups(query.presentation, query.max_index, executor)
    except (IndexCapExceeded, ValueError):
        raise
    except Exception as e:
        raise RuntimeError(f"Low-index subgroup search failed: {e}") from e
