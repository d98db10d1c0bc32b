# ADAPTADORES SECUNDARIOS - ejecución de ramas
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List

from ...domain.executors import BranchExecutor

logger = logging.getLogger(__name__)


class SequentialBranchExecutor(BranchExecutor):
    """ Explora las ramas una tras otra en el proceso actual. """

    def map(self, fn: Callable, branches: Iterable) -> List:
        return [fn(branch) for branch in branches]

    @property
    def workers(self) -> int:
        return 1


class ProcessBranchExecutor(BranchExecutor):
    """
    Reparte las ramas entre `max_workers` procesos con ProcessPoolExecutor.
    Se crea un pool por llamada; el coste de arranque es despreciable frente a la búsqueda.
    """

    def __init__(self, max_workers: int):
        if max_workers < 1:
            raise ValueError("max_workers must be positive.")
        self._max_workers = max_workers

    def map(self, fn: Callable, branches: Iterable) -> List:
        branches = list(branches)
        if len(branches) <= 1:
            return [fn(branch) for branch in branches]
        logger.debug("[.] Dispatching %d branches to %d processes", len(branches), self._max_workers)
        try:
            with ProcessPoolExecutor(max_workers=self._max_workers) as pool:
                return list(pool.map(fn, branches))
        except Exception as e:
            raise RuntimeError(f"Parallel branch exploration failed: {e}") from e

    @property
    def workers(self) -> int:
        return self._max_workers
