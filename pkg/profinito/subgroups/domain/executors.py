from abc import ABC, abstractmethod
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class BranchExecutor(ABC):
    """
    Puerto para explorar ramas independientes de una búsqueda con retroceso.
    El dominio solo pide aplicar una función a cada rama y recoger los resultados;
    no sabe si se ejecutan en serie o en varios procesos.
    """

    @abstractmethod
    def map(self, fn: Callable[[T], R], branches: Iterable[T]) -> List[R]:
        """
        Aplica `fn` a cada rama.
        Returns: lista de resultados en el mismo orden que `branches`.
        `fn` y las ramas deben poder serializarse con pickle.
        """
        pass

    @property
    @abstractmethod
    def workers(self) -> int:
        """ Número de trabajadores concurrentes (1 = secuencial). """
        pass

# --- Notas sobre la implementación ---
# 1. Puerto secundario: los adaptadores viven en infrastructure/parallel.
# 2. El orden de la salida lo fija el llamador ordenando resultados, no el adaptador.
