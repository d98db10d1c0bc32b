# DOMINIO
from profinito.cosets.domain.models import CosetTable, IncompleteTableError, permutation_action
from profinito.finite_groups.domain.models import PermGroup
from profinito.finite_groups.domain.services import group_order

HARD_MAX_INDEX = 64
DEFAULT_MAX_INDEX = 16


class IndexCapExceeded(ValueError):
    """ Se pidió un índice máximo por encima del límite duro. """

    def __init__(self, max_index: int, cap: int = HARD_MAX_INDEX):
        self.max_index = max_index
        self.cap = cap
        super().__init__(f"max_index {max_index} exceeds the hard cap of {cap}")


def is_normal(table: CosetTable) -> bool:
    """
    True si el estabilizador de la clase 0 es normal, es decir si la acción sobre las
    clases es regular: el grupo de permutaciones generado tiene orden igual al grado.
    """
    if not table.is_complete:
        raise IncompleteTableError("is_normal requires a complete coset table.")
    degree = table.num_cosets
    group = PermGroup(degree, tuple(permutation_action(table)))
    # Una acción transitiva tiene orden >= grado; basta cerrar hasta grado + 1
    return group_order(group, cap=degree) == degree
