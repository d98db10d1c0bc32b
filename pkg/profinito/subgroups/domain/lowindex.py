# DOMINIO - subgrupos de índice bajo
"""
Búsqueda de Sims de todas las clases de conjugación de subgrupos de índice <= N.

El estado es una tabla de clases parcial. Siempre se rellena la primera entrada vacía en
orden fila-columna, con una clase existente cuya entrada inversa esté libre o con una clase
nueva. Tras cada asignación se recorren los relatores desde cada clase y se deducen las
entradas forzadas. Una rama se poda cuando alguna renumeración por anchura desde otra clase
ya es menor que la tabla: en ese caso ninguna compleción puede ser el representante mínimo
de su clase de conjugación.
"""

import logging
from functools import partial
from typing import List, Optional, Sequence, Tuple

from profinito.cosets.domain.models import CosetTable, schreier_generators
from profinito.presentations.domain.models import GroupPresentation, inverse_letter
from .executors import BranchExecutor
from .models import HARD_MAX_INDEX, IndexCapExceeded

logger = logging.getLogger(__name__)

Rows = List[List[Optional[int]]]
FrozenRows = Tuple[Tuple[Optional[int], ...], ...]

# Ramas por trabajador antes de repartir la búsqueda
_BRANCHES_PER_WORKER = 4


def _assign(rows: Rows, c: int, x: int, d: int) -> None:
    rows[c][x] = d
    rows[d][inverse_letter(x)] = c


def _propagate(rows: Rows, relators: Sequence[Sequence[int]]) -> bool:
    """
    Recorre cada relator desde cada clase hasta el punto fijo.
    Un hueco único produce una deducción; un recorrido cerrado con extremos distintos es
    una contradicción y devuelve False.
    """
    changed = True
    while changed:
        changed = False
        for alpha in range(len(rows)):
            for word in relators:
                f, b = alpha, alpha
                i, j = 0, len(word) - 1
                while i <= j and rows[f][word[i]] is not None:
                    f = rows[f][word[i]]
                    i += 1
                if i > j:
                    if f != b:
                        return False
                    continue
                while j >= i and rows[b][inverse_letter(word[j])] is not None:
                    b = rows[b][inverse_letter(word[j])]
                    j -= 1
                if j < i:
                    if f != b:
                        return False
                elif i == j:
                    _assign(rows, f, word[i], b)
                    changed = True
    return True


def _first_in_class(rows: Rows) -> bool:
    """
    False si la renumeración desde alguna clase c != 0 es estrictamente menor que la tabla
    en el prefijo ya definido. Las entradas vacías detienen la comparación sin podar.
    """
    n = len(rows)
    width = len(rows[0])
    for base in range(1, n):
        new_of = {base: 0}
        old_of = [base]
        verdict = 0
        for i in range(n):
            if i >= len(old_of):
                break
            for x in range(width):
                original = rows[i][x]
                image = rows[old_of[i]][x]
                if original is None or image is None:
                    verdict = 1
                    break
                if image not in new_of:
                    new_of[image] = len(old_of)
                    old_of.append(image)
                renamed = new_of[image]
                if renamed != original:
                    verdict = -1 if renamed < original else 1
                    break
            if verdict:
                break
        if verdict < 0:
            return False
    return True


def _first_undefined(rows: Rows) -> Optional[Tuple[int, int]]:
    for c, row in enumerate(rows):
        for x, entry in enumerate(row):
            if entry is None:
                return c, x
    return None


def _children(rows: Rows, max_index: int, relators: Sequence[Sequence[int]]) -> List[Rows]:
    """ Hijos viables de un nodo incompleto, en orden de valor asignado. """
    c, x = _first_undefined(rows)  # type: ignore[misc]
    xi = inverse_letter(x)
    n = len(rows)
    out: List[Rows] = []
    candidates = [d for d in range(n) if rows[d][xi] is None]
    if n < max_index:
        candidates.append(n)
    for d in candidates:
        child = [row[:] for row in rows]
        if d == n:
            child.append([None] * len(rows[0]))
        _assign(child, c, x, d)
        if _propagate(child, relators) and _first_in_class(child):
            out.append(child)
    return out


def _freeze(rows: Rows) -> FrozenRows:
    return tuple(tuple(row) for row in rows)


def explore_branch(
    branch: FrozenRows, max_index: int, relators: Tuple[Tuple[int, ...], ...]
) -> List[FrozenRows]:
    """
    Todas las tablas completas que extienden `branch`.
    Función de módulo para poder enviarse a otros procesos.
    """
    found: List[FrozenRows] = []
    stack: List[Rows] = [[list(row) for row in branch]]
    while stack:
        rows = stack.pop()
        if _first_undefined(rows) is None:
            found.append(_freeze(rows))
            continue
        # Orden inverso en la pila para visitar los hijos en orden creciente
        stack.extend(reversed(_children(rows, max_index, relators)))
    return found


def _split_frontier(
    root: Rows, max_index: int, relators: Sequence[Sequence[int]], target: int
) -> Tuple[List[FrozenRows], List[FrozenRows]]:
    """ Expande por niveles hasta tener `target` ramas abiertas. Devuelve (completas, abiertas). """
    complete: List[FrozenRows] = []
    frontier: List[Rows] = [root]
    while frontier and len(frontier) < target:
        next_level: List[Rows] = []
        for rows in frontier:
            if _first_undefined(rows) is None:
                complete.append(_freeze(rows))
            else:
                next_level.extend(_children(rows, max_index, relators))
        frontier = next_level
    still_open = []
    for rows in frontier:
        if _first_undefined(rows) is None:
            complete.append(_freeze(rows))
        else:
            still_open.append(_freeze(rows))
    return complete, still_open


def low_index_subgroups(
    presentation: GroupPresentation,
    max_index: int,
    executor: Optional[BranchExecutor] = None,
) -> List[CosetTable]:
    """
    Una tabla completa por clase de conjugación de subgrupos de índice <= max_index.
    Cada tabla es la mínima de su clase en el orden de anchura; la salida se ordena por
    (índice, filas) y no depende del ejecutor usado.
    Raises:
        ValueError: max_index < 1.
        IndexCapExceeded: max_index por encima del límite duro.
    """
    if max_index < 1:
        raise ValueError("max_index must be at least 1.")
    if max_index > HARD_MAX_INDEX:
        raise IndexCapExceeded(max_index)

    relators = tuple(tuple(r.letters()) for r in presentation.relators)
    root: Rows = [[None] * presentation.num_letters]
    _propagate(root, relators)

    workers = executor.workers if executor is not None else 1
    if workers > 1:
        complete, branches = _split_frontier(root, max_index, relators, workers * _BRANCHES_PER_WORKER)
        explore = partial(explore_branch, max_index=max_index, relators=relators)
        for found in executor.map(explore, branches):  # type: ignore[union-attr]
            complete.extend(found)
    else:
        complete = explore_branch(_freeze(root), max_index, relators)

    tables = []
    for rows in sorted(complete, key=lambda r: (len(r), r)):
        table = CosetTable(presentation, rows)
        if not (table.relators_close() and table.involution_consistent()):
            raise RuntimeError("Low-index search produced a table that fails relator closure.")
        tables.append(CosetTable(presentation, rows, tuple(schreier_generators(table))))
    logger.info("[x] %d subgroup class(es) of index <= %d", len(tables), max_index)
    return tables
