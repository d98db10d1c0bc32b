# DOMINIO - catálogo de grupos pequeños
"""
Catálogo independiente de los grupos de orden <= 8, construido sin pasar por
presentaciones: se enumeran tablas de Cayley con el 0 como neutro, se rellenan por
retroceso deduciendo entradas por asociatividad y se agrupan por isomorfismo certificado.
Sirve de oráculo para las huellas.
"""

import logging
from typing import Dict, List, Optional, Tuple

from profinito.finite_groups.domain.models import PermGroup
from profinito.finite_groups.domain.permutations import Permutation
from profinito.finite_groups.domain.services import are_isomorphic, iso_key
from .models import CATALOG_MAX_ORDER, FingerprintCapExceeded

logger = logging.getLogger(__name__)

Table = List[List[Optional[int]]]


class _CayleySearch:
    """ Retroceso sobre tablas de Cayley de orden fijo n. """

    def __init__(self, n: int):
        self.n = n
        self.found: List[Tuple[Tuple[int, ...], ...]] = []

    def initial(self) -> Optional[Table]:
        n = self.n
        table: Table = [[None] * n for _ in range(n)]
        for x in range(n):
            table[0][x] = x
            table[x][0] = x
        return table

    def _set(self, table: Table, a: int, b: int, c: int, queue: List[Tuple[int, int]]) -> bool:
        """ Fija a·b = c si es compatible con el cuadrado latino. """
        current = table[a][b]
        if current is not None:
            return current == c
        if c in table[a] or any(table[y][b] == c for y in range(self.n)):
            return False
        table[a][b] = c
        queue.append((a, b))
        return True

    def _deduce(self, table: Table, queue: List[Tuple[int, int]]) -> bool:
        """
        Propaga (ab)x = a(bx) y x(ab) = (xa)b desde cada entrada nueva.
        Devuelve False ante una contradicción.
        """
        while queue:
            a, b = queue.pop()
            c = table[a][b]
            for x in range(self.n):
                bx = table[b][x]
                if bx is not None:
                    left, right = table[c][x], table[a][bx]
                    if left is None and right is not None:
                        if not self._set(table, c, x, right, queue):
                            return False
                    elif right is None and left is not None:
                        if not self._set(table, a, bx, left, queue):
                            return False
                    elif left != right:
                        return False
                xa = table[x][a]
                if xa is not None:
                    left, right = table[x][c], table[xa][b]
                    if left is None and right is not None:
                        if not self._set(table, x, c, right, queue):
                            return False
                    elif right is None and left is not None:
                        if not self._set(table, xa, b, left, queue):
                            return False
                    elif left != right:
                        return False
        return True

    def _is_associative(self, table: Table) -> bool:
        r = range(self.n)
        return all(table[table[a][b]][c] == table[a][table[b][c]] for a in r for b in r for c in r)

    def run(self) -> List[Tuple[Tuple[int, ...], ...]]:
        stack = [self.initial()]
        while stack:
            table = stack.pop()
            cell = next(
                ((a, b) for a in range(self.n) for b in range(self.n) if table[a][b] is None), None
            )
            if cell is None:
                if self._is_associative(table):
                    self.found.append(tuple(tuple(row) for row in table))  # type: ignore[arg-type]
                continue
            a, b = cell
            for c in range(self.n):
                child = [row[:] for row in table]
                queue: List[Tuple[int, int]] = []
                if self._set(child, a, b, c, queue) and self._deduce(child, queue):
                    stack.append(child)
        return self.found


def regular_representation(table: Tuple[Tuple[int, ...], ...]) -> PermGroup:
    """ Representación regular por la derecha: g actúa como x -> x·g. """
    n = len(table)
    perms: List[Permutation] = [tuple(table[x][g] for x in range(n)) for g in range(n)]
    gens = tuple(perms[1:]) or (perms[0],)
    return PermGroup(n, gens)


def cayley_tables(order: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """ Todas las tablas de grupo con neutro 0 sobre {0..order-1}. """
    return _CayleySearch(order).run()


def small_group_catalog(max_order: int) -> List[PermGroup]:
    """
    Un grupo regular por clase de isomorfismo de orden <= max_order, ordenado por
    (orden, clave de isomorfismo).
    Raises: FingerprintCapExceeded si max_order > 8.
    """
    if max_order > CATALOG_MAX_ORDER:
        raise FingerprintCapExceeded(max_order, CATALOG_MAX_ORDER)
    catalog: List[PermGroup] = []
    for order in range(1, max_order + 1):
        classes: Dict[object, List[PermGroup]] = {}
        tables = cayley_tables(order)
        for table in tables:
            group = regular_representation(table)
            key = iso_key(group)
            bucket = classes.setdefault(key, [])
            if not any(are_isomorphic(rep, group) for rep in bucket):
                bucket.append(group)
        found = sorted(((k, g) for k, reps in classes.items() for g in reps), key=lambda kg: kg[0].sort_key())
        logger.debug("[.] order %d: %d group table(s), %d class(es)", order, len(tables), len(found))
        catalog.extend(g for _, g in found)
    return catalog
