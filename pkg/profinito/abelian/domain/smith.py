# DOMINIO - forma normal de Smith y abelianización
"""
Forma normal de Smith con enteros exactos.

Pivote: el menor valor absoluto no nulo de la submatriz activa; empates por posición en
orden de filas. Tras anular fila y columna del pivote se repara la divisibilidad sumando
a la fila del pivote la primera fila con una entrada no divisible.
"""

import logging
from typing import List, Optional, Tuple

from profinito.presentations.domain.models import GroupPresentation
from .models import AbelianInvariants, IntMatrix, SmithForm, SmithOverflowError

logger = logging.getLogger(__name__)


class _Reducer:
    def __init__(self, matrix: IntMatrix, max_bits: int = 0):
        self.a: List[List[int]] = [list(row) for row in matrix.entries]
        self.rows, self.cols = matrix.rows, matrix.cols
        self.max_bits = max_bits
        for row in self.a:
            for value in row:
                self.check(value)

    def check(self, value: int) -> int:
        if self.max_bits and value.bit_length() >= self.max_bits:
            raise SmithOverflowError(f"SNF entry {value} exceeds {self.max_bits}-bit signed range.")
        return value

    def pivot(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                v = abs(self.a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return None if best is None else (best[1], best[2])

    def swap(self, t: int, i: int, j: int) -> None:
        self.a[t], self.a[i] = self.a[i], self.a[t]
        for row in self.a:
            row[t], row[j] = row[j], row[t]

    def add_row(self, target: int, source: int, q: int) -> None:
        """ fila[target] -= q * fila[source] """
        if q:
            src, dst = self.a[source], self.a[target]
            for j in range(self.cols):
                dst[j] = self.check(dst[j] - q * src[j])

    def add_col(self, target: int, source: int, q: int) -> None:
        if q:
            for row in self.a:
                row[target] = self.check(row[target] - q * row[source])

    def clear(self, t: int) -> bool:
        """ Anula fila y columna t; devuelve False si quedó algún resto (hay que repivotar). """
        p = self.a[t][t]
        clean = True
        for i in range(t + 1, self.rows):
            q = self.a[i][t] // p
            self.add_row(i, t, q)
            clean &= self.a[i][t] == 0
        for j in range(t + 1, self.cols):
            q = self.a[t][j] // p
            self.add_col(j, t, q)
            clean &= self.a[t][j] == 0
        return clean

    def reduce(self) -> SmithForm:
        rank = 0
        for t in range(min(self.rows, self.cols)):
            found = self.pivot(t)
            if found is None:
                break
            while True:
                self.swap(t, *found)
                if not self.clear(t):
                    found = self.pivot_in_line(t)
                    continue
                bad = self.non_divisible_row(t)
                if bad is None:
                    break
                self.add_row(t, bad, -1)
                found = self.pivot_in_line(t)
            self.a[t][t] = abs(self.a[t][t])
            rank += 1
        factors = tuple(self.a[i][i] for i in range(rank))
        return SmithForm(factors, self.cols - rank)

    def pivot_in_line(self, t: int) -> Tuple[int, int]:
        """ Menor no nulo en la submatriz activa tras una operación (siempre existe). """
        found = self.pivot(t)
        assert found is not None
        return found

    def non_divisible_row(self, t: int) -> Optional[int]:
        p = self.a[t][t]
        for i in range(t + 1, self.rows):
            for j in range(t + 1, self.cols):
                if self.a[i][j] % p:
                    return i
        return None


def smith_normal_form(matrix: IntMatrix, max_bits: int = 0) -> SmithForm:
    """
    Factores invariantes d_1 | d_2 | ... (unidades incluidas) y rango libre del conúcleo
    Z^cols / (espacio de filas).
    Raises: SmithOverflowError solo si `max_bits` > 0 y una entrada lo supera.
    """
    return _Reducer(matrix, max_bits).reduce()


def relation_matrix(presentation: GroupPresentation) -> IntMatrix:
    """ Matriz relatores x generadores de sumas de exponentes. """
    rows = [[r.exponent_sum(g) for g in range(presentation.rank)] for r in presentation.relators]
    return IntMatrix(len(rows), presentation.rank, tuple(tuple(r) for r in rows))


def abelianize(presentation: GroupPresentation, max_bits: int = 0) -> AbelianInvariants:
    """ G^ab a partir de la forma de Smith de la matriz de relaciones. """
    form = smith_normal_form(relation_matrix(presentation), max_bits)
    invariants = AbelianInvariants.from_factors(form.factors, form.free_rank)
    logger.debug("[x] Abelianization of %s: %s", presentation, invariants)
    return invariants
