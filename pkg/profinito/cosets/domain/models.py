# DOMINIO
"""
Tabla de clases laterales: la acción de G sobre las clases H·g de un subgrupo H.

Internamente las clases se numeran desde 0 (la clase 0 es H); los volcados y el JSON
usan numeración desde 1. Las columnas siguen el orden fijo de letras (a, a^-1, t, t^-1, ...).
"""

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from profinito.presentations.domain.models import GroupPresentation, Word, free_reduce, inverse_letter
from profinito.finite_groups.domain.permutations import Permutation

Row = Tuple[Optional[int], ...]


# --- Excepciones del dominio ---
class CapacityExceeded(RuntimeError):
    """
    La enumeración agotó `max_cosets`. No afirma que el índice sea infinito:
    la enumeración de Todd-Coxeter es solo un semi-algoritmo.
    """

    def __init__(self, max_cosets: int, cosets_used: int):
        self.max_cosets = max_cosets
        self.cosets_used = cosets_used
        super().__init__(
            f"coset enumeration exceeded capacity: {cosets_used} cosets defined "
            f"(max_cosets={max_cosets}); index unknown"
        )


class IncompleteTableError(ValueError):
    """ La operación exige una tabla completa. """


@dataclass(frozen=True)
class CosetTable:
    """ Tabla de clases laterales (posiblemente parcial) con sus generadores de subgrupo. """

    presentation: GroupPresentation
    rows: Tuple[Row, ...]
    subgroup_gens: Tuple[Word, ...] = ()

    @property
    def num_cosets(self) -> int:
        return len(self.rows)

    @property
    def index(self) -> int:
        """ Índice [G:H] (igual a `num_cosets` en una tabla completa). """
        return len(self.rows)

    @property
    def is_complete(self) -> bool:
        return all(entry is not None for row in self.rows for entry in row)

    def trace(self, coset: int, word: Word) -> Optional[int]:
        """ Clase alcanzada desde `coset` leyendo `word`; None si cae en una entrada vacía. """
        current: Optional[int] = coset
        for letter in word.letters():
            current = self.rows[current][letter]
            if current is None:
                return None
        return current

    def relators_close(self) -> bool:
        """ Cada relator vuelve al punto de partida desde cada clase. """
        return all(
            self.trace(c, r) == c for r in self.presentation.relators for c in range(self.num_cosets)
        )

    def subgroup_closes(self) -> bool:
        """ Cada generador del subgrupo fija la clase 0. """
        return all(self.trace(0, w) == 0 for w in self.subgroup_gens)

    def involution_consistent(self) -> bool:
        """ table[c][x] = d implica table[d][x^-1] = c. """
        for c, row in enumerate(self.rows):
            for letter, d in enumerate(row):
                if d is not None and self.rows[d][inverse_letter(letter)] != c:
                    return False
        return True

    def sort_key(self) -> Tuple:
        return (self.num_cosets, tuple(tuple(-1 if e is None else e for e in row) for row in self.rows))


# --- Servicios sobre tablas completas ---
def standardize(rows: Sequence[Sequence[int]], base: int = 0) -> Tuple[Tuple[int, ...], ...]:
    """
    Renumeración canónica por anchura desde `base` recorriendo las letras en orden fijo.
    Supone una tabla completa y transitiva.
    """
    order = [base]
    new_index = {base: 0}
    position = 0
    while position < len(order):
        row = rows[order[position]]
        for target in row:
            if target not in new_index:
                new_index[target] = len(order)
                order.append(target)
        position += 1
    return tuple(tuple(new_index[rows[old][x]] for x in range(len(rows[old]))) for old in order)


def permutation_action(table: CosetTable) -> List[Permutation]:
    """
    Una permutación por generador, leída de las columnas positivas de la tabla.
    Raises: IncompleteTableError si la tabla tiene entradas sin definir.
    """
    if not table.is_complete:
        raise IncompleteTableError("permutation_action requires a complete coset table.")
    return [
        tuple(row[2 * g] for row in table.rows)  # type: ignore[misc]
        for g in range(table.presentation.rank)
    ]


def coset_representatives(table: CosetTable) -> List[Word]:
    """ Representantes de Schreier: palabras del árbol de anchura desde la clase 0. """
    reps: List[Optional[Tuple[int, ...]]] = [None] * table.num_cosets
    reps[0] = ()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for letter, d in enumerate(table.rows[c]):
            if d is not None and reps[d] is None:
                reps[d] = reps[c] + (letter,)
                queue.append(d)
    return [Word.from_letters(r or ()) for r in reps]


def schreier_generators(table: CosetTable) -> List[Word]:
    """
    Generadores de Schreier de H: rep(c) · x · rep(c^x)^-1 para cada arista fuera del árbol.
    Se devuelven libremente reducidos, sin duplicados ni triviales, en orden determinista.
    """
    if not table.is_complete:
        raise IncompleteTableError("schreier_generators requires a complete coset table.")
    reps = coset_representatives(table)
    out: List[Word] = []
    seen = set()
    for c in range(table.num_cosets):
        for g in range(table.presentation.rank):
            d = table.rows[c][2 * g]
            word = free_reduce(reps[c] * Word(((g, 1),)) * reps[d].inverse())
            if word.is_empty or word in seen:
                continue
            seen.add(word)
            out.append(word)
    return out


def dump_table(table: CosetTable) -> str:
    """ Una línea por clase, entradas separadas por tabuladores (numeración desde 1). """
    lines = []
    for row in table.rows:
        lines.append("\t".join("-" if e is None else str(e + 1) for e in row))
    return "\n".join(lines)
