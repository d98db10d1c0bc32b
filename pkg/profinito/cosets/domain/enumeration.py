# DOMINIO - enumeración de Todd-Coxeter
"""
Enumeración de clases laterales estilo HLT: se recorren los relatores desde cada clase
viva definiendo clases nuevas donde falte una entrada; las coincidencias se resuelven de
inmediato con unión-búsqueda y la cola se procesa hasta el punto fijo antes de seguir.
Al terminar se compacta la tabla y se renumera por anchura desde la clase 0.
"""

import logging
from typing import List, Optional, Sequence

from profinito.presentations.domain.models import GroupPresentation, Word, inverse_letter
from .models import CapacityExceeded, CosetTable, standardize

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 10**6


class _Enumerator:
    """ Estado mutable de una sola enumeración; no se comparte entre enumeraciones. """

    def __init__(self, presentation: GroupPresentation, max_cosets: int):
        self.width = presentation.num_letters
        self.max_cosets = max_cosets
        self.table: List[List[Optional[int]]] = [[None] * self.width]
        self.parent: List[int] = [0]

    # --- unión-búsqueda ---
    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def merge(self, k: int, l: int, queue: List[int]) -> None:
        phi, psi = self.rep(k), self.rep(l)
        if phi != psi:
            mu, nu = min(phi, psi), max(phi, psi)
            self.parent[nu] = mu
            queue.append(nu)

    def coincidence(self, a: int, b: int) -> None:
        queue: List[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            gamma = queue[i]
            i += 1
            for x in range(self.width):
                delta = self.table[gamma][x]
                if delta is None:
                    continue
                xi = inverse_letter(x)
                self.table[delta][xi] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if self.table[mu][x] is not None:
                    self.merge(nu, self.table[mu][x], queue)
                elif self.table[nu][xi] is not None:
                    self.merge(mu, self.table[nu][xi], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][xi] = mu

    # --- definiciones y recorridos ---
    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise CapacityExceeded(self.max_cosets, len(self.table))
        beta = len(self.table)
        self.table.append([None] * self.width)
        self.parent.append(beta)
        self.table[c][x] = beta
        self.table[beta][inverse_letter(x)] = c

    def scan_and_fill(self, alpha: int, word: Sequence[int]) -> None:
        if not word:
            return
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and self.table[f][word[i]] is not None:
                f = self.table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][inverse_letter(word[j])] is not None:
                b = self.table[b][inverse_letter(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                self.table[f][word[i]] = b
                self.table[b][inverse_letter(word[i])] = f
                return
            self.define(f, word[i])

    def run(self, relators: Sequence[Sequence[int]], subgroup: Sequence[Sequence[int]]) -> None:
        for word in subgroup:
            self.scan_and_fill(0, word)
        alpha = 0
        while alpha < len(self.table):
            for word in relators:
                if not self.is_live(alpha):
                    break
                self.scan_and_fill(alpha, word)
            if self.is_live(alpha):
                for x in range(self.width):
                    if self.table[alpha][x] is None:
                        self.define(alpha, x)
            alpha += 1

    def live_rows(self) -> List[List[int]]:
        """ Compacta las clases vivas (renumeración provisional por orden de creación). """
        live = [c for c in range(len(self.table)) if self.is_live(c)]
        new_index = {c: i for i, c in enumerate(live)}
        rows = []
        for c in live:
            row = self.table[c]
            if any(e is None for e in row):
                raise RuntimeError(f"Coset enumeration finished with an undefined entry in coset {c}.")
            rows.append([new_index[self.rep(e)] for e in row])
        return rows


def coset_enumerate(
    presentation: GroupPresentation,
    subgroup: Sequence[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """
    Tabla completa de las clases de H = <subgroup> en G, colapsada y renumerada por anchura.
    Determinista para entradas fijas.
    Raises:
        ValueError: palabras de subgrupo con generadores fuera de la presentación.
        CapacityExceeded: se definieron `max_cosets` clases sin completar la tabla.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive.")
    for word in subgroup:
        if word.max_generator >= presentation.rank:
            raise ValueError(f"Subgroup word uses generator index {word.max_generator} outside the presentation.")

    enumerator = _Enumerator(presentation, max_cosets)
    relators = [r.letters() for r in presentation.relators]
    enumerator.run(relators, [w.letters() for w in subgroup])
    rows = standardize(enumerator.live_rows())
    table = CosetTable(presentation, rows, tuple(subgroup))
    logger.debug("[x] Coset enumeration: index %d after %d definitions", table.index, len(enumerator.table))

    # Verificación a posteriori de las invariantes de una tabla completa
    if not (table.relators_close() and table.subgroup_closes() and table.involution_consistent()):
        raise RuntimeError("Coset enumeration produced a table that fails the closure checks.")
    return table
