# DOMINIO - permutaciones como tuplas
"""
Una permutación de grado n es una tupla `p` con `p[i]` = imagen de i (base 0).
Acción por la derecha: `compose(p, q)` aplica primero p y luego q, igual que al recorrer
una palabra sobre una tabla de clases laterales.
"""

from math import gcd
from typing import Iterable, List, Mapping, Sequence, Tuple

from profinito.presentations.domain.models import Word

Permutation = Tuple[int, ...]


def identity(degree: int) -> Permutation:
    return tuple(range(degree))


def is_permutation(perm: Sequence[int], degree: int) -> bool:
    return len(perm) == degree and sorted(perm) == list(range(degree))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """ p seguido de q. """
    return tuple(q[i] for i in p)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, image in enumerate(p):
        inv[image] = i
    return tuple(inv)


def power(p: Permutation, exponent: int) -> Permutation:
    """ p^k por cuadrados sucesivos; k puede ser negativo. """
    base = p if exponent >= 0 else inverse(p)
    k = abs(exponent)
    result = identity(len(p))
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycle_lengths(p: Permutation) -> List[int]:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        lengths.append(length)
    return lengths


def order(p: Permutation) -> int:
    """ Orden = mcm de las longitudes de ciclo. """
    result = 1
    for length in cycle_lengths(p):
        result = result * length // gcd(result, length)
    return result


def evaluate_word(word: Word, images: Sequence[Permutation]) -> Permutation:
    """ Imagen de una palabra bajo la asignación generador -> permutación. """
    degree = len(images[0])
    result = identity(degree)
    for generator, exponent in word.syllables:
        result = compose(result, power(images[generator], exponent))
    return result


def satisfies_relators(relators: Iterable[Word], images: Sequence[Permutation]) -> bool:
    """ True si cada relator se evalúa a la identidad. """
    if not images:
        return True
    ident = identity(len(images[0]))
    return all(evaluate_word(r, images) == ident for r in relators)


def one_line(p: Permutation) -> List[int]:
    """ Notación de una línea con puntos 1..n (formato JSON). """
    return [image + 1 for image in p]


def cycle_notation(p: Permutation) -> str:
    """ `(1 2 3)(4 5)`; la identidad es `()`. """
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle, i = [], start
        while not seen[i]:
            seen[i] = True
            cycle.append(str(i + 1))
            i = p[i]
        parts.append("(" + " ".join(cycle) + ")")
    return "".join(parts) or "()"


def from_mapping(mapping: Mapping[int, int], degree: int) -> Permutation:
    return tuple(mapping.get(i, i) for i in range(degree))
