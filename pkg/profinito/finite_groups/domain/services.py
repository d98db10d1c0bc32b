# DOMINIO - servicios sobre grupos de permutaciones finitos
"""
Cierre de grupos pequeños por anchura, invariantes de isomorfismo y prueba de isomorfismo
por extensión de homomorfismos desde una sucesión generadora.
"""

import logging
from collections import Counter, deque
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from profinito.abelian.domain.models import AbelianInvariants
from .models import DEFAULT_ORDER_CAP, ISOMORPHISM_ORDER_CAP, GroupOrderCapExceeded, IsoClassKey, PermGroup
from .permutations import Permutation, compose, identity, inverse, order

logger = logging.getLogger(__name__)


def _closure(gens: Sequence[Permutation], degree: int, limit: int) -> Optional[List[Permutation]]:
    """ Elementos de <gens> en orden de descubrimiento; None si se supera `limit`. """
    ident = identity(degree)
    seen = {ident}
    found = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                found.append(y)
                if len(found) > limit:
                    return None
                queue.append(y)
    return found


@lru_cache(maxsize=4096)
def _cached_elements(group: PermGroup, cap: int) -> Tuple[Permutation, ...]:
    found = _closure(group.gens, group.degree, cap)
    if found is None:
        raise GroupOrderCapExceeded(cap)
    return tuple(sorted(found))


def elements(group: PermGroup, cap: int = DEFAULT_ORDER_CAP) -> Tuple[Permutation, ...]:
    """
    Todos los elementos del grupo, ordenados lexicográficamente.
    Raises: GroupOrderCapExceeded si el orden supera `cap`.
    """
    return _cached_elements(group, cap)


def group_order(group: PermGroup, cap: int = DEFAULT_ORDER_CAP) -> int:
    """ Orden del grupo; si supera `cap` devuelve cap + 1 sin lanzar. """
    found = _closure(group.gens, group.degree, cap)
    return cap + 1 if found is None else len(found)


def subgroup_elements(gens: Iterable[Permutation], degree: int) -> FrozenSet[Permutation]:
    found = _closure(tuple(gens), degree, DEFAULT_ORDER_CAP)
    if found is None:
        raise GroupOrderCapExceeded(DEFAULT_ORDER_CAP)
    return frozenset(found)


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """ [x, y] = x^-1 y^-1 x y. """
    return compose(compose(inverse(x), inverse(y)), compose(x, y))


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """ x^g = g^-1 x g. """
    return compose(compose(inverse(g), x), g)


def normal_closure(seeds: Iterable[Permutation], group: PermGroup) -> FrozenSet[Permutation]:
    """ Menor subgrupo normal que contiene `seeds`. """
    gens: List[Permutation] = list(dict.fromkeys(seeds))
    while True:
        sub = subgroup_elements(gens, group.degree)
        missing = [conjugate(s, g) for s in gens for g in group.gens if conjugate(s, g) not in sub]
        if not missing:
            return sub
        gens.extend(dict.fromkeys(missing))


def derived_subgroup(group: PermGroup) -> FrozenSet[Permutation]:
    seeds = [commutator(x, y) for i, x in enumerate(group.gens) for y in group.gens[i + 1:]]
    return normal_closure(seeds or [group.identity], group)


def center(group: PermGroup) -> List[Permutation]:
    return [z for z in elements(group) if all(compose(z, g) == compose(g, z) for g in group.gens)]


def conjugacy_class_sizes(group: PermGroup) -> Tuple[int, ...]:
    """ Tamaños de las clases de conjugación, ordenados ascendentemente. """
    assigned: Set[Permutation] = set()
    sizes = []
    for x in elements(group):
        if x in assigned:
            continue
        orbit = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g in group.gens:
                z = conjugate(y, g)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        assigned |= orbit
        sizes.append(len(orbit))
    return tuple(sorted(sizes))


def _prime_factors(n: int) -> List[int]:
    primes, p = [], 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def invariants_from_orders(orders: Sequence[int]) -> AbelianInvariants:
    """
    Invariantes de un grupo abeliano finito a partir del orden de cada uno de sus elementos.

    Si a_k = log_p #{x : x^(p^k) = 1}, hay a_k - a_(k-1) factores cíclicos de exponente >= p^k.
    """
    divisors: List[int] = []
    for p in _prime_factors(len(orders)):
        logs = [0]
        k = 1
        while True:
            count = sum(1 for o in orders if (p ** k) % o == 0)
            a_k, power_of_p = 0, 1
            while power_of_p < count:
                power_of_p *= p
                a_k += 1
            logs.append(a_k)
            if count == sum(1 for o in orders if _is_power_of(o, p)):
                break
            k += 1
        at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))] + [0]
        for i in range(len(at_least) - 1):
            divisors.extend([p ** (i + 1)] * (at_least[i] - at_least[i + 1]))
    return AbelianInvariants.from_elementary_divisors(divisors)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def abelianization_invariants(group: PermGroup) -> AbelianInvariants:
    """ Invariantes de G/G' calculados sobre las clases del derivado. """
    derived = derived_subgroup(group)
    coset_of: Dict[Permutation, int] = {}
    reps: List[Permutation] = []
    for x in elements(group):
        if x in coset_of:
            continue
        index = len(reps)
        reps.append(x)
        for d in derived:
            coset_of[compose(x, d)] = index
    identity_coset = coset_of[group.identity]
    orders = []
    for x in reps:
        k, y = 1, x
        while coset_of[y] != identity_coset:
            y = compose(y, x)
            k += 1
        orders.append(k)
    return invariants_from_orders(orders)


@lru_cache(maxsize=4096)
def iso_key(group: PermGroup) -> IsoClassKey:
    elems = elements(group)
    histogram = Counter(order(x) for x in elems)
    return IsoClassKey(
        order=len(elems),
        element_order_histogram=tuple(sorted(histogram.items())),
        abelian_invariants=abelianization_invariants(group),
        center_order=len(center(group)),
        derived_order=len(derived_subgroup(group)),
        conj_class_sizes=conjugacy_class_sizes(group),
    )


def _generating_sequence(group: PermGroup) -> List[Permutation]:
    """ Sucesión generadora voraz: siempre el elemento de mayor orden fuera del subgrupo actual. """
    candidates = sorted(elements(group), key=lambda x: (-order(x), x))
    total = len(candidates)
    sequence: List[Permutation] = []
    generated: FrozenSet[Permutation] = frozenset([group.identity])
    while len(generated) < total:
        pick = next(x for x in candidates if x not in generated)
        sequence.append(pick)
        generated = subgroup_elements(sequence, group.degree)
    return sequence


def _extend(
    phi: Dict[Permutation, Permutation],
    pairs: Sequence[Tuple[Permutation, Permutation]],
) -> Optional[Dict[Permutation, Permutation]]:
    """ Cierra phi por multiplicación a la derecha; None si aparece una inconsistencia. """
    extended = dict(phi)
    queue = deque(extended)
    while queue:
        x = queue.popleft()
        for source, image in pairs:
            y = compose(x, source)
            fy = compose(extended[x], image)
            known = extended.get(y)
            if known is None:
                extended[y] = fy
                queue.append(y)
            elif known != fy:
                return None
    if len(set(extended.values())) != len(extended):
        return None
    return extended


def find_isomorphism(
    g: PermGroup, h: PermGroup, cap: int = ISOMORPHISM_ORDER_CAP
) -> Optional[Dict[Permutation, Permutation]]:
    """
    Isomorfismo explícito g -> h como diccionario de elementos, o None si no son isomorfos.
    Raises: GroupOrderCapExceeded si alguno de los dos supera `cap`.
    """
    try:
        g_elems = elements(g, cap)
        h_elems = elements(h, cap)
    except GroupOrderCapExceeded as e:
        raise GroupOrderCapExceeded(cap, "isomorphism") from e
    if len(g_elems) != len(h_elems) or iso_key(g) != iso_key(h):
        return None

    sequence = _generating_sequence(g)
    by_order: Dict[int, List[Permutation]] = {}
    for y in h_elems:
        by_order.setdefault(order(y), []).append(y)

    def search(depth: int, phi: Dict[Permutation, Permutation]) -> Optional[Dict[Permutation, Permutation]]:
        if depth == len(sequence):
            return phi if len(phi) == len(g_elems) else None
        x = sequence[depth]
        used = set(phi.values())
        for y in by_order.get(order(x), []):
            if y in used:
                continue
            pairs = [(sequence[i], phi[sequence[i]]) for i in range(depth)] + [(x, y)]
            extended = _extend(phi, pairs)
            if extended is not None:
                result = search(depth + 1, extended)
                if result is not None:
                    return result
        return None

    found = search(0, {g.identity: h.identity})
    logger.debug("[.] isomorphism test order=%d result=%s", len(g_elems), found is not None)
    return found


def are_isomorphic(g: PermGroup, h: PermGroup, cap: int = ISOMORPHISM_ORDER_CAP) -> bool:
    return find_isomorphism(g, h, cap) is not None


def describe_group(group: PermGroup) -> str:
    """
    Nombre legible para grupos pequeños conocidos; si no, una descripción por invariantes.

    Solo para reportes. Las etiquetas no abelianas (Dk, Q8, A4, Dic3, S4) se adivinan por
    el orden y el histograma de órdenes de elementos, sin construir un isomorfismo: dos
    grupos con la misma etiqueta no son por ello isomorfos. Para decidirlo usar
    `are_isomorphic` o `find_isomorphism`.
    """
    key = iso_key(group)
    n = key.order
    if key.is_abelian:
        return "1" if n == 1 else str(key.abelian_invariants)
    hist = key.histogram()
    k = n // 2
    if n == 6:
        return "S3"
    if n % 2 == 0 and hist.get(k, 0) > 0 and hist.get(2, 0) == (k if k % 2 else k + 1):
        return f"D{k}"
    if n == 8 and hist.get(2, 0) == 1:
        return "Q8"
    if n == 12 and hist == {1: 1, 2: 3, 3: 8}:
        return "A4"
    if n == 12 and hist.get(4, 0) == 6:
        return "Dic3"
    if n == 24 and hist == {1: 1, 2: 9, 3: 8, 4: 6}:
        return "S4"
    return f"nonabelian group of order {n}"
