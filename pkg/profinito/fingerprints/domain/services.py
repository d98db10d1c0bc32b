# DOMINIO - cálculo y comparación de huellas
import logging
from typing import List, Optional

from profinito.finite_groups.domain.models import ISOMORPHISM_ORDER_CAP, FiniteQuotient
from profinito.finite_groups.domain.services import are_isomorphic, iso_key
from profinito.presentations.domain.models import GroupPresentation
from profinito.subgroups.domain.executors import BranchExecutor
from profinito.subgroups.domain.lowindex import low_index_subgroups
from profinito.subgroups.domain.models import is_normal
from .models import (
    HARD_MAX_ORDER,
    Fingerprint,
    FingerprintCapExceeded,
    FingerprintClass,
    FingerprintDiff,
    FingerprintMismatchError,
)

logger = logging.getLogger(__name__)


def _same_class(first: FingerprintClass, second: FingerprintClass, iso_cap: int) -> bool:
    """ La clave es solo un filtro; la igualdad se certifica con un isomorfismo explícito. """
    return first.key == second.key and are_isomorphic(
        first.representative.group, second.representative.group, iso_cap
    )


def compute_fingerprint(
    presentation: GroupPresentation,
    max_order: int,
    executor: Optional[BranchExecutor] = None,
    iso_cap: int = ISOMORPHISM_ORDER_CAP,
) -> Fingerprint:
    """
    Clases de isomorfismo de los cocientes G/K con K normal de índice <= max_order.

    Cada cociente de orden n actúa regularmente sobre sus n elementos, así que basta con
    quedarse con las tablas normales de la búsqueda de índice bajo.
    Raises:
        ValueError: max_order < 1.
        FingerprintCapExceeded: max_order por encima del límite.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1.")
    if max_order > HARD_MAX_ORDER:
        raise FingerprintCapExceeded(max_order)

    tables = low_index_subgroups(presentation, max_order, executor)
    classes: List[FingerprintClass] = []
    normal_count = 0
    for table in tables:
        if not is_normal(table):
            continue
        normal_count += 1
        quotient = FiniteQuotient.from_table(table)
        candidate = FingerprintClass(iso_key(quotient.group), quotient)
        if not any(_same_class(existing, candidate, iso_cap) for existing in classes):
            classes.append(candidate)

    classes.sort(key=lambda c: c.sort_key())
    logger.info("[x] %d normal subgroup(s) of index <= %d, %d isomorphism class(es)",
                normal_count, max_order, len(classes))
    return Fingerprint(presentation, max_order, tuple(classes))


def diff_fingerprints(
    first: Fingerprint, second: Fingerprint, iso_cap: int = ISOMORPHISM_ORDER_CAP
) -> FingerprintDiff:
    """
    Clases exclusivas de cada huella y número de clases comunes.
    Raises: FingerprintMismatchError si los órdenes máximos difieren.
    """
    if first.max_order != second.max_order:
        raise FingerprintMismatchError(
            f"Cannot diff fingerprints with max_order {first.max_order} and {second.max_order}."
        )
    matched = set()
    only_first = []
    for entry in first.classes:
        for i, other in enumerate(second.classes):
            if i not in matched and _same_class(entry, other, iso_cap):
                matched.add(i)
                break
        else:
            only_first.append(entry)
    only_second = [c for i, c in enumerate(second.classes) if i not in matched]
    return FingerprintDiff(tuple(only_first), tuple(only_second), len(matched))
