# DOMINIO - certificados de separación
"""
Certifica que dos BS residualmente finitos no isomorfos tienen completaciones distintas:
primero por abelianización y, si coinciden, buscando un cociente finito de uno de ellos que
no lo sea del otro. Todo testigo se puede volver a comprobar con `verify_certificate`.
"""

import logging
from itertools import product
from typing import List, Optional, Tuple

from profinito.abelian.domain.smith import abelianize
from profinito.finite_groups.domain.models import ISOMORPHISM_ORDER_CAP, PermGroup
from profinito.finite_groups.domain.permutations import satisfies_relators
from profinito.finite_groups.domain.services import are_isomorphic, elements, group_order, iso_key
from profinito.fingerprints.domain.models import FingerprintClass
from profinito.fingerprints.domain.services import compute_fingerprint, diff_fingerprints
from profinito.presentations.domain.models import BSParams, bs_presentation
from profinito.subgroups.domain.executors import BranchExecutor
from .models import (
    AbelianWitness,
    Certificate,
    CertificationPreconditionError,
    Inconclusive,
    NonLiftingReport,
    QuotientWitness,
)
from .theory import closed_form_abelianization, profinitely_isomorphic

logger = logging.getLogger(__name__)


def count_assignments(params: BSParams, group: PermGroup) -> Tuple[int, int, int]:
    """
    Recorre todos los pares (a, t) de elementos de `group`.
    Returns: (total, cumplen el relator de BS(m,n), además generan el grupo).
    """
    relators = bs_presentation(params).relators
    elems = elements(group)
    order = len(elems)
    satisfying = generating = 0
    for a, t in product(elems, repeat=2):
        if not satisfies_relators(relators, (a, t)):
            continue
        satisfying += 1
        if group_order(PermGroup(group.degree, (a, t)), cap=order) == order:
            generating += 1
    return order * order, satisfying, generating


def _non_lifting_report(
    absent: BSParams, witness: FingerprintClass, absent_classes: List[FingerprintClass]
) -> NonLiftingReport:
    total, satisfying, generating = count_assignments(absent, witness.representative.group)
    if generating:
        raise RuntimeError(f"Witness of order {witness.order} is a quotient of {absent} after all.")
    return NonLiftingReport(
        absent=absent,
        order=witness.order,
        absent_keys=tuple(c.key for c in absent_classes if c.order == witness.order),
        assignments_total=total,
        assignments_satisfying=satisfying,
        assignments_generating=generating,
    )


def certify_distinction(
    p: BSParams,
    q: BSParams,
    max_order: int,
    executor: Optional[BranchExecutor] = None,
    iso_cap: int = ISOMORPHISM_ORDER_CAP,
) -> Certificate:
    """
    AbelianWitness si las abelianizaciones difieren; si no, el QuotientWitness más pequeño
    (por orden y clave) entre los cocientes de orden <= max_order; Inconclusive si no hay.
    Raises:
        NotResiduallyFinite: alguno de los grupos no es residualmente finito.
        CertificationPreconditionError: los grupos son profinitamente isomorfos.
    """
    if profinitely_isomorphic(p, q):
        raise CertificationPreconditionError(f"{p} and {q} are profinitely isomorphic; nothing to certify.")

    first_ab, second_ab = closed_form_abelianization(p), closed_form_abelianization(q)
    if first_ab != second_ab:
        logger.info("[x] %s and %s separated by abelianization: %s vs %s", p, q, first_ab, second_ab)
        return AbelianWitness(first_ab, second_ab)

    first = compute_fingerprint(bs_presentation(p), max_order, executor, iso_cap)
    second = compute_fingerprint(bs_presentation(q), max_order, executor, iso_cap)
    diff = diff_fingerprints(first, second, iso_cap)
    candidates = [(c, p, q, second) for c in diff.only_first] + [(c, q, p, first) for c in diff.only_second]
    if not candidates:
        logger.info("[!] No separating quotient of order <= %d for %s vs %s", max_order, p, q)
        return Inconclusive(max_order)

    witness, present, absent, absent_fp = min(candidates, key=lambda item: item[0].sort_key())
    report = _non_lifting_report(absent, witness, list(absent_fp.classes))
    logger.info("[x] Quotient witness of order %d: in %s, not in %s", witness.order, present, absent)
    return QuotientWitness(present, absent, witness.representative, witness.key, report)


def verify_certificate(
    certificate: Certificate,
    p: BSParams,
    q: BSParams,
    executor: Optional[BranchExecutor] = None,
    iso_cap: int = ISOMORPHISM_ORDER_CAP,
) -> bool:
    """
    Vuelve a comprobar un certificado por caminos independientes de los que lo produjeron.
    Un Inconclusive se acepta si de verdad no hay diferencias hasta su orden máximo.
    """
    if isinstance(certificate, AbelianWitness):
        computed = (abelianize(bs_presentation(p)), abelianize(bs_presentation(q)))
        closed = (closed_form_abelianization(p), closed_form_abelianization(q))
        expected = (certificate.first, certificate.second)
        return computed == closed == expected and certificate.first != certificate.second

    if isinstance(certificate, QuotientWitness):
        if {certificate.present, certificate.absent} != {p, q}:
            return False
        quotient = certificate.quotient
        if quotient.source_table.presentation != bs_presentation(certificate.present):
            return False
        if not satisfies_relators(quotient.source_table.presentation.relators, quotient.gen_images):
            return False
        order = quotient.order
        present_fp = compute_fingerprint(bs_presentation(certificate.present), order, executor, iso_cap)
        absent_fp = compute_fingerprint(bs_presentation(certificate.absent), order, executor, iso_cap)

        def contains(classes) -> bool:
            return any(
                c.key == certificate.key and are_isomorphic(c.representative.group, quotient.group, iso_cap)
                for c in classes
            )

        _, _, generating = count_assignments(certificate.absent, quotient.group)
        return (
            iso_key(quotient.group) == certificate.key
            and contains(present_fp.classes)
            and not contains(absent_fp.classes)
            and generating == 0
        )

    if isinstance(certificate, Inconclusive):
        first = compute_fingerprint(bs_presentation(p), certificate.max_order, executor, iso_cap)
        second = compute_fingerprint(bs_presentation(q), certificate.max_order, executor, iso_cap)
        return diff_fingerprints(first, second, iso_cap).is_empty

    raise TypeError(f"Unknown certificate type {type(certificate).__name__}.")
