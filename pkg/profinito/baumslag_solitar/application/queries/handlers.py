# QUERY HANDLER SERVICE
import logging

from profinito.finite_groups.domain.models import GroupOrderCapExceeded
from profinito.fingerprints.domain.models import FingerprintCapExceeded
from profinito.subgroups.domain.executors import BranchExecutor
from .compare_groups_query import CompareGroupsQuery
from ...domain.certification import certify_distinction
from ...domain.models import Comparison, NotResiduallyFinite
from ...domain.theory import decision_route, family, profinitely_isomorphic

logger = logging.getLogger(__name__)


def handle_compare_groups(query: CompareGroupsQuery, executor: BranchExecutor) -> Comparison:
    """
    Handler para CompareGroupsQuery.
    Decide con la teoría y, si los grupos son distintos, busca un certificado.
    Raises:
        NotResiduallyFinite: alguno de los dos grupos queda fuera de la clase.
        FingerprintCapExceeded / GroupOrderCapExceeded: límites de la búsqueda.
        RuntimeError: fallo interno.
    """
    p, q = query.first, query.second
    logger.info("[.] Comparing %s and %s (max_order=%d)", p, q, query.max_order)
    try:
        decided = profinitely_isomorphic(p, q)
        certificate = None
        if not decided:
            certificate = certify_distinction(p, q, query.max_order, executor, query.iso_cap)
        return Comparison(
            first=p,
            second=q,
            first_family=family(p),
            second_family=family(q),
            route=decision_route(p, q),
            profinitely_isomorphic=decided,
            certificate=certificate,
        )
    except (NotResiduallyFinite, FingerprintCapExceeded, GroupOrderCapExceeded, ValueError):
        raise
    except Exception as e:
        raise RuntimeError(f"Comparison of {p} and {q} failed: {e}") from e
