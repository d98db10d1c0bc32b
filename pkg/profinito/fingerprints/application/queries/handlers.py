# QUERY HANDLER SERVICE
import logging

from profinito.finite_groups.domain.models import GroupOrderCapExceeded
from profinito.subgroups.domain.executors import BranchExecutor
from .compute_fingerprint_query import ComputeFingerprintQuery
from ...domain.models import Fingerprint, FingerprintCapExceeded
from ...domain.services import compute_fingerprint

logger = logging.getLogger(__name__)


def handle_compute_fingerprint(query: ComputeFingerprintQuery, executor: BranchExecutor) -> Fingerprint:
    """
    Handler para ComputeFingerprintQuery.
    Raises:
        FingerprintCapExceeded / GroupOrderCapExceeded: límites superados.
        RuntimeError: fallo interno.
    """
    logger.info("[.] Computing fingerprint up to order %d", query.max_order)
    try:
        return compute_fingerprint(query.presentation, query.max_order, executor, query.iso_cap)
    except (FingerprintCapExceeded, GroupOrderCapExceeded, ValueError):
        raise
    except Exception as e:
        raise RuntimeError(f"Fingerprint computation failed: {e}") from e
