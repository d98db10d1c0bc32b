# QUERY HANDLER SERVICE
import logging

from .resolve_presentation_query import ResolvePresentationQuery
from ...domain.models import BSParams, GroupPresentation, bs_presentation
from ...domain.parser import parse_presentation

logger = logging.getLogger(__name__)


def handle_resolve_presentation(query: ResolvePresentationQuery) -> GroupPresentation:
    """
    Handler para ResolvePresentationQuery.
    Returns: GroupPresentation lista para los demás contextos.
    Raises:
        ValueError: entrada ambigua/ausente o presentación inválida (PresentationError).
    """
    if (query.bs is None) == (query.text is None):
        raise ValueError("Exactly one of a BS pair or a presentation text is required.")

    if query.bs is not None:
        params = BSParams(*query.bs)
        logger.debug("[.] Building presentation of %s", params)
        return bs_presentation(params)

    return parse_presentation(query.text)
