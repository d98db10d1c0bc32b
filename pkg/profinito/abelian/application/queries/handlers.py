# QUERY HANDLER SERVICE
from .abelianize_query import AbelianizeQuery
from ...domain.models import AbelianInvariants, SmithOverflowError
from ...domain.smith import abelianize


def handle_abelianize(query: AbelianizeQuery) -> AbelianInvariants:
    """
    Handler para AbelianizeQuery.
    Raises:
        SmithOverflowError: solo con aritmética de ancho fijo (max_bits > 0).
        RuntimeError: cualquier otro fallo interno.
    """
    try:
        return abelianize(query.presentation, query.max_bits)
    except SmithOverflowError:
        raise
    except Exception as e:
        raise RuntimeError(f"Error computing the abelianization: {e}") from e
