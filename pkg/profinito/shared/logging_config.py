# profinito/shared/logging_config.py
""" Configuración única del logging de la aplicación (stderr, formato corto). """

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """
    Configura el logger raíz del paquete.
    Los reportes y el JSON van por stdout; el log siempre por stderr.
    """
    root = logging.getLogger("profinito")
    root.setLevel(level.upper())
    if not any(getattr(h, "_profinito", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._profinito = True  # type: ignore[attr-defined]
        root.addHandler(handler)
    root.propagate = False
