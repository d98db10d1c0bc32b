# CLI
"""
Punto de entrada de la línea de comandos: `python -m profinito.main <comando> ...`.
Solo ensambla los comandos de cada contexto y traduce errores a códigos de salida.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

# COMMANDS
from profinito.abelian.infrastructure.cli import commands as abelian_commands
from profinito.baumslag_solitar.infrastructure.cli import commands as bs_commands
from profinito.cosets.infrastructure.cli import commands as coset_commands
from profinito.fingerprints.infrastructure.cli import commands as fingerprint_commands
from profinito.subgroups.infrastructure.cli import commands as lowindex_commands

from profinito.abelian.domain.models import SmithOverflowError
from profinito.baumslag_solitar.domain.models import NotResiduallyFinite
from profinito.cosets.domain.models import CapacityExceeded
from profinito.finite_groups.domain.models import GroupOrderCapExceeded
from profinito.fingerprints.domain.models import FingerprintCapExceeded
from profinito.presentations.domain.models import InvalidBSParamsError, PresentationError
from profinito.shared.config import Settings
from profinito.shared.di_container import get_settings
from profinito.shared.logging_config import configure_logging
from profinito.subgroups.domain.models import IndexCapExceeded

logger = logging.getLogger("profinito.main")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_NOT_RF = 4
EXIT_CAPACITY = 5
EXIT_INTERNAL = 6

_CAPACITY_ERRORS = (CapacityExceeded, IndexCapExceeded, GroupOrderCapExceeded, FingerprintCapExceeded)

# --- Inclusión de comandos ---
_COMMANDS = (abelian_commands, coset_commands, lowindex_commands, fingerprint_commands, bs_commands)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="profinito",
        description="Finite quotients, coset enumeration and profinite rigidity of Baumslag-Solitar groups.",
    )
    parser.add_argument("--threads", type=int, default=None,
                        help="Worker processes (default: PROFINITO_THREADS or available CPUs).")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (default), ERROR.")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for module in _COMMANDS:
        module.register(subparsers, settings)
    return parser


def _exit_code(error: Exception) -> int:
    if isinstance(error, _CAPACITY_ERRORS):
        return EXIT_CAPACITY
    if isinstance(error, SmithOverflowError):
        return EXIT_OVERFLOW
    if isinstance(error, NotResiduallyFinite):
        return EXIT_NOT_RF
    if isinstance(error, (PresentationError, InvalidBSParamsError, ValueError)):
        return EXIT_USAGE
    return EXIT_INTERNAL


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"error: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    parser = build_parser(settings)
    args = parser.parse_args(argv)

    overrides = {}
    if args.threads is not None:
        overrides["threads"] = args.threads
    if args.log_level is not None:
        overrides["log_level"] = args.log_level
    if overrides:
        try:
            settings = Settings(**{**settings.dict(), **overrides})
        except ValidationError as e:
            parser.error(str(e))
    configure_logging(settings.log_level)

    try:
        return args.handler(args, settings)
    except Exception as e:
        code = _exit_code(e)
        if code == EXIT_INTERNAL:
            logger.exception("[!] Unexpected failure")
        print(f"error: {e}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())


# --- Notas sobre la implementación ---
# 1. Este archivo no contiene lógica de dominio: solo ensambla comandos.
# 2. stdout lleva el reporte o el JSON; errores y log van por stderr.
# 3. Códigos: 0 ok, 1 comparación sin certificado, 2 uso o sintaxis, 3 desbordamiento,
#    4 grupo no residualmente finito, 5 capacidad, 6 error interno.
