# ADAPTADOR PRIMARIO - argumentos comunes de la CLI
"""
Argumentos `--bs M N | --pres TEXT` compartidos por los comandos que reciben un grupo.
"""

import argparse

from ...application.queries.resolve_presentation_query import ResolvePresentationQuery
from ...application.queries.handlers import handle_resolve_presentation
from ...domain.models import GroupPresentation


def add_group_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    """ Agrega el grupo mutuamente excluyente `--bs` / `--pres`. """
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--bs", nargs=2, type=int, metavar=("M", "N"),
                       help="Baumslag-Solitar group BS(M,N).")
    group.add_argument("--pres", metavar="TEXT",
                       help='Presentation text, e.g. "< a, t | t a^2 t^-1 a^-2 >".')


def presentation_from_args(args: argparse.Namespace) -> GroupPresentation:
    """ Resuelve la presentación pedida en la línea de comandos. """
    query = ResolvePresentationQuery(
        bs=tuple(args.bs) if getattr(args, "bs", None) else None,
        text=getattr(args, "pres", None),
    )
    return handle_resolve_presentation(query)
