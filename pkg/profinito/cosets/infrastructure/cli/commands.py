# ADAPTADOR PRIMARIO - comando `coset`
import argparse

from profinito.presentations.domain.parser import parse_word_list
from profinito.presentations.infrastructure.cli.arguments import add_group_arguments, presentation_from_args
from profinito.shared.config import Settings
from ...application.queries.enumerate_cosets_query import EnumerateCosetsQuery
from ...application.queries.handlers import handle_enumerate_cosets
from ...domain.models import dump_table
from .schemas import CosetTableResponse


def register(subparsers, settings: Settings) -> None:
    """ Registra el subcomando `coset`. """
    parser = subparsers.add_parser("coset", help="Todd-Coxeter coset enumeration.")
    add_group_arguments(parser)
    parser.add_argument("--subgroup", default="", help='Subgroup generators "w1; w2" (empty = trivial).')
    parser.add_argument("--max-cosets", type=int, default=settings.max_cosets)
    parser.add_argument("--json", action="store_true", help="Emit JSON.")
    parser.set_defaults(handler=cmd_coset)


def cmd_coset(args: argparse.Namespace, settings: Settings) -> int:
    """ Enumera las clases del subgrupo pedido e imprime índice y tabla. """
    presentation = presentation_from_args(args)
    subgroup = tuple(parse_word_list(args.subgroup, presentation.generators))
    table = handle_enumerate_cosets(EnumerateCosetsQuery(presentation, subgroup, args.max_cosets))

    if args.json:
        print(CosetTableResponse.from_table(table).json(indent=2))
    else:
        print(f"index {table.index}")
        print(dump_table(table))
    return 0
