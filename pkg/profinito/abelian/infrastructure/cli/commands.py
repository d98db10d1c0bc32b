# ADAPTADOR PRIMARIO - comando `abelianize`
import argparse

from profinito.presentations.infrastructure.cli.arguments import add_group_arguments, presentation_from_args
from profinito.shared.config import Settings
from ...application.queries.abelianize_query import AbelianizeQuery
from ...application.queries.handlers import handle_abelianize
from .schemas import AbelianInvariantsResponse


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("abelianize", help="Abelianization via Smith normal form.")
    add_group_arguments(parser)
    parser.add_argument("--json", action="store_true", help="Emit JSON.")
    parser.set_defaults(handler=cmd_abelianize)


def cmd_abelianize(args: argparse.Namespace, settings: Settings) -> int:
    """ Imprime G^ab: `Z x Z4`, `Z^2`, `Z6`... """
    presentation = presentation_from_args(args)
    invariants = handle_abelianize(AbelianizeQuery(presentation, settings.snf_max_bits))
    if args.json:
        print(AbelianInvariantsResponse.from_invariants(invariants).json(indent=2))
    else:
        print(invariants)
    return 0
