# ADAPTADOR PRIMARIO - comando `fingerprint`
import argparse

from profinito.finite_groups.domain.permutations import cycle_notation
from profinito.finite_groups.domain.services import describe_group
from profinito.presentations.domain.parser import format_presentation
from profinito.presentations.infrastructure.cli.arguments import add_group_arguments, presentation_from_args
from profinito.shared.config import Settings
from profinito.shared.di_container import get_branch_executor
from ...application.queries.compute_fingerprint_query import ComputeFingerprintQuery
from ...application.queries.handlers import handle_compute_fingerprint
from .schemas import FingerprintResponse


def register(subparsers, settings: Settings) -> None:
    """ Registra el subcomando `fingerprint`. """
    parser = subparsers.add_parser("fingerprint", help="Finite quotients of order <= K up to isomorphism.")
    add_group_arguments(parser)
    parser.add_argument("--max-order", type=int, default=settings.max_order)
    parser.add_argument("--json", action="store_true", help="Emit JSON.")
    parser.set_defaults(handler=cmd_fingerprint)


def cmd_fingerprint(args: argparse.Namespace, settings: Settings) -> int:
    presentation = presentation_from_args(args)
    query = ComputeFingerprintQuery(presentation, args.max_order, settings.isomorphism_order_cap)
    fingerprint = handle_compute_fingerprint(query, get_branch_executor(settings.threads))

    if args.json:
        print(FingerprintResponse.from_fingerprint(fingerprint).json(indent=2))
        return 0

    print(f"{format_presentation(presentation)}: {len(fingerprint)} class(es) of order <= {args.max_order}")
    for entry in fingerprint.classes:
        images = ", ".join(
            f"{name} -> {cycle_notation(p)}" for name, p in entry.representative.image_map().items()
        )
        print(f"{entry.order}\t{describe_group(entry.representative.group)}\t{images}")
    return 0
