# ADAPTADOR PRIMARIO - comando `lowindex`
import argparse

from profinito.presentations.domain.parser import format_presentation, format_word
from profinito.presentations.infrastructure.cli.arguments import add_group_arguments, presentation_from_args
from profinito.shared.config import Settings
from profinito.shared.di_container import get_branch_executor
from ...application.queries.handlers import handle_low_index
from ...application.queries.low_index_query import LowIndexQuery
from ...domain.models import is_normal
from .schemas import LowIndexResponse, SubgroupEntry


def register(subparsers, settings: Settings) -> None:
    """ Registra el subcomando `lowindex`. """
    parser = subparsers.add_parser("lowindex", help="Subgroups of index <= K up to conjugacy.")
    add_group_arguments(parser)
    parser.add_argument("--max-index", type=int, default=settings.max_index)
    parser.add_argument("--json", action="store_true", help="Emit JSON.")
    parser.set_defaults(handler=cmd_lowindex)


def cmd_lowindex(args: argparse.Namespace, settings: Settings) -> int:
    presentation = presentation_from_args(args)
    executor = get_branch_executor(settings.threads)
    tables = handle_low_index(LowIndexQuery(presentation, args.max_index), executor)

    if args.json:
        response = LowIndexResponse(
            presentation=format_presentation(presentation),
            max_index=args.max_index,
            subgroups=[SubgroupEntry.from_table(t) for t in tables],
        )
        print(response.json(indent=2))
        return 0

    print(f"{len(tables)} subgroup(s) of index <= {args.max_index}")
    for number, table in enumerate(tables, start=1):
        gens = ", ".join(format_word(w, presentation.generators) for w in table.subgroup_gens) or "1"
        mark = "normal" if is_normal(table) else "-"
        print(f"{number}\tindex {table.index}\t{mark}\t< {gens} >")
    return 0
