# ADAPTADOR PRIMARIO - comando `compare`
import argparse

from profinito.finite_groups.domain.permutations import cycle_notation
from profinito.finite_groups.domain.services import describe_group
from profinito.presentations.domain.models import BSParams
from profinito.shared.config import Settings
from profinito.shared.di_container import get_branch_executor
from ...application.queries.compare_groups_query import CompareGroupsQuery
from ...application.queries.handlers import handle_compare_groups
from ...domain.models import AbelianWitness, Comparison, Inconclusive, QuotientWitness
from .schemas import CompareResponse

EXIT_INCONCLUSIVE = 1


def register(subparsers, settings: Settings) -> None:
    """ Registra el subcomando `compare`. """
    parser = subparsers.add_parser("compare", help="Decide profinite isomorphism of two BS groups.")
    parser.add_argument("--bs", nargs=2, type=int, action="append", metavar=("M", "N"), required=True,
                        help="Baumslag-Solitar parameters; give exactly twice.")
    parser.add_argument("--max-order", type=int, default=settings.max_order)
    parser.add_argument("--json", action="store_true", help="Emit JSON.")
    parser.set_defaults(handler=cmd_compare)


def _describe_certificate(comparison: Comparison) -> str:
    cert = comparison.certificate
    if isinstance(cert, AbelianWitness):
        return f"abelian witness: {cert.first} vs {cert.second}"
    if isinstance(cert, QuotientWitness):
        names = cert.quotient.generator_names
        images = ", ".join(f"{n} -> {cycle_notation(p)}" for n, p in zip(names, cert.quotient.gen_images))
        report = cert.report
        return (
            f"quotient witness of order {cert.order} ({describe_group(cert.quotient.group)}) "
            f"of {cert.present}, not of {cert.absent} [{images}]; "
            f"{report.assignments_total} assignments in {cert.absent}: "
            f"{report.assignments_satisfying} satisfy the relator, {report.assignments_generating} generate"
        )
    if isinstance(cert, Inconclusive):
        return f"inconclusive: no separating quotient of order <= {cert.max_order}"
    return "isomorphic groups"


def cmd_compare(args: argparse.Namespace, settings: Settings) -> int:
    if len(args.bs) != 2:
        raise ValueError("compare needs --bs exactly twice.")
    p, q = (BSParams(m, n) for m, n in args.bs)
    query = CompareGroupsQuery(p, q, args.max_order, settings.isomorphism_order_cap)
    comparison = handle_compare_groups(query, get_branch_executor(settings.threads))

    if args.json:
        print(CompareResponse.from_comparison(comparison).json(indent=2))
    else:
        verdict = "yes" if comparison.profinitely_isomorphic else "no"
        print(f"{p} vs {q}: profinitely isomorphic: {verdict}")
        print(f"families: {comparison.first_family.value} / {comparison.second_family.value}; "
              f"route: {comparison.route.value}")
        print(_describe_certificate(comparison))
    return EXIT_INCONCLUSIVE if isinstance(comparison.certificate, Inconclusive) else 0
