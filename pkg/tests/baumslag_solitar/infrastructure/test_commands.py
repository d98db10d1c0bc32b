# tests/baumslag_solitar/infrastructure/test_commands.py
"""
Pruebas del comando `compare` y de sus códigos de salida.
"""
import json

import pytest

from profinito.baumslag_solitar.application.queries.compare_groups_query import CompareGroupsQuery
from profinito.baumslag_solitar.application.queries.handlers import handle_compare_groups
from profinito.baumslag_solitar.infrastructure.cli.commands import EXIT_INCONCLUSIVE
from profinito.baumslag_solitar.infrastructure.cli.schemas import CompareResponse
from profinito.main import EXIT_NOT_RF, EXIT_USAGE, main
from profinito.presentations.domain.models import BSParams
from profinito.subgroups.infrastructure.parallel.executors import SequentialBranchExecutor


def test_isomorphic_pair(capsys):
    code = main(["compare", "--bs", "1", "2", "--bs", "2", "1"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0] == "BS(1,2) vs BS(2,1): profinitely isomorphic: yes"
    assert lines[1] == "families: SOLVABLE / SOLVABLE; route: ISOMORPHIC"
    assert lines[2] == "isomorphic groups"


def test_abelian_witness(capsys):
    code = main(["compare", "--bs", "2", "2", "--bs", "2", "-2"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0].endswith("profinitely isomorphic: no")
    assert lines[2] == "abelian witness: Z^2 vs Z x Z4"


def test_quotient_witness_json(capsys):
    code = main(["--threads", "1", "compare", "--bs", "1", "-1", "--bs", "1", "3", "--max-order", "6", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["route"] == "ONE_RELATOR"
    certificate = payload["certificate"]
    assert certificate["kind"] == "quotient"
    assert certificate["label"] == "S3"
    assert (certificate["present"], certificate["absent"]) == ("BS(1,-1)", "BS(1,3)")
    assert certificate["non_lifting"]["assignments_total"] == 36
    assert certificate["non_lifting"]["assignments_generating"] == 0


@pytest.mark.parametrize(
    "first, second, max_order",
    [
        ((1, 2), (2, 1), 6),     # isomorfos, sin certificado
        ((2, 2), (2, -2), 6),    # testigo abeliano
        ((1, -1), (1, 3), 6),    # testigo cociente
        ((2, 2), (3, 3), 4),     # inconcluso
    ],
)
def test_compare_json_round_trips_through_schema(capsys, first, second, max_order):
    # 1. Arrange
    query = CompareGroupsQuery(BSParams(*first), BSParams(*second), max_order)
    comparison = handle_compare_groups(query, SequentialBranchExecutor())
    argv = ["--bs", *map(str, first), "--bs", *map(str, second), "--max-order", str(max_order), "--json"]

    # 2. Act
    main(["--threads", "1", "compare", *argv])
    response = CompareResponse.parse_raw(capsys.readouterr().out)

    # 3. Assert
    assert response == CompareResponse.from_comparison(comparison)


def test_inconclusive_exit_code(capsys):
    code = main(["--threads", "1", "compare", "--bs", "2", "2", "--bs", "3", "3", "--max-order", "4"])
    assert code == EXIT_INCONCLUSIVE
    assert "inconclusive" in capsys.readouterr().out


def test_not_residually_finite_exit_code(capsys):
    code = main(["compare", "--bs", "2", "3", "--bs", "1", "2"])
    assert code == EXIT_NOT_RF
    assert "BS(2,3) is not residually finite" in capsys.readouterr().err


def test_compare_needs_two_groups(capsys):
    assert main(["compare", "--bs", "1", "2"]) == EXIT_USAGE


def test_zero_parameter_is_a_usage_error(capsys):
    assert main(["compare", "--bs", "0", "2", "--bs", "1", "2"]) == EXIT_USAGE


def test_missing_arguments_exit_through_argparse():
    with pytest.raises(SystemExit) as excinfo:
        main(["compare"])
    assert excinfo.value.code == EXIT_USAGE
