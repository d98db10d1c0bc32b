# tests/cosets/infrastructure/test_commands.py
"""
Pruebas del comando `coset` a través del punto de entrada de la CLI.
"""
import json

import pytest

from profinito.cosets.domain.enumeration import coset_enumerate
from profinito.cosets.infrastructure.cli.schemas import CosetTableResponse
from profinito.main import EXIT_CAPACITY, EXIT_USAGE, main
from profinito.presentations.domain.models import BSParams, bs_presentation
from profinito.presentations.domain.parser import parse_presentation, parse_word_list


def test_coset_text_output(capsys):
    code = main(["--threads", "1", "coset", "--pres", "<a|a^5>", "--subgroup", "", "--max-cosets", "10"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "index 5"


def test_coset_json_output(capsys):
    code = main(["--threads", "1", "coset", "--pres", "<a|a^5>", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["index"] == 5
    assert payload["rows"] == [[2, 3], [4, 1], [1, 5], [5, 2], [3, 4]]
    assert payload["permutations"] == [[2, 4, 1, 5, 3]]


def test_coset_with_subgroup(capsys):
    code = main(["coset", "--bs", "1", "2", "--subgroup", "a; t^2", "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["index"] == 2


@pytest.mark.parametrize(
    "argv, presentation, subgroup",
    [
        (["--pres", "<a|a^5>"], parse_presentation("<a|a^5>"), ""),
        (["--pres", "< a, b | a^2, b^3, abab >"], parse_presentation("< a, b | a^2, b^3, abab >"), "b"),
        (["--bs", "1", "2"], bs_presentation(BSParams(1, 2)), "a; t^2"),
    ],
)
def test_coset_json_round_trips_through_schema(capsys, argv, presentation, subgroup):
    # 1. Arrange
    table = coset_enumerate(presentation, parse_word_list(subgroup, presentation.generators))

    # 2. Act
    code = main(["--threads", "1", "coset", *argv, "--subgroup", subgroup, "--json"])
    response = CosetTableResponse.parse_raw(capsys.readouterr().out)

    # 3. Assert
    assert code == 0
    assert response == CosetTableResponse.from_table(table)


def test_coset_capacity_exit_code(capsys):
    code = main(["coset", "--pres", "<a, t | >", "--max-cosets", "10"])
    assert code == EXIT_CAPACITY
    assert "index unknown" in capsys.readouterr().err


def test_coset_parse_error_exit_code(capsys):
    code = main(["coset", "--pres", "<a | a^0>"])
    assert code == EXIT_USAGE
