# tests/cosets/domain/test_enumeration.py
"""
Pruebas de la enumeración de Todd-Coxeter y de los servicios sobre tablas completas.
"""
import pytest

from profinito.cosets.domain.enumeration import coset_enumerate
from profinito.cosets.domain.models import (
    CapacityExceeded,
    CosetTable,
    IncompleteTableError,
    dump_table,
    permutation_action,
    schreier_generators,
)
from profinito.finite_groups.domain.permutations import cycle_lengths, satisfies_relators
from profinito.presentations.domain.models import Word
from profinito.presentations.domain.parser import parse_word


def test_cyclic_group_of_order_five(cyclic5):
    """< a | a^5 >, subgrupo trivial: 5 clases."""
    table = coset_enumerate(cyclic5, (), max_cosets=100)
    assert table.is_complete
    assert table.index == 5
    # Numeración por anchura desde la clase 0
    assert table.rows == ((1, 2), (3, 0), (0, 4), (4, 1), (2, 3))


def test_s3_has_six_cosets(s3_presentation):
    table = coset_enumerate(s3_presentation, (), max_cosets=100)
    assert table.index == 6


def test_bs12_index_two_subgroup(bs):
    """BS(1,2) con H = <a, t^2>: el núcleo de t -> 1 en Z2."""
    pres = bs(1, 2)
    subgroup = (parse_word("a", pres.generators), parse_word("t^2", pres.generators))
    table = coset_enumerate(pres, subgroup, max_cosets=1000)
    assert table.index == 2
    a_perm, t_perm = permutation_action(table)
    assert a_perm == (0, 1)
    assert t_perm == (1, 0)


def test_subgroup_closure_and_relator_closure(s3_presentation):
    subgroup = (parse_word("a", s3_presentation.generators),)
    table = coset_enumerate(s3_presentation, subgroup)
    assert table.index == 3
    assert table.relators_close()
    assert table.subgroup_closes()
    assert table.involution_consistent()


def test_whole_group_gives_one_coset(s3_presentation):
    gens = s3_presentation.generators
    table = coset_enumerate(s3_presentation, (parse_word("a", gens), parse_word("b", gens)))
    assert table.index == 1
    assert permutation_action(table) == [(0,), (0,)]


def test_capacity_exceeded_on_free_group(free2):
    """El índice del subgrupo trivial en un grupo libre es infinito: se agota la capacidad."""
    with pytest.raises(CapacityExceeded) as exc_info:
        coset_enumerate(free2, (), max_cosets=10)
    assert exc_info.value.max_cosets == 10
    assert "index unknown" in str(exc_info.value)


def test_index_is_stable_once_capacity_suffices(s3_presentation):
    assert {coset_enumerate(s3_presentation, (), m).index for m in (50, 500, 5000)} == {6}


def test_invalid_subgroup_word(cyclic5):
    with pytest.raises(ValueError):
        coset_enumerate(cyclic5, (Word(((1, 1),)),))


def test_enumeration_is_deterministic(s3_presentation):
    subgroup = (parse_word("b", s3_presentation.generators),)
    assert coset_enumerate(s3_presentation, subgroup) == coset_enumerate(s3_presentation, subgroup)


# --- Servicios sobre tablas ---

def test_permutation_action_satisfies_relators(s3_presentation):
    table = coset_enumerate(s3_presentation, ())
    perms = permutation_action(table)
    assert satisfies_relators(s3_presentation.relators, perms)
    assert all(sorted(p) == list(range(6)) for p in perms)


def test_cyclic_action_is_a_five_cycle(cyclic5):
    (a_perm,) = permutation_action(coset_enumerate(cyclic5, ()))
    assert cycle_lengths(a_perm) == [5]


def test_permutation_action_requires_complete_table(cyclic5):
    partial = CosetTable(cyclic5, ((None, None),))
    with pytest.raises(IncompleteTableError):
        permutation_action(partial)


def test_schreier_generators_generate_the_kernel(bs):
    """Los generadores de Schreier de <a, t^2> en BS(1,2) fijan la clase 0 y cubren a y t^2."""
    pres = bs(1, 2)
    gens = pres.generators
    table = coset_enumerate(pres, (parse_word("a", gens), parse_word("t^2", gens)))
    schreier = schreier_generators(table)
    assert all(table.trace(0, word) == 0 for word in schreier)
    assert parse_word("t^2", gens) in schreier
    assert parse_word("a", gens) in schreier


def test_dump_table(cyclic5):
    table = coset_enumerate(cyclic5, ())
    assert dump_table(table).splitlines()[0] == "2\t3"
    assert len(dump_table(table).splitlines()) == 5


def test_trace_stops_at_undefined_entry(cyclic5):
    partial = CosetTable(cyclic5, ((0, None),))
    assert partial.trace(0, Word(((0, 3),))) == 0
    assert partial.trace(0, Word(((0, -1),))) is None
