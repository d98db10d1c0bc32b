# tests/subgroups/domain/test_lowindex.py
"""
Pruebas de la búsqueda de subgrupos de índice bajo.

Oráculo por fuerza bruta: el número de subgrupos de índice n es el número de acciones
transitivas de G sobre {0..n-1} dividido por (n-1)!. Cada tabla de la salida aporta el
tamaño de su clase de conjugación, n / #{c : renumerar desde c deja la tabla igual}.
"""
from collections import Counter
from itertools import permutations, product
from math import factorial

import pytest

from profinito.cosets.domain.models import CosetTable, IncompleteTableError, standardize
from profinito.finite_groups.domain.permutations import satisfies_relators
from profinito.presentations.domain.parser import format_word, parse_presentation
from profinito.subgroups.domain.lowindex import low_index_subgroups
from profinito.subgroups.domain.models import HARD_MAX_INDEX, IndexCapExceeded, is_normal
from profinito.subgroups.infrastructure.parallel.executors import (
    ProcessBranchExecutor,
    SequentialBranchExecutor,
)


def _transitive(images, n):
    seen, stack = {0}, [0]
    while stack:
        point = stack.pop()
        for p in images:
            if p[point] not in seen:
                seen.add(p[point])
                stack.append(p[point])
    return len(seen) == n


def subgroup_counts_by_brute_force(presentation, max_index):
    counts = Counter()
    for n in range(1, max_index + 1):
        actions = 0
        for images in product(permutations(range(n)), repeat=presentation.rank):
            if satisfies_relators(presentation.relators, images) and _transitive(images, n):
                actions += 1
        counts[n] = actions // factorial(n - 1)
    return counts


def subgroup_counts_from_tables(tables):
    counts = Counter()
    for table in tables:
        n = table.index
        fixed = sum(1 for c in range(n) if standardize(table.rows, c) == table.rows)
        counts[n] += n // fixed
    return counts


# --- Conteos conocidos ---

@pytest.mark.parametrize(
    "text, max_index, expected",
    [
        ("< a, t | >", 1, 1),
        ("< a, t | >", 2, 4),
        ("< a, t | >", 3, 11),
        ("< a | >", 5, 5),
        ("< a | a^5 >", 5, 2),
        ("< a, b | a^2, b^3, abab >", 3, 3),
        ("< a, b | a^2, b^3, abab >", 6, 4),
    ],
)
def test_known_class_counts(text, max_index, expected):
    assert len(low_index_subgroups(parse_presentation(text), max_index)) == expected


def test_bs_examples(bs):
    assert len(low_index_subgroups(bs(2, 2), 2)) == 4
    assert len(low_index_subgroups(bs(1, 2), 2)) == 2


def test_index_two_count_matches_mod_two_homology(bs):
    """Los subgrupos de índice 2 son 2^s - 1, con s = dim H1(G; F2)."""
    for (m, n), s in {(2, 2): 2, (1, 2): 1, (2, 3): 1, (3, 3): 2, (1, -1): 2}.items():
        tables = low_index_subgroups(bs(m, n), 2)
        assert sum(1 for t in tables if t.index == 2) == 2 ** s - 1


@pytest.mark.parametrize(
    "text, max_index",
    [
        ("< a, b | a^2, b^3, abab >", 4),
        ("< a, t | t a^2 t^-1 a^-2 >", 4),
        ("< a, t | t a t^-1 a^-2 >", 4),
        ("< a, t | t a t^-1 a >", 4),
        ("< a, t | >", 3),
    ],
)
def test_subgroup_counts_against_brute_force(text, max_index):
    presentation = parse_presentation(text)
    tables = low_index_subgroups(presentation, max_index)
    assert subgroup_counts_from_tables(tables) == subgroup_counts_by_brute_force(presentation, max_index)


# --- Propiedades de la salida ---

def test_tables_are_complete_canonical_and_sorted(bs):
    tables = low_index_subgroups(bs(2, 2), 4)
    assert [t.sort_key() for t in tables] == sorted(t.sort_key() for t in tables)
    for table in tables:
        assert table.is_complete
        assert table.relators_close()
        assert standardize(table.rows) == table.rows
        # Ninguna otra renumeración es menor: representante mínimo de su clase
        assert all(standardize(table.rows, c) >= table.rows for c in range(table.index))


def test_first_table_is_the_whole_group(bs):
    whole = low_index_subgroups(bs(1, 2), 3)[0]
    assert whole.index == 1
    assert [format_word(w, ("a", "t")) for w in whole.subgroup_gens] == ["a", "t"]


def test_schreier_generators_generate_the_subgroup(bs):
    """Las clases de <generadores de Schreier> reproducen la misma tabla."""
    from profinito.cosets.domain.enumeration import coset_enumerate

    presentation = bs(1, 2)
    for table in low_index_subgroups(presentation, 3):
        again = coset_enumerate(presentation, table.subgroup_gens, max_cosets=1000)
        assert again.rows == table.rows


def test_normality(s3_presentation):
    normal_flags = {(t.index, is_normal(t)) for t in low_index_subgroups(s3_presentation, 6)}
    assert normal_flags == {(1, True), (2, True), (3, False), (6, True)}


def test_is_normal_requires_complete_table(free2):
    with pytest.raises(IncompleteTableError):
        is_normal(CosetTable(free2, ((None, None, None, None),)))


# --- Errores ---

def test_max_index_range(free2):
    with pytest.raises(ValueError):
        low_index_subgroups(free2, 0)
    with pytest.raises(IndexCapExceeded):
        low_index_subgroups(free2, HARD_MAX_INDEX + 1)


# --- Paralelismo ---

def test_result_does_not_depend_on_executor(bs):
    presentation = bs(2, 2)
    sequential = low_index_subgroups(presentation, 4, SequentialBranchExecutor())
    parallel = low_index_subgroups(presentation, 4, ProcessBranchExecutor(2))
    assert [t.rows for t in parallel] == [t.rows for t in sequential]
    assert [t.subgroup_gens for t in parallel] == [t.subgroup_gens for t in sequential]
