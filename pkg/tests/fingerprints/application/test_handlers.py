# tests/fingerprints/application/test_handlers.py
"""
Pruebas del handler de huellas finitas.
"""
import pytest
from unittest.mock import patch

from profinito.fingerprints.application.queries.compute_fingerprint_query import ComputeFingerprintQuery
from profinito.fingerprints.application.queries.handlers import handle_compute_fingerprint
from profinito.fingerprints.domain.models import FingerprintCapExceeded
from profinito.subgroups.infrastructure.parallel.executors import SequentialBranchExecutor

HANDLER_MODULE = "profinito.fingerprints.application.queries.handlers"


def test_handle_compute_fingerprint_success(bs):
    # 1. Arrange
    query = ComputeFingerprintQuery(bs(1, 1), max_order=3)

    # 2. Act
    fingerprint = handle_compute_fingerprint(query, SequentialBranchExecutor())

    # 3. Assert
    assert [c.order for c in fingerprint.classes] == [1, 2, 3]


def test_handle_passes_arguments_to_domain(free2):
    executor = SequentialBranchExecutor()
    query = ComputeFingerprintQuery(free2, max_order=5, iso_cap=100)
    with patch(f"{HANDLER_MODULE}.compute_fingerprint", return_value="fingerprint") as mock_compute:
        assert handle_compute_fingerprint(query, executor) == "fingerprint"
    mock_compute.assert_called_once_with(free2, 5, executor, 100)


def test_cap_errors_propagate(free2):
    with pytest.raises(FingerprintCapExceeded):
        handle_compute_fingerprint(ComputeFingerprintQuery(free2, max_order=100), SequentialBranchExecutor())


def test_unexpected_errors_are_wrapped(free2):
    with patch(f"{HANDLER_MODULE}.compute_fingerprint", side_effect=KeyError("boom")):
        with pytest.raises(RuntimeError, match="Fingerprint computation failed"):
            handle_compute_fingerprint(ComputeFingerprintQuery(free2, 2), SequentialBranchExecutor())
