import pytest


@pytest.fixture(autouse=True)
def _default_field_cap(monkeypatch):
    # the suite assumes the default cap; tests that exercise the env
    # variable set it explicitly
    monkeypatch.delenv("RPL_MAX_FIELD", raising=False)
