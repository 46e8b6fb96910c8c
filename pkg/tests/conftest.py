"""Configure the pytests."""

from __future__ import annotations

import pytest

from su23.common.config_helper import ConfigHelper
from su23.common.logging_helper import LoggingHelper

LoggingHelper.configure_for_test()


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """
    Every test starts from the built-in defaults, whatever the environment or home directory holds.
    """
    monkeypatch.delenv('SU23_BUDGET_SECONDS', raising=False)
    monkeypatch.delenv('SU23_SEED', raising=False)
    monkeypatch.setattr(ConfigHelper, 'LOAD_PATHS', [])
    ConfigHelper.reset()
    yield
    ConfigHelper.reset()
