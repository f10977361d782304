import pytest


@pytest.fixture(autouse=True)
def _reset_global_states(monkeypatch, tmp_path):
    """Make tests deterministic by isolating them from the caller's environment.

    - Clears the cached settings so each test reads its own environment
    - Removes WORKBENCH_* variables and runs inside an empty directory (no stray .env)
    """
    import os

    from workbench.services.settings import get_settings

    for key in list(os.environ):
        if key.startswith("WORKBENCH_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    get_settings.cache_clear()

    yield

    get_settings.cache_clear()
