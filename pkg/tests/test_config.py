import pytest

from src.clients.fixture_client import DEFAULT_DATA_DIR
from src.config import Config

VARIABLES = ("METROFAN_THREADS", "METROFAN_DATA_DIR", "METROFAN_QUIET", "METROFAN_DEBUG")


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    # set then delete so teardown removes anything load_dotenv writes
    for name in VARIABLES:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    return tmp_path / ".env"


def test_defaults(clean_env):
    config = Config.from_env(clean_env)
    assert config.threads == 1
    assert config.data_dir == DEFAULT_DATA_DIR
    assert not config.quiet
    assert not config.debug


def test_environment_overrides(clean_env, monkeypatch, tmp_path):
    monkeypatch.setenv("METROFAN_THREADS", "4")
    monkeypatch.setenv("METROFAN_DATA_DIR", str(tmp_path))
    monkeypatch.setenv("METROFAN_QUIET", "yes")
    config = Config.from_env(clean_env)
    assert config.threads == 4
    assert config.data_dir == tmp_path
    assert config.quiet


def test_dotenv_file_is_read(clean_env):
    clean_env.write_text("METROFAN_THREADS=3\nMETROFAN_DEBUG=1\n")
    config = Config.from_env(clean_env)
    assert config.threads == 3
    assert config.debug


@pytest.mark.parametrize("value", ["0", "-2", "many"])
def test_threads_must_be_positive(clean_env, monkeypatch, value):
    monkeypatch.setenv("METROFAN_THREADS", value)
    with pytest.raises(ValueError, match="METROFAN_THREADS"):
        Config.from_env(clean_env)


def test_missing_data_dir(clean_env, monkeypatch, tmp_path):
    monkeypatch.setenv("METROFAN_DATA_DIR", str(tmp_path / "nowhere"))
    with pytest.raises(ValueError):
        Config.from_env(clean_env)
