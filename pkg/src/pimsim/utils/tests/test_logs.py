"""
Tests for logging setup.
"""

import logging
from pathlib import Path
from typing import Iterator

import pytest

from pimsim.utils.logger import get_logger, setup_logging


@pytest.fixture(autouse=True)
def restore_root_logger() -> Iterator[None]:
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers = handlers
    root.setLevel(level)


def test_file_handler_receives_debug(tmp_path: Path) -> None:
    log_file = setup_logging(tmp_path / "nested" / "run.log")
    get_logger("pimsim.test").debug("dispatching %d components", 3)
    for handler in logging.getLogger().handlers:
        handler.flush()
    text = log_file.read_text(encoding="utf-8")
    assert "pimsim.test - DEBUG - dispatching 3 components" in text


def test_log_dir_from_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("PIMSIM_LOG_DIR", str(tmp_path / "logs"))
    assert setup_logging() == tmp_path / "logs" / "pimsim.log"
    assert (tmp_path / "logs").is_dir()


@pytest.mark.parametrize(("name", "expected"), [("DEBUG", logging.DEBUG), ("info", logging.INFO), ("bogus", logging.WARNING)])
def test_console_level_from_environment(
    name: str, expected: int, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setenv("PIMSIM_LOG_LEVEL", name)
    setup_logging(tmp_path / "run.log")
    console = [h for h in logging.getLogger().handlers if type(h) is logging.StreamHandler]
    assert [h.level for h in console] == [expected]


def test_explicit_console_level_wins(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("PIMSIM_LOG_LEVEL", "DEBUG")
    setup_logging(tmp_path / "run.log", console_level=logging.ERROR)
    console = [h for h in logging.getLogger().handlers if type(h) is logging.StreamHandler]
    assert console[0].level == logging.ERROR
